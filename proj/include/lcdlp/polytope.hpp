#ifndef LCDLP_POLYTOPE_HPP
#define LCDLP_POLYTOPE_HPP

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcdlp/combinatorics.hpp"
#include "lcdlp/gf2.hpp"
#include "lcdlp/rational.hpp"

namespace lcdlp {

enum class VarKind { M, A, B };

struct VariableIndex {
    VarKind kind = VarKind::M;
    Composition comp{};  // valid for M
    int weight = -1;     // valid for A/B

    std::string name() const {
        std::ostringstream os;
        if (kind == VarKind::M)
            os << "M(" << comp.n00 << "," << comp.n01 << "," << comp.n10 << "," << comp.n11 << ")";
        else
            os << (kind == VarKind::A ? 'A' : 'B') << weight;
        return os.str();
    }

    bool operator==(const VariableIndex& o) const {
        return kind == o.kind && comp == o.comp && weight == o.weight;
    }
};

struct LinRow {
    std::vector<Rational> coeffs;
    Rational rhs;
    std::string tag;  // provenance: the constraint family this row came from

    bool operator==(const LinRow& o) const {
        return coeffs == o.coeffs && rhs == o.rhs && tag == o.tag;
    }
};

// H-representation with exact coefficients: equalities coeff.x = rhs and
// inequalities coeff.x <= rhs over the listed variables.  Variables forced to
// zero by a constraint family are dropped from the list and recorded in
// `eliminated`; A/B substitutions are recorded in `notes`.
struct ConstraintSystem {
    int n = 0, k = 0, d = 0;
    std::vector<VariableIndex> variables;
    std::vector<LinRow> equalities;
    std::vector<LinRow> inequalities;
    std::vector<std::pair<VariableIndex, std::string>> eliminated;
    std::vector<std::string> notes;

    bool operator==(const ConstraintSystem& o) const {
        return n == o.n && k == o.k && d == o.d && variables == o.variables &&
               equalities == o.equalities && inequalities == o.inequalities &&
               eliminated == o.eliminated && notes == o.notes;
    }
};

struct JointOptions {
    bool use_prop2 = true;         // fixed-point equations of the MacWilliams transform
    bool use_normalization = true; // M(n,0,0,0) = 1 (off in strict-paper mode)
};

inline void check_parameters(int n, int k, int d) {
    if (n < 1 || k < 1 || k > n || d < 1 || d > n)
        throw std::invalid_argument("invalid parameters: need 1 <= k <= n and 1 <= d <= n");
}

// The joint polytope K(n,k,d) over the M-coefficients.
inline ConstraintSystem build_joint_system(int n, int k, int d, JointOptions opt = {}) {
    check_parameters(n, k, d);
    CompositionIndex idx(n);
    ConstraintSystem s;
    s.n = n;
    s.k = k;
    s.d = d;

    // Variable elimination: odd pairing count (orthogonality), the LCD family,
    // and the below-distance weight slice.
    std::vector<std::string> elim_tag(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const Composition& c = idx.at(i);
        if (c.n11 % 2 == 1) elim_tag[i] = "2";
        else if (c.n01 == 0 && c.n10 == 0 && c.n11 == n - c.n00 && c.n00 < n) elim_tag[i] = "7";
        else if (c.n01 == 0 && c.n11 == 0 && c.n10 > 0 && c.n10 < d) elim_tag[i] = "8";
    }
    std::vector<std::size_t> var_of(idx.size(), SIZE_MAX);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (!elim_tag[i].empty()) {
            s.eliminated.push_back({{VarKind::M, idx.at(i), -1}, elim_tag[i]});
            continue;
        }
        var_of[i] = s.variables.size();
        s.variables.push_back({VarKind::M, idx.at(i), -1});
    }
    const std::size_t nv = s.variables.size();

    auto a_slice = [&](int w) { return var_of[idx.index({n - w, 0, w, 0})]; };
    auto b_slice = [&](int w) { return var_of[idx.index({n - w, w, 0, 0})]; };

    auto add = [&](std::vector<Rational> coeffs, Rational rhs, std::string tag, bool eq) {
        LinRow row{std::move(coeffs), std::move(rhs), std::move(tag)};
        (eq ? s.equalities : s.inequalities).push_back(std::move(row));
    };

    s.notes.push_back("4: A_i substituted by M(n-i,0,i,0)");
    s.notes.push_back("5: B_i substituted by M(n-i,i,0,0)");

    // Code size: sum_w A_w = 2^k.
    {
        std::vector<Rational> c(nv);
        for (int w = 0; w <= n; ++w)
            if (a_slice(w) != SIZE_MAX) c[a_slice(w)] += 1;
        add(std::move(c), rat(pow2(k)), "1", true);
    }

    // Nonnegativity of every retained coefficient.
    for (std::size_t j = 0; j < nv; ++j) {
        std::vector<Rational> c(nv);
        c[j] = -1;
        add(std::move(c), rat(0), "3", false);
    }

    // Packing: A_w + B_w <= binom(n,w) for w >= 1.
    for (int w = 1; w <= n; ++w) {
        std::vector<Rational> c(nv);
        if (a_slice(w) != SIZE_MAX) c[a_slice(w)] += 1;
        if (b_slice(w) != SIZE_MAX) c[b_slice(w)] += 1;
        add(std::move(c), rat(binomial(n, w)), "6", false);
    }

    // Pair marginals: 2^(n-k) A_p = sum over n10+n11 = p, 2^k B_p = sum over n01+n11 = p.
    for (int p = 0; p <= n; ++p) {
        std::vector<Rational> ca(nv), cb(nv);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (var_of[i] == SIZE_MAX) continue;
            const Composition& comp = idx.at(i);
            if (comp.n10 + comp.n11 == p) ca[var_of[i]] += 1;
            if (comp.n01 + comp.n11 == p) cb[var_of[i]] += 1;
        }
        if (a_slice(p) != SIZE_MAX) ca[a_slice(p)] -= rat(pow2(n - k));
        if (b_slice(p) != SIZE_MAX) cb[b_slice(p)] -= rat(pow2(k));
        add(std::move(ca), rat(0), "9", true);
        add(std::move(cb), rat(0), "10", true);
    }

    // Fixed-point equations of the MacWilliams transform, scaled integral.
    if (opt.use_prop2) {
        RationalMatrix t = macwilliams_monomial_matrix(n);
        const Int scale = pow2(n);
        for (std::size_t m = 0; m < idx.size(); ++m) {
            std::vector<Rational> c(nv);
            bool nonzero = false;
            for (std::size_t col = 0; col < idx.size(); ++col) {
                if (var_of[col] == SIZE_MAX) continue;
                Rational v = -t(m, col) * scale;
                if (m == col) v += scale;
                if (v != 0) {
                    c[var_of[col]] = v;
                    nonzero = true;
                }
            }
            if (nonzero) add(std::move(c), rat(0), "prop2", true);
        }
    }

    if (opt.use_normalization) {
        std::vector<Rational> c(nv);
        c[var_of[idx.index({n, 0, 0, 0})]] = 1;
        add(std::move(c), rat(1), "norm", true);
    }

    return s;
}

// The restricted polytope K_res(n,k,d) over A_d..A_n, with A_0 = 1 folded in
// and every B_i expanded through the Krawtchuk transform 2^-k sum_j A_j P_i(j).
// Rows are scaled by 2^k to stay integral.
inline ConstraintSystem build_restricted_system(int n, int k, int d) {
    check_parameters(n, k, d);
    ConstraintSystem s;
    s.n = n;
    s.k = k;
    s.d = d;
    for (int w = 1; w < d; ++w) s.eliminated.push_back({{VarKind::A, {}, w}, "res3"});
    for (int w = d; w <= n; ++w) s.variables.push_back({VarKind::A, {}, w});
    s.notes.push_back("res2: A_0 = B_0 = 1 folded into the rows");
    s.notes.push_back("res5: B_i expanded via the Krawtchuk transform");
    const std::size_t nv = s.variables.size();
    auto var = [&](int w) { return static_cast<std::size_t>(w - d); };
    const KrawtchukTable kt = krawtchuk_table(n);
    const Int twok = pow2(k);

    // Size equation from B_0 = 1: sum_j A_j = 2^k - 1.
    {
        LinRow row;
        row.coeffs.assign(nv, rat(1));
        row.rhs = rat(twok - 1);
        row.tag = "res2";
        s.equalities.push_back(std::move(row));
    }

    // A_i >= 0.
    for (int w = d; w <= n; ++w) {
        LinRow row;
        row.coeffs.assign(nv, rat(0));
        row.coeffs[var(w)] = -1;
        row.rhs = rat(0);
        row.tag = "res1";
        s.inequalities.push_back(std::move(row));
    }

    // Delsarte inequalities B_i >= 0: -sum_j P_i(j) A_j <= P_i(0).
    for (int i = 1; i <= n; ++i) {
        LinRow row;
        row.coeffs.assign(nv, rat(0));
        for (int j = d; j <= n; ++j) row.coeffs[var(j)] = rat(-kt.at(i, j));
        row.rhs = rat(kt.at(i, 0));
        row.tag = "res1";
        s.inequalities.push_back(std::move(row));
    }

    // Packing A_i + B_i <= binom(n,i), i.e.
    // 2^k A_i + sum_j P_i(j) A_j <= (2^k - 1) binom(n,i).
    for (int i = 1; i <= n; ++i) {
        LinRow row;
        row.coeffs.assign(nv, rat(0));
        for (int j = d; j <= n; ++j) row.coeffs[var(j)] = rat(kt.at(i, j));
        if (i >= d) row.coeffs[var(i)] += rat(twok);
        row.rhs = rat((twok - 1) * binomial(n, i));
        row.tag = "res4";
        s.inequalities.push_back(std::move(row));
    }

    return s;
}

// Dual weight distribution through the Krawtchuk transform (the MacWilliams
// identity for weight enumerators).
inline std::vector<Rational> krawtchuk_dual_distribution(const WeightDistribution& a, int k) {
    const int n = a.n;
    const KrawtchukTable kt = krawtchuk_table(n);
    std::vector<Rational> b(n + 1);
    const Int twok = pow2(k);
    for (int i = 0; i <= n; ++i) {
        Int acc = 0;
        for (int j = 0; j <= n; ++j) acc += a.counts[j] * kt.at(i, j);
        b[i] = rat(acc, twok);
    }
    return b;
}

// ---------------------------------------------------------------------------
// Point evaluation

inline bool satisfies(const ConstraintSystem& s, const std::vector<Rational>& x) {
    if (x.size() != s.variables.size()) return false;
    auto dot = [&](const LinRow& r) {
        Rational acc = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (r.coeffs[j] != 0) acc += r.coeffs[j] * x[j];
        return acc;
    };
    for (const auto& r : s.equalities)
        if (dot(r) != r.rhs) return false;
    for (const auto& r : s.inequalities)
        if (dot(r) > r.rhs) return false;
    return true;
}

// Maps a joint enumerator onto the variable vector of a joint system.
// Returns nullopt when the enumerator has mass on an eliminated coefficient
// (in which case it cannot lie in the polytope).
inline std::optional<std::vector<Rational>> enumerator_point(const ConstraintSystem& s,
                                                            const JointEnumerator& je) {
    if (je.n != s.n) throw std::invalid_argument("enumerator_point: length mismatch");
    CompositionIndex idx(s.n);
    std::vector<Rational> x(s.variables.size());
    for (std::size_t j = 0; j < s.variables.size(); ++j)
        x[j] = rat(je.coeffs[idx.index(s.variables[j].comp)]);
    for (const auto& [v, tag] : s.eliminated)
        if (v.kind == VarKind::M && je.coeffs[idx.index(v.comp)] != 0) return std::nullopt;
    return x;
}

// ---------------------------------------------------------------------------
// cdd-style .ine export, deterministic byte-for-byte.

inline void export_h_representation(const ConstraintSystem& s, std::ostream& out) {
    out << "* lcdlp polytope n=" << s.n << " k=" << s.k << " d=" << s.d << "\n";
    for (const auto& v : s.variables) out << "* var " << v.name() << "\n";
    for (const auto& [v, tag] : s.eliminated) out << "* elim " << v.name() << " " << tag << "\n";
    for (const auto& note : s.notes) out << "* note " << note << "\n";
    for (const auto& r : s.equalities) out << "* tag " << r.tag << "\n";
    for (const auto& r : s.inequalities) out << "* tag " << r.tag << "\n";
    out << "H-representation\n";
    if (!s.equalities.empty()) {
        out << "linearity " << s.equalities.size();
        for (std::size_t i = 1; i <= s.equalities.size(); ++i) out << " " << i;
        out << "\n";
    }
    const std::size_t rows = s.equalities.size() + s.inequalities.size();
    out << "begin\n" << rows << " " << (s.variables.size() + 1) << " rational\n";
    auto emit = [&](const LinRow& r) {
        out << to_string(r.rhs);
        for (const auto& c : r.coeffs) out << " " << to_string(-c);
        out << "\n";
    };
    for (const auto& r : s.equalities) emit(r);
    for (const auto& r : s.inequalities) emit(r);
    out << "end\n";
}

inline VariableIndex parse_variable_name(const std::string& name) {
    VariableIndex v;
    if (name.empty()) throw std::invalid_argument("empty variable name");
    if (name[0] == 'M') {
        v.kind = VarKind::M;
        int a, b, c, d;
        if (std::sscanf(name.c_str(), "M(%d,%d,%d,%d)", &a, &b, &c, &d) != 4)
            throw std::invalid_argument("bad M variable: " + name);
        v.comp = {a, b, c, d};
    } else if (name[0] == 'A' || name[0] == 'B') {
        v.kind = name[0] == 'A' ? VarKind::A : VarKind::B;
        v.weight = std::stoi(name.substr(1));
    } else {
        throw std::invalid_argument("bad variable name: " + name);
    }
    return v;
}

inline ConstraintSystem parse_h_representation(std::istream& in) {
    ConstraintSystem s;
    std::vector<std::string> tags;
    std::string line;
    std::vector<std::size_t> linearity;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '*') {
            std::istringstream ls(line.substr(1));
            std::string kw;
            ls >> kw;
            if (kw == "lcdlp") {
                std::string tok;
                while (ls >> tok) {
                    if (tok.rfind("n=", 0) == 0) s.n = std::stoi(tok.substr(2));
                    if (tok.rfind("k=", 0) == 0) s.k = std::stoi(tok.substr(2));
                    if (tok.rfind("d=", 0) == 0) s.d = std::stoi(tok.substr(2));
                }
            } else if (kw == "var") {
                std::string name;
                ls >> name;
                s.variables.push_back(parse_variable_name(name));
            } else if (kw == "elim") {
                std::string name, tag;
                ls >> name >> tag;
                s.eliminated.push_back({parse_variable_name(name), tag});
            } else if (kw == "note") {
                std::string rest;
                std::getline(ls, rest);
                if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
                s.notes.push_back(rest);
            } else if (kw == "tag") {
                std::string tag;
                ls >> tag;
                tags.push_back(tag);
            }
            continue;
        }
        if (line == "H-representation") {
            saw_header = true;
            continue;
        }
        if (line.rfind("linearity", 0) == 0) {
            std::istringstream ls(line.substr(9));
            std::size_t count;
            ls >> count;
            for (std::size_t i = 0; i < count; ++i) {
                std::size_t r;
                ls >> r;
                linearity.push_back(r);
            }
            continue;
        }
        if (line == "begin") {
            std::size_t rows, cols;
            std::string kind;
            in >> rows >> cols >> kind;
            if (kind != "rational" && kind != "integer")
                throw std::invalid_argument("unsupported number type: " + kind);
            std::vector<bool> is_eq(rows + 1, false);
            for (auto r : linearity)
                if (r >= 1 && r <= rows) is_eq[r] = true;
            for (std::size_t r = 1; r <= rows; ++r) {
                LinRow row;
                std::string tok;
                in >> tok;
                row.rhs = rational_from_string(tok);
                row.coeffs.resize(cols - 1);
                for (std::size_t j = 0; j + 1 < cols; ++j) {
                    in >> tok;
                    row.coeffs[j] = -rational_from_string(tok);
                }
                if (r - 1 < tags.size()) row.tag = tags[r - 1];
                (is_eq[r] ? s.equalities : s.inequalities).push_back(std::move(row));
            }
            std::getline(in, line);  // trailing newline of the last row
            continue;
        }
        if (line == "end") break;
    }
    if (!saw_header) throw std::invalid_argument("missing H-representation header");
    if (s.variables.empty())
        for (std::size_t j = 0; !s.equalities.empty() && j < s.equalities[0].coeffs.size(); ++j)
            s.variables.push_back({VarKind::M, {}, -1});
    return s;
}

}  // namespace lcdlp

#endif
