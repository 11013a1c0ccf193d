// Acceptance suite: one line per criterion, PASS or FAIL, nonzero exit on any
// failure.  Criteria may be selected by number on the command line
// (default: all).  LCDLP_ACCEPT_BUDGET sets the per-solve budget in seconds
// (default 120); cells that exceed it are reported as unknown and excluded
// from assertions.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lcdlp/geometry.hpp"
#include "lcdlp/invariants.hpp"
#include "lcdlp/lp.hpp"

using namespace lcdlp;

namespace {

double budget_seconds() {
    const char* env = std::getenv("LCDLP_ACCEPT_BUDGET");
    if (!env) return 120.0;
    return std::atof(env);
}

SolveControl budget_control() {
    SolveControl ctl;
    const double b = budget_seconds();
    if (b > 0)
        ctl.deadline = std::chrono::steady_clock::now() +
                       std::chrono::microseconds(static_cast<long long>(b * 1e6));
    return ctl;
}

enum Feas : int { kInfeasible = 0, kFeasible = 1, kUnknown = 2 };

// Shared LP feasibility cache over (model, n, k, d); model 0 = joint,
// 1 = restricted.
class FeasCache {
public:
    Feas get(int model, int n, int k, int d) {
        const std::array<int, 4> key = {model, n, k, d};
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        Feas f;
        try {
            const auto s = model == 0 ? build_joint_system(n, k, d)
                                      : build_restricted_system(n, k, d);
            auto res = solve(s, std::nullopt, Sense::Maximize, budget_control());
            f = res.status == LpStatus::Infeasible ? kInfeasible : kFeasible;
        } catch (const BudgetTimeout&) {
            f = kUnknown;
        }
        cache_[key] = f;
        return f;
    }

private:
    std::map<std::array<int, 4>, Feas> cache_;
};

struct OracleCell {
    int oracle_dmax = 0;                      // best min distance over LCD codes
    std::vector<BinaryCode> samples;          // first few LCD codes
    std::vector<std::pair<int, BinaryCode>> far_codes;  // LCD codes kept for
                                              // integral-point cross checks
};

// One sweep of all [n,k] codes per cell.  For n <= 5 every LCD code is kept;
// for larger n only those of distance >= 3 (the low-dimension polytopes all
// sit at d >= 3 there).
std::map<std::pair<int, int>, OracleCell> oracle_sweep(int n_max) {
    std::map<std::pair<int, int>, OracleCell> out;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k) {
            OracleCell cell;
            for_each_code(n, k, [&](const BinaryCode& c) {
                if (!is_lcd(c)) return true;
                const int dist = min_distance(c);
                cell.oracle_dmax = std::max(cell.oracle_dmax, dist);
                if (cell.samples.size() < 5) cell.samples.push_back(c);
                if (n <= 5 || dist >= 3) cell.far_codes.emplace_back(dist, c);
                return true;
            });
            out[{n, k}] = std::move(cell);
            std::cerr << "  oracle sweep " << n << "," << k << " done\r";
        }
    std::cerr << "\n";
    return out;
}

struct Verdict {
    bool pass = true;
    std::string detail;
};

using Oracle = std::map<std::pair<int, int>, OracleCell>;

Verdict criterion1(FeasCache& lp, const Oracle& oracle) {
    Verdict v;
    int checked = 0, violations = 0;
    for (const auto& [nk, cell] : oracle)
        for (int d = 1; d <= cell.oracle_dmax; ++d) {
            ++checked;
            if (lp.get(0, nk.first, nk.second, d) != kFeasible) {
                ++violations;
                v.pass = false;
            }
        }
    std::ostringstream os;
    os << checked << " oracle-backed triples, " << violations << " violations";
    v.detail = os.str();
    return v;
}

Verdict criterion2(const Oracle& oracle) {
    Verdict v;
    int checked = 0, violations = 0;
    for (const auto& [nk, cell] : oracle)
        for (const auto& c : cell.samples) {
            const int dist = std::min(min_distance(c), c.n);
            if (dist < 1) continue;
            const auto s = build_joint_system(c.n, c.k, dist);
            const auto je = joint_enumerator(c, dual(c));
            auto pt = enumerator_point(s, je);
            ++checked;
            if (!pt || !satisfies(s, *pt)) {
                ++violations;
                v.pass = false;
            }
        }
    if (checked < 100) v.pass = false;
    std::ostringstream os;
    os << checked << " enumerators (need >= 100), " << violations << " outside the polytope";
    v.detail = os.str();
    return v;
}

std::vector<BinaryCode> general_codes(int n_max, int per_cell) {
    std::vector<BinaryCode> out;
    for (int n = 2; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k) {
            int taken = 0;
            for_each_code(n, k, [&](const BinaryCode& c) {
                out.push_back(c);
                return ++taken < per_cell;
            });
        }
    return out;
}

Verdict criterion3(const std::vector<BinaryCode>& codes) {
    Verdict v;
    int checked = 0, violations = 0;
    std::map<int, RationalMatrix> mw;
    for (const auto& c : codes) {
        const int n = c.n;
        const auto je = joint_enumerator(c, dual(c));
        const CompositionIndex idx(n);
        bool ok = true;
        for (std::size_t i = 0; i < idx.size(); ++i)
            if (idx.at(i).n11 % 2 == 1 && je.coeffs[i] != 0) ok = false;
        auto [it, fresh] = mw.try_emplace(n, 0, 0);
        if (fresh) it->second = macwilliams_monomial_matrix(n);
        const RationalMatrix& m = it->second;
        for (std::size_t i = 0; i < idx.size() && ok; ++i) {
            Rational acc = 0;
            for (std::size_t j = 0; j < idx.size(); ++j)
                if (m(i, j) != 0 && je.coeffs[j] != 0) acc += m(i, j) * Rational(je.coeffs[j]);
            if (acc != Rational(je.coeffs[i])) ok = false;
        }
        if (n % 2 == 0) {
            // -I scales a degree-n form by (-1)^n; verified by substitution
            MatrixGroup neg;
            RationalMatrix ni(4, 4);
            for (int t = 0; t < 4; ++t) ni(t, t) = -1;
            neg.elements.push_back(std::move(ni));
            if (!check_enumerator_invariance(je, neg)) ok = false;
        }
        ++checked;
        if (!ok) {
            ++violations;
            v.pass = false;
        }
    }
    if (checked < 100) v.pass = false;
    std::ostringstream os;
    os << checked << " codes (need >= 100), " << violations << " proposition failures";
    v.detail = os.str();
    return v;
}

Verdict criterion4(FeasCache& lp) {
    Verdict v;
    int violations = 0, unknown = 0;
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k)
            for (int d = 1; d <= n; ++d) {
                const Feas j = lp.get(0, n, k, d);
                const Feas r = lp.get(1, n, k, d);
                if (j == kUnknown || r == kUnknown) {
                    ++unknown;
                    continue;
                }
                if (j == kFeasible && r == kInfeasible) {
                    ++violations;
                    v.pass = false;
                }
            }
    std::ostringstream os;
    os << "full n <= 10 grid, " << violations << " projection violations, " << unknown
       << " unknown cells";
    v.detail = os.str();
    return v;
}

Verdict criterion5(const std::vector<BinaryCode>& codes) {
    Verdict v;
    int checked = 0, violations = 0;
    for (const auto& c : codes) {
        if (checked >= 60) break;
        const auto a = weight_distribution(c);
        const auto b = krawtchuk_dual_distribution(a, c.k);
        const auto bd = weight_distribution(dual(c));
        bool ok = true;
        for (int i = 0; i <= c.n; ++i)
            if (b[i] != Rational(bd.counts[i])) ok = false;
        ++checked;
        if (!ok) {
            ++violations;
            v.pass = false;
        }
    }
    if (checked < 50) v.pass = false;
    std::ostringstream os;
    os << checked << " codes (need >= 50), " << violations
       << " Krawtchuk/brute-force mismatches";
    v.detail = os.str();
    return v;
}

Verdict criterion6() {
    Verdict v;
    auto g = close_group(make_group_generators());
    if (g.elements.size() != 12) v.pass = false;
    auto s = molien_series(g, 20);
    auto closed = molien_closed_form(20);
    const bool series_ok = s == closed;
    if (!series_ok) v.pass = false;
    bool dims_ok = true;
    for (int d = 0; d <= 12; ++d)
        if (Rational(invariant_dimension(g, d)) != s.coefficients[d]) dims_ok = false;
    if (!dims_ok) v.pass = false;
    std::ostringstream os;
    os << "order " << g.elements.size() << "; series "
       << to_string(s.coefficients[0]) << "," << to_string(s.coefficients[2]) << ","
       << to_string(s.coefficients[4]) << "," << to_string(s.coefficients[6])
       << " (even degrees) " << (series_ok ? "==" : "!=")
       << " (1+t^2+2t^4)/((1-t^2)^3(1-t^6)); dimensions d<=12 "
       << (dims_ok ? "match" : "MISMATCH");
    v.detail = os.str();
    return v;
}

Verdict criterion7() {
    Verdict v;
    std::ostringstream os;
    for (int model = 0; model < 2; ++model) {
        const auto s =
            model == 0 ? build_joint_system(4, 2, 4) : build_restricted_system(4, 2, 4);
        auto res = solve(s);
        const bool ok = res.status == LpStatus::Infeasible && res.certificate &&
                        verify_certificate(s, *res.certificate);
        if (!ok) v.pass = false;
        os << (model == 0 ? "joint" : "restricted") << " (4,2,4): "
           << (ok ? "INFEASIBLE, certificate verified" : "FAILED") << (model == 0 ? "; " : "");
    }
    v.detail = os.str();
    return v;
}

Verdict criterion8(FeasCache& lp) {
    Verdict v;
    int violations = 0;
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k)
            for (int d1 = 1; d1 < n; ++d1)
                for (int d2 = d1 + 1; d2 <= n; ++d2)
                    if (lp.get(0, n, k, d1) == kInfeasible && lp.get(0, n, k, d2) == kFeasible) {
                        ++violations;
                        v.pass = false;
                    }
    std::ostringstream os;
    os << "all (n,k) with n <= 10: " << violations << " non-monotone d patterns";
    v.detail = os.str();
    return v;
}

Verdict criterion9(FeasCache& lp, const Oracle& oracle) {
    Verdict v;
    int triples = 0, vertex_violations = 0, membership_violations = 0;
    std::vector<std::string> candidates;
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k)
            for (int d = 1; d <= n; ++d) {
                if (lp.get(0, n, k, d) != kFeasible) continue;
                const auto s = build_joint_system(n, k, d);
                auto sum = summarize(s, budget_control());
                if (sum.empty || sum.dimension > 4) continue;
                ++triples;
                std::cerr << "  geometry " << n << "," << k << "," << d
                          << " dim=" << sum.dimension << "\r";
                auto geo = double_description(s, sum, 4, 100000, budget_control());
                for (const auto& vx : geo.vertices)
                    if (!satisfies(s, vx)) {
                        ++vertex_violations;
                        v.pass = false;
                    }
                std::set<std::vector<Int>> pts(geo.integral_points.begin(),
                                               geo.integral_points.end());
                const auto& cell = oracle.at({n, k});
                const bool complete_list = n <= 5 || d >= 3;
                if (complete_list) {
                    for (const auto& [dist, code] : cell.far_codes) {
                        if (dist < d) continue;
                        auto pt = enumerator_point(s, joint_enumerator(code, dual(code)));
                        if (!pt) {
                            ++membership_violations;
                            v.pass = false;
                            continue;
                        }
                        std::vector<Int> ip;
                        for (const auto& q : *pt) ip.push_back(q.get_num());
                        if (!pts.count(ip)) {
                            ++membership_violations;
                            v.pass = false;
                        }
                    }
                }
                if (geo.integral_point_count == 0) {
                    std::ostringstream c;
                    c << "(" << n << "," << k << "," << d << ")";
                    candidates.push_back(c.str());
                }
            }
    std::cerr << "\n";
    std::ostringstream os;
    os << triples << " low-dimension triples; " << vertex_violations << " vertex violations, "
       << membership_violations << " missing oracle enumerators";
    if (!candidates.empty()) {
        os << "; integral-point-free polytopes (reported, not asserted):";
        for (const auto& c : candidates) os << " " << c;
    }
    v.detail = os.str();
    return v;
}

Verdict criterion10(FeasCache& lp) {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    // Feasibility of one cell with the table generator's known-code shortcuts.
    auto cell = [&](int n, int k, int d) -> Feas {
        if (d == 1) return kFeasible;
        if (d == 2 && k == n - 1 && n % 2 == 1) return kFeasible;
        return lp.get(0, n, k, d);
    };
    int unknown = 0;
    std::map<std::pair<int, int>, std::optional<int>> dmax;
    std::vector<std::string> gaps10;
    int gaps_high = 0;
    for (int n = 1; n <= 12; ++n)
        for (int d = 1; d <= n; ++d) {
            bool cell_unknown = false;
            std::vector<Feas> ok(n + 1, kInfeasible);
            for (int k = 1; k <= n; ++k) {
                ok[k] = cell(n, k, d);
                std::cerr << "  table " << n << "," << k << "," << d << "    \r";
                if (ok[k] == kUnknown) cell_unknown = true;
            }
            if (cell_unknown) ++unknown;
            for (int k = 1; k <= n; ++k) {
                if (ok[k] == kFeasible)
                    dmax[{n, k}] = std::max(dmax[{n, k}].value_or(0), d);
                for (int k2 = k + 1; k2 <= n; ++k2)
                    if (ok[k] == kInfeasible && ok[k2] == kFeasible) {
                        if (n <= 10) {
                            std::ostringstream g;
                            g << "(n=" << n << ",d=" << d << ",k=" << k << "<" << k2 << ")";
                            gaps10.push_back(g.str());
                            v.pass = false;
                        } else {
                            ++gaps_high;
                        }
                    }
            }
        }
    std::cerr << "\n";
    // parity-check lower bound: d_max(n, n-1) >= 2 for odd n, via the LP
    // itself (no shortcut)
    int parity_violations = 0;
    for (int n = 3; n <= 12; n += 2)
        if (lp.get(0, n, n - 1, 2) == kInfeasible) {
            ++parity_violations;
            v.pass = false;
        }
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    std::ostringstream os;
    os << "n <= 12 dmax/kmax tables in " << secs << "s, " << unknown
       << " unknown cells, " << parity_violations << " parity-bound violations";
    if (!gaps10.empty()) {
        os << "; k-monotonicity gaps at n <= 10:";
        for (const auto& g : gaps10) os << " " << g;
    }
    if (gaps_high > 0) os << "; " << gaps_high << " k-gaps at n in {11,12} (reported only)";
    v.detail = os.str();
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
    auto selected = [&](int c) { return wanted.empty() || wanted.count(c); };

    FeasCache lp;
    Oracle oracle;
    std::vector<BinaryCode> codes;
    if (selected(1) || selected(2) || selected(9)) {
        std::cerr << "precomputing oracle data (n <= 8)...\n";
        oracle = oracle_sweep(8);
    }
    if (selected(3) || selected(5)) codes = general_codes(10, 3);

    int failures = 0;
    auto report = [&](int num, const Verdict& v) {
        std::cout << "criterion " << num << ": " << (v.pass ? "PASS" : "FAIL") << " — "
                  << v.detail << std::endl;
        if (!v.pass) ++failures;
    };

    if (selected(1)) report(1, criterion1(lp, oracle));
    if (selected(2)) report(2, criterion2(oracle));
    if (selected(3)) report(3, criterion3(codes));
    if (selected(4)) report(4, criterion4(lp));
    if (selected(5)) report(5, criterion5(codes));
    if (selected(6)) report(6, criterion6());
    if (selected(7)) report(7, criterion7());
    if (selected(8)) report(8, criterion8(lp));
    if (selected(9)) report(9, criterion9(lp, oracle));
    if (selected(10)) report(10, criterion10(lp));

    if (failures) {
        std::cout << failures << " criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all selected criteria passed" << std::endl;
    return 0;
}
