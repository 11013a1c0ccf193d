#ifndef LCDLP_LP_HPP
#define LCDLP_LP_HPP

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lcdlp/polytope.hpp"
#include "lcdlp/rational.hpp"

namespace lcdlp {

enum class LpStatus { Feasible, Infeasible, Unbounded };
enum class Sense { Maximize, Minimize };

struct FarkasCertificate {
    // Nonnegative combination of inequality rows plus a free combination of
    // equality rows that derives 0 <= negative.
    std::vector<Rational> eq_multipliers;
    std::vector<Rational> ineq_multipliers;
};

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::optional<std::vector<Rational>> point;
    std::optional<Rational> objective_value;
    std::optional<FarkasCertificate> certificate;
};

struct BudgetTimeout : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolveControl {
    std::optional<std::chrono::steady_clock::time_point> deadline;
    // Skip the affine-hull reduction and run the plain two-phase tableau.
    bool direct_primal = false;
};

inline bool verify_certificate(const ConstraintSystem& s, const FarkasCertificate& cert) {
    if (cert.eq_multipliers.size() != s.equalities.size()) return false;
    if (cert.ineq_multipliers.size() != s.inequalities.size()) return false;
    for (const auto& v : cert.ineq_multipliers)
        if (v < 0) return false;
    std::vector<Rational> combo(s.variables.size());
    Rational rhs = 0;
    for (std::size_t i = 0; i < s.equalities.size(); ++i) {
        if (cert.eq_multipliers[i] == 0) continue;
        for (std::size_t j = 0; j < combo.size(); ++j)
            combo[j] += cert.eq_multipliers[i] * s.equalities[i].coeffs[j];
        rhs += cert.eq_multipliers[i] * s.equalities[i].rhs;
    }
    for (std::size_t i = 0; i < s.inequalities.size(); ++i) {
        if (cert.ineq_multipliers[i] == 0) continue;
        for (std::size_t j = 0; j < combo.size(); ++j)
            combo[j] += cert.ineq_multipliers[i] * s.inequalities[i].coeffs[j];
        rhs += cert.ineq_multipliers[i] * s.inequalities[i].rhs;
    }
    for (const auto& c : combo)
        if (c != 0) return false;
    return rhs < 0;
}

namespace detail {

// Exact rational simplex.
//
// The workhorse is a two-phase dense tableau (run_primal).  Constraint
// systems built from the joint enumerator carry equality blocks whose rank is
// close to the variable count, so the default path (run_reduced) first
// substitutes the equality block away and then solves the LP dual of the
// reduced problem, whose tableau has only as many rows as the affine hull has
// dimensions.  Points and Farkas certificates are mapped back to the original
// rows either way.
//
// Pivoting is Dantzig's rule for the entering column with a lexicographic
// ratio test for the leaving row, which rules out cycling.
class SimplexSolver {
public:
    SimplexSolver(const ConstraintSystem& s, const SolveControl& ctl) : s_(s), ctl_(ctl) {
        nv_ = s.variables.size();
        reduce_equalities();
    }

    LpResult run(const std::optional<std::vector<Rational>>& objective, Sense sense) {
        if (objective && objective->size() != nv_)
            throw std::invalid_argument("lp solve: objective length mismatch");
        if (inconsistent_eq_) return infeasible_from_rows(*inconsistent_eq_);
        if (ctl_.direct_primal) return run_primal(objective, sense);
        return run_reduced(objective, sense);
    }

private:
    static constexpr std::size_t kNone = SIZE_MAX;

    const ConstraintSystem& s_;
    const SolveControl& ctl_;
    std::size_t nv_ = 0;

    // equality preprocessing
    std::vector<LinRow> red_eq_;           // RREF row basis of the equality block
    std::vector<std::size_t> pivot_cols_;  // pivot column of each reduced row
    std::vector<std::size_t> free_cols_;
    std::optional<std::vector<Rational>> inconsistent_eq_;

    // tableau state (run_primal)
    std::vector<std::size_t> nonneg_row_;
    std::vector<bool> row_absorbed_;
    std::vector<std::size_t> kept_ineq_;
    std::size_t n_struct_ = 0, n_slack_ = 0, m_ = 0, rhs_col_ = 0, n_cols_ = 0;
    std::vector<std::size_t> col_pos_, col_neg_;
    std::vector<int> row_sign_;
    std::vector<std::vector<Int>> tab_;  // rows scaled to integers (scale-invariant)
    std::vector<Rational> cost_;
    std::vector<std::size_t> basis_;
    std::vector<bool> dead_row_;
    long tick_ = 0;

    std::size_t slack_col(std::size_t i) const { return n_struct_ + i; }
    std::size_t art_col(std::size_t r) const { return n_struct_ + n_slack_ + r; }

    // ------------------------------------------------------------------
    // Equality block

    void reduce_equalities() {
        const std::size_t ne = s_.equalities.size();
        RationalMatrix aug(ne, nv_ + 1);
        for (std::size_t i = 0; i < ne; ++i) {
            for (std::size_t j = 0; j < nv_; ++j) aug(i, j) = s_.equalities[i].coeffs[j];
            aug(i, nv_) = s_.equalities[i].rhs;
        }
        pivot_cols_ = lcdlp::detail::rref(aug, nv_);
        for (std::size_t i = pivot_cols_.size(); i < ne; ++i) {
            if (aug(i, nv_) == 0) continue;
            // 0 = nonzero: recover multipliers over the original rows.
            std::vector<LinRow> bad = {LinRow{aug_row_coeffs(aug, i), aug(i, nv_), ""}};
            inconsistent_eq_ = map_to_original_eqs(bad);
            return;
        }
        for (std::size_t r = 0; r < pivot_cols_.size(); ++r) {
            LinRow row;
            row.coeffs = aug_row_coeffs(aug, r);
            row.rhs = aug(r, nv_);
            red_eq_.push_back(std::move(row));
        }
        std::vector<bool> is_pivot(nv_, false);
        for (auto p : pivot_cols_) is_pivot[p] = true;
        for (std::size_t j = 0; j < nv_; ++j)
            if (!is_pivot[j]) free_cols_.push_back(j);
    }

    static std::vector<Rational> aug_row_coeffs(const RationalMatrix& aug, std::size_t i) {
        std::vector<Rational> c(aug.cols() - 1);
        for (std::size_t j = 0; j + 1 < aug.cols(); ++j) c[j] = aug(i, j);
        return c;
    }

    // Express a weighted sum of reduced equality rows as multipliers over the
    // original equality rows (they span the same augmented row space).
    std::vector<Rational> map_to_original_eqs(const std::vector<LinRow>& rows,
                                              const std::vector<Rational>* weights = nullptr) {
        const std::size_t ne = s_.equalities.size();
        if (ne == 0) return {};
        std::vector<Rational> target(nv_ + 1);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            Rational w = weights ? (*weights)[r] : rat(1);
            if (w == 0) continue;
            for (std::size_t j = 0; j < nv_; ++j) target[j] += w * rows[r].coeffs[j];
            target[nv_] += w * rows[r].rhs;
        }
        RationalMatrix mt(nv_ + 1, ne);
        for (std::size_t e = 0; e < ne; ++e) {
            for (std::size_t j = 0; j < nv_; ++j) mt(j, e) = s_.equalities[e].coeffs[j];
            mt(nv_, e) = s_.equalities[e].rhs;
        }
        auto u = solve_linear(mt, target);
        if (!u) throw std::logic_error("simplex: equality multiplier recovery failed");
        return *u;
    }

    LpResult infeasible_from_rows(std::vector<Rational> eq_mult) {
        Rational rhs = 0;
        for (std::size_t e = 0; e < eq_mult.size(); ++e) rhs += eq_mult[e] * s_.equalities[e].rhs;
        if (rhs > 0)
            for (auto& v : eq_mult) v = -v;
        LpResult res;
        res.status = LpStatus::Infeasible;
        FarkasCertificate cert;
        cert.eq_multipliers = std::move(eq_mult);
        cert.ineq_multipliers.assign(s_.inequalities.size(), rat(0));
        res.certificate = std::move(cert);
        return res;
    }

    // ------------------------------------------------------------------
    // Affine-hull reduction: x[pivot r] = red_rhs[r] - sum_{j free} R[r][j] x_j.
    // A row (a, b) restricted to the hull becomes (a', b') over the free
    // columns with a' = a - sum_r a[pivot_r] R[r][.] and
    // b' = b - sum_r a[pivot_r] red_rhs[r].

    struct ReducedRow {
        std::vector<Rational> coeffs;  // over free_cols_
        Rational rhs;
        bool trivial = false;  // coeffs all zero
    };

    ReducedRow substitute(const std::vector<Rational>& a, const Rational& b) const {
        ReducedRow out;
        out.coeffs.assign(free_cols_.size(), rat(0));
        out.rhs = b;
        for (std::size_t f = 0; f < free_cols_.size(); ++f) out.coeffs[f] = a[free_cols_[f]];
        for (std::size_t r = 0; r < red_eq_.size(); ++r) {
            const Rational& w = a[pivot_cols_[r]];
            if (w == 0) continue;
            for (std::size_t f = 0; f < free_cols_.size(); ++f) {
                const Rational& c = red_eq_[r].coeffs[free_cols_[f]];
                if (c != 0) out.coeffs[f] -= w * c;
            }
            out.rhs -= w * red_eq_[r].rhs;
        }
        out.trivial = true;
        for (const auto& c : out.coeffs)
            if (c != 0) {
                out.trivial = false;
                break;
            }
        return out;
    }

    std::vector<Rational> lift_point(const std::vector<Rational>& t) const {
        std::vector<Rational> x(nv_);
        for (std::size_t f = 0; f < free_cols_.size(); ++f) x[free_cols_[f]] = t[f];
        for (std::size_t r = 0; r < red_eq_.size(); ++r) {
            Rational v = red_eq_[r].rhs;
            for (std::size_t f = 0; f < free_cols_.size(); ++f) {
                const Rational& c = red_eq_[r].coeffs[free_cols_[f]];
                if (c != 0) v -= c * t[f];
            }
            x[pivot_cols_[r]] = v;
        }
        return x;
    }

    // Multiplier 1 on inequality row i (whose reduction is trivial with
    // negative rhs) plus equality multipliers refute the system.
    LpResult infeasible_from_trivial_row(std::size_t i) {
        std::vector<Rational> weights(red_eq_.size());
        for (std::size_t r = 0; r < red_eq_.size(); ++r)
            weights[r] = -s_.inequalities[i].coeffs[pivot_cols_[r]];
        LpResult res;
        res.status = LpStatus::Infeasible;
        FarkasCertificate cert;
        cert.eq_multipliers = map_to_original_eqs(red_eq_, &weights);
        cert.ineq_multipliers.assign(s_.inequalities.size(), rat(0));
        cert.ineq_multipliers[i] = 1;
        res.certificate = std::move(cert);
        return res;
    }

    LpResult run_reduced(const std::optional<std::vector<Rational>>& objective, Sense sense) {
        const std::size_t ni = s_.inequalities.size();
        std::vector<ReducedRow> rows(ni);
        std::vector<std::size_t> active;  // rows with a nonzero reduced normal
        for (std::size_t i = 0; i < ni; ++i) {
            rows[i] = substitute(s_.inequalities[i].coeffs, s_.inequalities[i].rhs);
            if (rows[i].trivial) {
                if (rows[i].rhs < 0) return infeasible_from_trivial_row(i);
            } else {
                active.push_back(i);
            }
        }

        // Reduced objective (minimization sense internally).
        std::vector<Rational> cmin;
        Rational cconst = 0;
        if (objective) {
            std::vector<Rational> c = *objective;
            if (sense == Sense::Maximize)
                for (auto& v : c) v = -v;
            ReducedRow rc = substitute(c, rat(0));
            cmin = rc.coeffs;
            cconst = -rc.rhs;  // substitute subtracts the constant from rhs
        }

        auto finish_feasible = [&](std::vector<Rational> t) {
            LpResult res;
            res.status = LpStatus::Feasible;
            res.point = lift_point(t);
            if (objective) {
                Rational v = 0;
                for (std::size_t j = 0; j < nv_; ++j)
                    if ((*objective)[j] != 0) v += (*objective)[j] * (*res.point)[j];
                res.objective_value = v;
            }
            return res;
        };

        if (free_cols_.empty() || active.empty()) {
            // Affine hull is a point, or no inequality cuts the hull.
            if (!free_cols_.empty() && objective) {
                // Unconstrained direction check for the objective.
                for (const auto& c : cmin)
                    if (c != 0) {
                        LpResult res;
                        res.status = LpStatus::Unbounded;
                        res.point = lift_point(std::vector<Rational>(free_cols_.size()));
                        return res;
                    }
            }
            return finish_feasible(std::vector<Rational>(free_cols_.size()));
        }

        // Dual of the reduced problem: min b'.y  s.t.  A'^T y = -c', y >= 0.
        // For pure feasibility, c' = 0 with the normalization sum(y) = 1; the
        // optimal value v then decides emptiness (empty iff v < 0) and the
        // equality duals provide an interior-ish point.
        auto build_inner = [&](bool feasibility_probe) {
            ConstraintSystem inner;
            inner.n = s_.n;
            inner.k = s_.k;
            inner.d = s_.d;
            inner.variables.assign(active.size(), VariableIndex{});
            const std::size_t r = free_cols_.size();
            for (std::size_t f = 0; f < r; ++f) {
                LinRow row;
                row.coeffs.reserve(active.size());
                for (auto i : active) row.coeffs.push_back(rows[i].coeffs[f]);
                row.rhs = feasibility_probe ? rat(0) : -cmin[f];
                row.tag = "dual";
                inner.equalities.push_back(std::move(row));
            }
            if (feasibility_probe) {
                LinRow ones;
                ones.coeffs.assign(active.size(), rat(1));
                ones.rhs = 1;
                ones.tag = "dual";
                inner.equalities.push_back(std::move(ones));
            }
            for (std::size_t i = 0; i < active.size(); ++i) {
                LinRow row;
                row.coeffs.assign(active.size(), rat(0));
                row.coeffs[i] = -1;
                row.rhs = 0;
                row.tag = "dual";
                inner.inequalities.push_back(std::move(row));
            }
            return inner;
        };

        auto inner_objective = [&]() {
            std::vector<Rational> b;
            b.reserve(active.size());
            for (auto i : active) b.push_back(rows[i].rhs);
            return b;
        };

        auto farkas_from_ray = [&](const std::vector<Rational>& y) {
            // y >= 0, A'^T y = 0, b'.y < 0 over the active rows.
            LpResult res;
            res.status = LpStatus::Infeasible;
            FarkasCertificate cert;
            cert.ineq_multipliers.assign(ni, rat(0));
            std::vector<Rational> weights(red_eq_.size());
            for (std::size_t a = 0; a < active.size(); ++a) {
                if (y[a] == 0) continue;
                cert.ineq_multipliers[active[a]] = y[a];
                for (std::size_t r = 0; r < red_eq_.size(); ++r)
                    weights[r] -= y[a] * s_.inequalities[active[a]].coeffs[pivot_cols_[r]];
            }
            cert.eq_multipliers = map_to_original_eqs(red_eq_, &weights);
            res.certificate = std::move(cert);
            return res;
        };

        auto run_probe = [&]() -> LpResult {
            ConstraintSystem inner = build_inner(true);
            SolveControl ictl = ctl_;
            ictl.direct_primal = true;
            SimplexSolver is(inner, ictl);
            auto ires = is.run(inner_objective(), Sense::Minimize);
            if (ires.status == LpStatus::Unbounded)
                throw std::logic_error("simplex: dual probe unbounded over a simplex slice");
            if (ires.status == LpStatus::Infeasible) {
                // The reduced system has no implicit equality structure the
                // probe can certify either way: fall back to the tableau.
                return run_primal(std::nullopt, sense);
            }
            if (*ires.objective_value < 0) return farkas_from_ray(*ires.point);
            auto duals = is.equality_duals(inner);
            duals.pop_back();  // multiplier of the normalization row
            return finish_feasible(std::move(duals));
        };

        if (!objective) return run_probe();

        ConstraintSystem inner = build_inner(false);
        SolveControl ictl = ctl_;
        ictl.direct_primal = true;
        SimplexSolver is(inner, ictl);
        auto ires = is.run(inner_objective(), Sense::Minimize);
        if (ires.status == LpStatus::Feasible) return finish_feasible(is.equality_duals(inner));
        // Dual infeasible: primal empty or unbounded. Dual unbounded: primal
        // empty with the diverging ray as certificate; the probe rebuilds it.
        auto probe = run_probe();
        if (probe.status == LpStatus::Feasible && ires.status == LpStatus::Infeasible) {
            probe.status = LpStatus::Unbounded;
            probe.objective_value.reset();
            return probe;
        }
        if (probe.status == LpStatus::Feasible)
            throw std::logic_error("simplex: dual unbounded but primal feasible");
        return probe;
    }

    // ------------------------------------------------------------------
    // Plain two-phase tableau

    LpResult run_primal(const std::optional<std::vector<Rational>>& objective, Sense sense) {
        presolve_nonneg();
        build_tableau();
        if (!phase1()) return extract_infeasible();
        LpResult res;
        res.status = LpStatus::Feasible;
        if (objective) {
            drive_out_artificials();
            if (!phase2(*objective, sense)) {
                res.status = LpStatus::Unbounded;
                res.point = extract_point();
                return res;
            }
            res.objective_value = current_objective(*objective);
        }
        res.point = extract_point();
        return res;
    }

public:
    // Dual multipliers of the original equality rows at the current optimum
    // (valid after run_primal finished with an objective).
    std::vector<Rational> equality_duals(const ConstraintSystem& s) {
        std::vector<Rational> y_red(red_eq_.size());
        for (std::size_t r = 0; r < red_eq_.size(); ++r) {
            y_red[r] = -cost_[art_col(r)] * row_sign_[r];
        }
        return map_to_original_eqs(red_eq_, &y_red);
    }

private:
    void presolve_nonneg() {
        nonneg_row_.assign(nv_, kNone);
        row_absorbed_.assign(s_.inequalities.size(), false);
        kept_ineq_.clear();
        for (std::size_t i = 0; i < s_.inequalities.size(); ++i) {
            const LinRow& r = s_.inequalities[i];
            if (r.rhs != 0) continue;
            std::size_t nz = kNone;
            bool single = true;
            for (std::size_t j = 0; j < nv_ && single; ++j) {
                if (r.coeffs[j] == 0) continue;
                if (nz != kNone) single = false;
                nz = j;
            }
            if (!single || nz == kNone || r.coeffs[nz] >= 0) continue;
            row_absorbed_[i] = true;
            if (nonneg_row_[nz] == kNone) nonneg_row_[nz] = i;
        }
        for (std::size_t i = 0; i < s_.inequalities.size(); ++i)
            if (!row_absorbed_[i]) kept_ineq_.push_back(i);
    }

    void build_tableau() {
        col_pos_.assign(nv_, kNone);
        col_neg_.assign(nv_, kNone);
        std::size_t c = 0;
        for (std::size_t j = 0; j < nv_; ++j) {
            col_pos_[j] = c++;
            if (nonneg_row_[j] == kNone) col_neg_[j] = c++;  // free variable split
        }
        n_struct_ = c;
        n_slack_ = kept_ineq_.size();
        m_ = red_eq_.size() + kept_ineq_.size();
        rhs_col_ = n_struct_ + n_slack_ + m_;
        n_cols_ = rhs_col_ + 1;

        tab_.assign(m_, std::vector<Int>(n_cols_));
        row_sign_.assign(m_, 1);
        basis_.assign(m_, kNone);
        dead_row_.assign(m_, false);

        auto fill = [&](std::size_t r, const LinRow& src, bool ineq, std::size_t slack) {
            int sign = src.rhs < 0 ? -1 : 1;
            row_sign_[r] = sign;
            std::vector<Rational> row(n_cols_);
            for (std::size_t j = 0; j < nv_; ++j) {
                if (src.coeffs[j] == 0) continue;
                row[col_pos_[j]] = sign * src.coeffs[j];
                if (col_neg_[j] != kNone) row[col_neg_[j]] = -sign * src.coeffs[j];
            }
            if (ineq) row[slack_col(slack)] = sign;
            row[art_col(r)] = 1;
            row[rhs_col_] = sign * src.rhs;
            Int lcm = 1;
            for (const auto& v : row)
                if (v != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
            for (std::size_t j = 0; j < n_cols_; ++j)
                if (row[j] != 0) tab_[r][j] = row[j].get_num() * (lcm / row[j].get_den());
            basis_[r] = art_col(r);
        };
        std::size_t r = 0;
        for (const auto& row : red_eq_) fill(r++, row, false, 0);
        for (std::size_t i = 0; i < kept_ineq_.size(); ++i)
            fill(r++, s_.inequalities[kept_ineq_[i]], true, i);
    }

    void check_deadline() {
        if ((++tick_ & 15) == 0 && ctl_.deadline &&
            std::chrono::steady_clock::now() > *ctl_.deadline)
            throw BudgetTimeout("lp solve: budget exceeded");
    }

    static void normalize_row(std::vector<Int>& row) {
        Int g = 0;
        for (const auto& v : row) {
            if (v == 0) continue;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) return;
        }
        if (g <= 1) return;
        for (auto& v : row)
            if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }

    void pivot(std::size_t prow, std::size_t pcol) {
        std::vector<Int>& pr = tab_[prow];
        if (pr[pcol] < 0)  // only possible when driving out a zero-valued artificial
            for (auto& v : pr) v = -v;
        const Int piv = pr[pcol];
        if (cost_[pcol] != 0) {
            const Rational f = cost_[pcol] / Rational(piv);
            for (std::size_t j = 0; j < n_cols_; ++j)
                if (pr[j] != 0) cost_[j] -= f * Rational(pr[j]);
        }
        Int t;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == prow || tab_[i][pcol] == 0) continue;
            std::vector<Int>& ri = tab_[i];
            const Int f = ri[pcol];
            for (std::size_t j = 0; j < n_cols_; ++j) {
                if (pr[j] == 0) {
                    if (ri[j] != 0) ri[j] *= piv;
                    continue;
                }
                mpz_mul(ri[j].get_mpz_t(), ri[j].get_mpz_t(), piv.get_mpz_t());
                mpz_mul(t.get_mpz_t(), f.get_mpz_t(), pr[j].get_mpz_t());
                mpz_sub(ri[j].get_mpz_t(), ri[j].get_mpz_t(), t.get_mpz_t());
            }
            normalize_row(ri);
        }
        basis_[prow] = pcol;
    }

    // Minimizes the cost currently loaded into cost_; returns false when
    // unbounded below.  Artificial columns never enter.
    // Lexicographic ratio test: ties on rhs/a are broken by comparing the
    // artificial block (a copy of B^{-1}) column by column, which always
    // separates two rows, so the leaving choice is unique and no basis can
    // repeat.  This is what keeps the heavily degenerate dual probes short.
    bool iterate() {
        const std::size_t entering_limit = n_struct_ + n_slack_;
        // Safety valve: Bland's rule terminates unconditionally, so switch to
        // it if the lexicographic run ever stalls absurdly long.
        const long bland_after = 50000 + 100 * static_cast<long>(m_);
        long pivots = 0;
        for (;;) {
            check_deadline();
            std::size_t enter = kNone;
            if (pivots > bland_after) {
                for (std::size_t j = 0; j < entering_limit; ++j)
                    if (cost_[j] < 0) {
                        enter = j;
                        break;
                    }
            } else {
                const Rational* best = nullptr;
                for (std::size_t j = 0; j < entering_limit; ++j)
                    if (cost_[j] < 0 && (!best || cost_[j] < *best)) {
                        best = &cost_[j];
                        enter = j;
                    }
            }
            if (enter == kNone) return true;
            ++pivots;

            std::size_t leave = kNone;
            for (std::size_t i = 0; i < m_; ++i) {
                if (dead_row_[i] || tab_[i][enter] <= 0) continue;
                if (leave == kNone) {
                    leave = i;
                } else if (pivots > bland_after) {
                    // Bland: min ratio, smallest basic index on ties.
                    Int lhs = tab_[i][rhs_col_] * tab_[leave][enter];
                    Int rhs = tab_[leave][rhs_col_] * tab_[i][enter];
                    int c = cmp(lhs, rhs);
                    if (c < 0 || (c == 0 && basis_[i] < basis_[leave])) leave = i;
                } else if (lex_less(i, leave, enter)) {
                    leave = i;
                }
            }
            if (leave == kNone) return false;
            pivot(leave, enter);
        }
    }

    // Is row a lexicographically smaller than row b once both are scaled by
    // their entries in the entering column?
    bool lex_less(std::size_t a, std::size_t b, std::size_t enter) const {
        const Int& pa = tab_[a][enter];
        const Int& pb = tab_[b][enter];
        Int lhs = tab_[a][rhs_col_] * pb, rhs = tab_[b][rhs_col_] * pa;
        int c = cmp(lhs, rhs);
        if (c != 0) return c < 0;
        for (std::size_t r = 0; r < m_; ++r) {
            lhs = tab_[a][art_col(r)] * pb;
            rhs = tab_[b][art_col(r)] * pa;
            c = cmp(lhs, rhs);
            if (c != 0) return c < 0;
        }
        return a < b;
    }

    void load_cost(const std::vector<Rational>& c_full) {
        cost_.assign(n_cols_, rat(0));
        for (std::size_t j = 0; j < c_full.size() && j < n_cols_; ++j) cost_[j] = c_full[j];
        cost_[rhs_col_] = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational cb = basis_[i] < c_full.size() ? c_full[basis_[i]] : rat(0);
            if (cb == 0) continue;
            const Rational f = cb / Rational(tab_[i][basis_[i]]);
            for (std::size_t j = 0; j < n_cols_; ++j)
                if (tab_[i][j] != 0) cost_[j] -= f * Rational(tab_[i][j]);
        }
    }

    bool phase1() {
        std::vector<Rational> c(n_cols_, rat(0));
        for (std::size_t r = 0; r < m_; ++r) c[art_col(r)] = 1;
        load_cost(c);
        if (!iterate()) throw std::logic_error("simplex: phase 1 unbounded");
        return cost_[rhs_col_] == 0;  // phase-1 optimum is -cost_[rhs_col_]
    }

    LpResult extract_infeasible() {
        // y_r = 1 - reduced cost of artificial r; multiplier on internal row r
        // is -sign_r * y_r.
        std::vector<Rational> mult(m_);
        for (std::size_t r = 0; r < m_; ++r) mult[r] = -row_sign_[r] * (1 - cost_[art_col(r)]);

        FarkasCertificate cert;
        std::vector<Rational> eq_weights(red_eq_.size());
        for (std::size_t r = 0; r < red_eq_.size(); ++r) eq_weights[r] = mult[r];
        cert.eq_multipliers = map_to_original_eqs(red_eq_, &eq_weights);
        cert.ineq_multipliers.assign(s_.inequalities.size(), rat(0));
        std::vector<Rational> combo(nv_);
        Rational rhs = 0;
        for (std::size_t r = 0; r < red_eq_.size(); ++r) {
            if (mult[r] == 0) continue;
            for (std::size_t j = 0; j < nv_; ++j) combo[j] += mult[r] * red_eq_[r].coeffs[j];
            rhs += mult[r] * red_eq_[r].rhs;
        }
        for (std::size_t i = 0; i < kept_ineq_.size(); ++i) {
            const Rational& v = mult[red_eq_.size() + i];
            cert.ineq_multipliers[kept_ineq_[i]] = v;
            if (v == 0) continue;
            const LinRow& row = s_.inequalities[kept_ineq_[i]];
            for (std::size_t j = 0; j < nv_; ++j) combo[j] += v * row.coeffs[j];
            rhs += v * row.rhs;
        }
        // Residual support lands on the absorbed nonnegativity rows.
        for (std::size_t j = 0; j < nv_; ++j) {
            if (combo[j] == 0) continue;
            if (nonneg_row_[j] == kNone || combo[j] < 0)
                throw std::logic_error("simplex: certificate residual on a free variable");
            const Rational& c = s_.inequalities[nonneg_row_[j]].coeffs[j];
            cert.ineq_multipliers[nonneg_row_[j]] = combo[j] / -c;
        }
        if (rhs >= 0) throw std::logic_error("simplex: infeasibility certificate not negative");
        LpResult res;
        res.status = LpStatus::Infeasible;
        res.certificate = std::move(cert);
        return res;
    }

    void drive_out_artificials() {
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < n_struct_ + n_slack_) continue;
            std::size_t c = kNone;
            for (std::size_t j = 0; j < n_struct_ + n_slack_ && c == kNone; ++j)
                if (tab_[r][j] != 0) c = j;
            if (c == kNone) {
                dead_row_[r] = true;  // redundant row: all-zero in real columns
                continue;
            }
            pivot(r, c);
        }
    }

    std::vector<Rational> internal_cost(const std::vector<Rational>& objective, Sense sense) {
        std::vector<Rational> c(n_cols_, rat(0));
        for (std::size_t j = 0; j < nv_; ++j) {
            Rational v = sense == Sense::Maximize ? -objective[j] : objective[j];
            c[col_pos_[j]] = v;
            if (col_neg_[j] != kNone) c[col_neg_[j]] = -v;
        }
        return c;
    }

    bool phase2(const std::vector<Rational>& objective, Sense sense) {
        load_cost(internal_cost(objective, sense));
        return iterate();
    }

    std::vector<Rational> extract_point() const {
        std::vector<Rational> internal(n_cols_);
        for (std::size_t r = 0; r < m_; ++r)
            internal[basis_[r]] = Rational(tab_[r][rhs_col_]) / Rational(tab_[r][basis_[r]]);
        std::vector<Rational> x(nv_);
        for (std::size_t j = 0; j < nv_; ++j) {
            x[j] = internal[col_pos_[j]];
            if (col_neg_[j] != kNone) x[j] -= internal[col_neg_[j]];
        }
        return x;
    }

    Rational current_objective(const std::vector<Rational>& objective) const {
        auto x = extract_point();
        Rational v = 0;
        for (std::size_t j = 0; j < nv_; ++j)
            if (objective[j] != 0) v += objective[j] * x[j];
        return v;
    }
};

}  // namespace detail

inline LpResult solve(const ConstraintSystem& s,
                      const std::optional<std::vector<Rational>>& objective = std::nullopt,
                      Sense sense = Sense::Maximize, const SolveControl& ctl = {}) {
    detail::SimplexSolver solver(s, ctl);
    return solver.run(objective, sense);
}

struct PolytopeSummary {
    bool empty = true;
    long dimension = -1;
    std::vector<std::size_t> implicit_equalities;  // inequality row indices
    RationalMatrix affine_hull;                    // equalities then implicit rows
    std::vector<Rational> affine_hull_rhs;
    std::optional<std::vector<Rational>> relative_interior;
};

// Affine hull and dimension: an inequality is an implicit equality iff the
// minimum of its left side over the polytope equals its right side.
inline PolytopeSummary summarize(const ConstraintSystem& s, const SolveControl& ctl = {}) {
    PolytopeSummary sum;
    auto feas = solve(s, std::nullopt, Sense::Maximize, ctl);
    if (feas.status == LpStatus::Infeasible) return sum;
    sum.empty = false;

    std::vector<std::vector<Rational>> interior_samples = {*feas.point};
    for (std::size_t i = 0; i < s.inequalities.size(); ++i) {
        // A known point with strict slack already rules out an implicit
        // equality, so the minimization is only needed for still-tight rows.
        bool slack_seen = false;
        for (const auto& p : interior_samples) {
            Rational lhs;
            for (std::size_t j = 0; j < p.size(); ++j)
                if (s.inequalities[i].coeffs[j] != 0) lhs += s.inequalities[i].coeffs[j] * p[j];
            if (lhs < s.inequalities[i].rhs) {
                slack_seen = true;
                break;
            }
        }
        if (slack_seen) continue;
        auto res = solve(s, s.inequalities[i].coeffs, Sense::Minimize, ctl);
        if (res.status == LpStatus::Unbounded) continue;
        if (*res.objective_value == s.inequalities[i].rhs)
            sum.implicit_equalities.push_back(i);
        else
            interior_samples.push_back(*res.point);
    }

    const std::size_t rows = s.equalities.size() + sum.implicit_equalities.size();
    sum.affine_hull = RationalMatrix(rows, s.variables.size());
    sum.affine_hull_rhs.assign(rows, rat(0));
    std::size_t r = 0;
    for (const auto& e : s.equalities) {
        for (std::size_t j = 0; j < s.variables.size(); ++j) sum.affine_hull(r, j) = e.coeffs[j];
        sum.affine_hull_rhs[r] = e.rhs;
        ++r;
    }
    for (auto i : sum.implicit_equalities) {
        for (std::size_t j = 0; j < s.variables.size(); ++j)
            sum.affine_hull(r, j) = s.inequalities[i].coeffs[j];
        sum.affine_hull_rhs[r] = s.inequalities[i].rhs;
        ++r;
    }
    sum.dimension = static_cast<long>(s.variables.size()) - static_cast<long>(rank(sum.affine_hull));

    std::vector<Rational> center(s.variables.size());
    for (const auto& p : interior_samples)
        for (std::size_t j = 0; j < center.size(); ++j) center[j] += p[j];
    const Rational inv = rat(1, static_cast<long>(interior_samples.size()));
    for (auto& v : center) v *= inv;
    sum.relative_interior = std::move(center);
    return sum;
}

struct EmptyPolytope : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact per-variable min and max over the polytope; nullopt upper = unbounded.
inline std::vector<std::pair<Rational, std::optional<Rational>>> variable_bounds(
    const ConstraintSystem& s, const SolveControl& ctl = {}) {
    std::vector<std::pair<Rational, std::optional<Rational>>> out;
    std::vector<Rational> obj(s.variables.size());
    for (std::size_t j = 0; j < s.variables.size(); ++j) {
        obj.assign(s.variables.size(), rat(0));
        obj[j] = 1;
        auto lo = solve(s, obj, Sense::Minimize, ctl);
        if (lo.status == LpStatus::Infeasible) throw EmptyPolytope("variable_bounds: empty polytope");
        if (lo.status == LpStatus::Unbounded)
            throw std::invalid_argument("variable_bounds: variable unbounded below");
        auto hi = solve(s, obj, Sense::Maximize, ctl);
        out.emplace_back(*lo.objective_value,
                         hi.status == LpStatus::Unbounded
                             ? std::optional<Rational>{}
                             : std::optional<Rational>{*hi.objective_value});
    }
    return out;
}

}  // namespace lcdlp

#endif
