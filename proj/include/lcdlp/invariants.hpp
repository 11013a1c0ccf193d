#ifndef LCDLP_INVARIANTS_HPP
#define LCDLP_INVARIANTS_HPP

#include <stdexcept>
#include <vector>

#include "lcdlp/combinatorics.hpp"
#include "lcdlp/gf2.hpp"
#include "lcdlp/rational.hpp"

namespace lcdlp {

struct MatrixGroup {
    std::vector<RationalMatrix> generators;
    std::vector<RationalMatrix> elements;
};

// H (the MacWilliams substitution, entries 1/2), J = diag(1,1,1,-1), -I.
inline std::vector<RationalMatrix> make_group_generators() {
    RationalMatrix h(4, 4);
    static constexpr int kH[4][4] = {
        {1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) h(i, j) = rat(kH[i][j], 2);
    RationalMatrix j = RationalMatrix::identity(4);
    j(3, 3) = -1;
    RationalMatrix neg(4, 4);
    for (int i = 0; i < 4; ++i) neg(i, i) = -1;
    return {h, j, neg};
}

// Breadth-first closure under multiplication; for a finite set this also
// closes under inverses.
inline MatrixGroup close_group(const std::vector<RationalMatrix>& gens, std::size_t cap = 10000) {
    if (gens.empty()) throw std::invalid_argument("close_group: no generators");
    const std::size_t n = gens.front().rows();
    for (const auto& g : gens) {
        if (g.rows() != n || g.cols() != n)
            throw std::invalid_argument("close_group: generators must be square, same size");
        if (rank(g) != n) throw std::invalid_argument("close_group: singular generator");
    }
    MatrixGroup out;
    out.generators = gens;
    out.elements.push_back(RationalMatrix::identity(n));
    for (std::size_t head = 0; head < out.elements.size(); ++head) {
        for (const auto& g : gens) {
            RationalMatrix next = out.elements[head] * g;
            bool known = false;
            for (const auto& e : out.elements)
                if (e == next) {
                    known = true;
                    break;
                }
            if (!known) {
                if (out.elements.size() >= cap)
                    throw CapExceeded("close_group: closure cap exceeded");
                out.elements.push_back(std::move(next));
            }
        }
    }
    return out;
}

struct PowerSeries {
    // coefficients[d] is the degree-d coefficient; truncated at max_degree().
    std::vector<Rational> coefficients;

    std::size_t max_degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }

    bool operator==(const PowerSeries& o) const { return coefficients == o.coefficients; }
};

namespace detail {

using Poly = std::vector<Rational>;  // dense, index = degree

inline Poly poly_mul(const Poly& a, const Poly& b, std::size_t truncate = SIZE_MAX - 1) {
    Poly c(std::min(a.size() + b.size() - 1, truncate + 1));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < c.size(); ++j)
            if (b[j] != 0) c[i + j] += a[i] * b[j];
    }
    return c;
}

// det(I - t*g) as an exact polynomial in t, by Laplace expansion.
inline Poly char_det(const RationalMatrix& g) {
    const std::size_t n = g.rows();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = {i == j ? rat(1) : rat(0), -g(i, j)};

    auto det = [&](auto&& self, std::vector<std::size_t> rows,
                   std::vector<std::size_t> cols) -> Poly {
        if (rows.size() == 1) return m[rows[0]][cols[0]];
        Poly acc;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const Poly& pivot = m[rows[0]][cols[c]];
            bool zero = true;
            for (const auto& v : pivot)
                if (v != 0) zero = false;
            if (zero) continue;
            std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
            std::vector<std::size_t> sub_cols;
            for (std::size_t k = 0; k < cols.size(); ++k)
                if (k != c) sub_cols.push_back(cols[k]);
            Poly term = poly_mul(pivot, self(self, sub_rows, sub_cols));
            if (acc.size() < term.size()) acc.resize(term.size());
            for (std::size_t d = 0; d < term.size(); ++d)
                if (c % 2 == 0)
                    acc[d] += term[d];
                else
                    acc[d] -= term[d];
        }
        if (acc.empty()) acc = {rat(0)};
        return acc;
    };
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return det(det, all, all);
}

// Truncated series 1/p for p with nonzero constant term.
inline Poly series_inverse(const Poly& p, std::size_t max_degree) {
    if (p.empty() || p[0] == 0)
        throw std::invalid_argument("series_inverse: zero constant term");
    Poly inv(max_degree + 1);
    const Rational lead = 1 / p[0];
    inv[0] = lead;
    for (std::size_t d = 1; d <= max_degree; ++d) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= d && j < p.size(); ++j)
            if (p[j] != 0) acc += p[j] * inv[d - j];
        inv[d] = -lead * acc;
    }
    return inv;
}

// Expand the product of `degree` linear forms given by matrix rows: starting
// from the monomial of composition c, substitute variable v by the linear
// form sum_u g(v,u) * x_u.  Result is a dense coefficient vector over
// enumerate_compositions(degree).
inline std::vector<Rational> substitute_monomial(const RationalMatrix& g, const Composition& c,
                                                 const std::vector<CompositionIndex>& idx) {
    std::vector<Rational> poly = {rat(1)};
    int deg = 0;
    const std::array<int, 4> reps = {c.n00, c.n01, c.n10, c.n11};
    for (int v = 0; v < 4; ++v)
        for (int r = 0; r < reps[v]; ++r) {
            const CompositionIndex& from = idx[deg];
            const CompositionIndex& to = idx[deg + 1];
            std::vector<Rational> next(to.size());
            for (std::size_t i = 0; i < poly.size(); ++i) {
                if (poly[i] == 0) continue;
                Composition base = from.at(i);
                for (int u = 0; u < 4; ++u) {
                    if (g(v, u) == 0) continue;
                    Composition d2 = base;
                    (u == 0 ? d2.n00 : u == 1 ? d2.n01 : u == 2 ? d2.n10 : d2.n11) += 1;
                    next[to.index(d2)] += g(v, u) * poly[i];
                }
            }
            poly = std::move(next);
            ++deg;
        }
    return poly;
}

}  // namespace detail

// |G|^{-1} sum_g 1/det(I - t g), truncated.
inline PowerSeries molien_series(const MatrixGroup& g, std::size_t max_degree) {
    if (g.elements.empty()) throw std::invalid_argument("molien_series: empty group");
    PowerSeries s;
    s.coefficients.assign(max_degree + 1, rat(0));
    for (const auto& e : g.elements) {
        auto inv = detail::series_inverse(detail::char_det(e), max_degree);
        for (std::size_t d = 0; d <= max_degree; ++d) s.coefficients[d] += inv[d];
    }
    const Rational scale = rat(1, static_cast<long>(g.elements.size()));
    for (auto& c : s.coefficients) c *= scale;
    return s;
}

// numerator / prod(denominator_factors) as a truncated series; polynomials
// are dense coefficient vectors, index = degree.
inline PowerSeries expand_rational_function(const std::vector<Rational>& numerator,
                                            const std::vector<std::vector<Rational>>& denominator_factors,
                                            std::size_t max_degree) {
    detail::Poly den = {rat(1)};
    for (const auto& f : denominator_factors) den = detail::poly_mul(den, f, max_degree);
    auto inv = detail::series_inverse(den, max_degree);
    auto full = detail::poly_mul(numerator, inv, max_degree);
    PowerSeries s;
    s.coefficients.assign(max_degree + 1, rat(0));
    for (std::size_t d = 0; d < full.size() && d <= max_degree; ++d) s.coefficients[d] = full[d];
    return s;
}

// Closed form of molien_series(close_group(make_group_generators()), .):
// (1 + t^2 + 2t^4) / ((1 - t^2)^3 (1 - t^6)).  The invariant ring has primary
// invariants of degrees 2, 2, 2, 6 and secondary invariants of degrees 2, 4, 4;
// the degree-2 invariant space is spanned by a^2+bc+d^2, ab-c^2-d^2,
// ac-bc+c^2-d^2 and b^2-bc+c^2.
inline PowerSeries molien_closed_form(std::size_t max_degree) {
    const std::vector<Rational> num = {rat(1), rat(0), rat(1), rat(0), rat(2)};
    const std::vector<Rational> t2 = {rat(1), rat(0), rat(-1)};
    const std::vector<Rational> t6 = {rat(1), rat(0), rat(0), rat(0), rat(0), rat(0), rat(-1)};
    return expand_rational_function(num, {t2, t2, t2, t6}, max_degree);
}

// dim of the degree-d invariant space: |G|^{-1} sum_g trace(Sym^d g), with the
// traces taken by substituting each element into each degree-d monomial and
// reading off the diagonal coefficient.
inline Int invariant_dimension(const MatrixGroup& g, int degree) {
    if (g.elements.empty()) throw std::invalid_argument("invariant_dimension: empty group");
    if (degree < 0) throw std::invalid_argument("invariant_dimension: negative degree");
    std::vector<CompositionIndex> idx;
    for (int t = 0; t <= degree; ++t) idx.emplace_back(t);
    const CompositionIndex& full = idx[degree];
    Rational total = 0;
    for (const auto& e : g.elements) {
        for (std::size_t m = 0; m < full.size(); ++m) {
            auto poly = detail::substitute_monomial(e, full.at(m), idx);
            total += poly[m];
        }
    }
    total /= static_cast<long>(g.elements.size());
    if (total.get_den() != 1 || total < 0)
        throw std::logic_error("invariant_dimension: trace average not a nonnegative integer");
    return total.get_num();
}

// True iff substituting every group element into the enumerator polynomial
// reproduces it; for odd degree a global sign flip is also accepted (the -I
// coset acts by (-1)^n on a degree-n form).
inline bool check_enumerator_invariance(const JointEnumerator& je, const MatrixGroup& g) {
    const int n = je.n;
    std::vector<CompositionIndex> idx;
    for (int t = 0; t <= n; ++t) idx.emplace_back(t);
    const CompositionIndex& full = idx[n];
    for (const auto& e : g.elements) {
        std::vector<Rational> image(full.size());
        for (std::size_t m = 0; m < full.size(); ++m) {
            if (je.coeffs[m] == 0) continue;
            auto poly = detail::substitute_monomial(e, full.at(m), idx);
            for (std::size_t r = 0; r < poly.size(); ++r)
                if (poly[r] != 0) image[r] += Rational(je.coeffs[m]) * poly[r];
        }
        bool same = true, negated = true;
        for (std::size_t r = 0; r < full.size(); ++r) {
            if (image[r] != Rational(je.coeffs[r])) same = false;
            if (image[r] != -Rational(je.coeffs[r])) negated = false;
        }
        if (!(same || (n % 2 == 1 && negated))) return false;
    }
    return true;
}

}  // namespace lcdlp

#endif
