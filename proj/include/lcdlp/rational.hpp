#ifndef LCDLP_RATIONAL_HPP
#define LCDLP_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcdlp {

// Exact arithmetic substrate. mpq_class keeps values canonical (reduced,
// positive denominator) after every arithmetic operation; constructors from
// raw numerator/denominator pairs go through rat() which canonicalizes.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Int& num, const Int& den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "p/q", or "p" when q = 1. Shared by the H-representation export.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rational_from_string: bad literal '" + s + "'");
    q.canonicalize();
    return q;
}

inline Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RationalMatrix operator*(const RationalMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        RationalMatrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
            }
        return p;
    }

    std::vector<Rational> apply(const std::vector<Rational>& x) const {
        if (cols_ != x.size()) throw std::invalid_argument("matrix apply: shape mismatch");
        std::vector<Rational> y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

namespace detail {

// In-place reduced row echelon form; returns pivot columns.
// `width` limits elimination to the leading columns (the rest ride along,
// which is how augmented systems are handled).
inline std::vector<std::size_t> rref(RationalMatrix& m, std::size_t width) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < width && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) swap(m(row, j), m(p, j));
        Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank(RationalMatrix m) {
    return detail::rref(m, m.cols()).size();
}

// One exact solution of a x = b, or nullopt when inconsistent.
// Free variables are set to zero.
inline std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& a,
                                                         const std::vector<Rational>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = detail::rref(aug, a.cols());
    for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
        if (aug(i, a.cols()) != 0) return std::nullopt;
    std::vector<Rational> x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
    return x;
}

// Basis of {x : a x = 0}; size = cols - rank(a).
inline std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& a) {
    RationalMatrix m = a;
    auto pivots = detail::rref(m, m.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(a.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Integer linear systems (for lattice point work): a x = b over Z, solved via
// column reduction by unimodular operations (Hermite-style).

struct IntegerSolution {
    std::vector<Int> particular;             // one integer solution
    std::vector<std::vector<Int>> lattice;   // basis of the integer kernel
};

inline std::optional<IntegerSolution> solve_integer_system(
    const std::vector<std::vector<Int>>& a, const std::vector<Int>& b) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    if (b.size() != m) throw std::invalid_argument("solve_integer_system: shape mismatch");

    // Solve over Q first; the integer structure then lives in an r-row
    // problem, r the kernel dimension.  Column-reducing the full system
    // directly swells catastrophically when the rank is large, while the
    // kernel-spanning matrix W stays small: with W U = [T | 0] for unimodular
    // U, the saturated integer kernel is spanned by the first r rows of
    // U^{-1}, and x is an integer solution iff x U is integral — so one
    // exists iff the last n - r coordinates of x_q U are integers (x_q the
    // rational solution), the first r being free to round.
    RationalMatrix A(m, n);
    std::vector<Rational> rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) A(i, j) = Rational(a[i][j]);
        rhs[i] = Rational(b[i]);
    }
    auto xq = solve_linear(A, rhs);
    if (!xq) return std::nullopt;  // inconsistent over Q
    auto ns = nullspace_basis(A);
    const std::size_t r = ns.size();

    // Integer rows spanning the kernel over Q, made primitive.
    std::vector<std::vector<Int>> w(r, std::vector<Int>(n));
    for (std::size_t i = 0; i < r; ++i) {
        Int l = 1;
        for (const auto& q : ns[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        Int g = 0;
        for (std::size_t j = 0; j < n; ++j) {
            w[i][j] = Rational(ns[i][j] * Rational(l)).get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i][j].get_mpz_t());
        }
        if (g > 1)
            for (auto& x : w[i]) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }

    // Column HNF of w, tracking U (column-major) and M = U^{-1} (row-major).
    std::vector<std::vector<Int>> ucol(n, std::vector<Int>(n));
    std::vector<std::vector<Int>> mrow(n, std::vector<Int>(n));
    for (std::size_t j = 0; j < n; ++j) ucol[j][j] = mrow[j][j] = 1;
    for (std::size_t t = 0; t < r; ++t) {
        std::size_t nz = t;
        while (nz < n && w[t][nz] == 0) ++nz;
        if (nz == n) throw std::logic_error("solve_integer_system: dependent kernel rows");
        if (nz != t) {
            std::swap(ucol[nz], ucol[t]);
            std::swap(mrow[nz], mrow[t]);
            for (std::size_t i = t; i < r; ++i) swap(w[i][nz], w[i][t]);
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (w[t][j] == 0) continue;
            Int g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
                       w[t][t].get_mpz_t(), w[t][j].get_mpz_t());
            Int p = w[t][t] / g, q = w[t][j] / g;
            // columns (t, j) of w and U get K = [[x, -q], [y, p]] (det 1);
            // rows (t, j) of M get K^{-1} = [[p, q], [-y, x]].
            for (std::size_t i = t; i < r; ++i) {
                Int c1 = x * w[i][t] + y * w[i][j];
                Int c2 = p * w[i][j] - q * w[i][t];
                w[i][t] = c1;
                w[i][j] = c2;
            }
            for (std::size_t i = 0; i < n; ++i) {
                Int c1 = x * ucol[t][i] + y * ucol[j][i];
                Int c2 = p * ucol[j][i] - q * ucol[t][i];
                ucol[t][i] = c1;
                ucol[j][i] = c2;
                Int r1 = p * mrow[t][i] + q * mrow[j][i];
                Int r2 = x * mrow[j][i] - y * mrow[t][i];
                mrow[t][i] = r1;
                mrow[j][i] = r2;
            }
        }
    }

    // z = x_q U rounded on the first r coordinates; the rest must be integral.
    std::vector<Int> z(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational c;
        for (std::size_t i = 0; i < n; ++i)
            if (ucol[j][i] != 0 && (*xq)[i] != 0) c += (*xq)[i] * Rational(ucol[j][i]);
        if (j < r) {
            mpz_fdiv_q(z[j].get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
        } else {
            if (c.get_den() != 1) return std::nullopt;  // lattice misses the hull
            z[j] = c.get_num();
        }
    }

    IntegerSolution sol;
    sol.particular.assign(n, Int(0));
    for (std::size_t j = 0; j < n; ++j) {
        if (z[j] == 0) continue;
        for (std::size_t i = 0; i < n; ++i)
            if (mrow[j][i] != 0) sol.particular[i] += z[j] * mrow[j][i];
    }
    sol.lattice.assign(mrow.begin(), mrow.begin() + static_cast<long>(r));
    return sol;
}

// Exact LLL reduction (delta = 99/100) of a linearly independent integer
// basis; the spanned lattice is unchanged.  Hermite-form bases can be
// arbitrarily skewed, which makes box searches over lattice coordinates
// explode; a reduced basis keeps coordinate ranges close to the geometry.
inline void lll_reduce(std::vector<std::vector<Int>>& basis) {
    const std::size_t r = basis.size();
    if (r <= 1) return;
    const std::size_t n = basis.front().size();
    auto dot = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
        Int s = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (a[j] != 0 && b[j] != 0) s += a[j] * b[j];
        return Rational(s);
    };
    // Gram-Schmidt data: bstar_sq[i] = |b_i*|^2, mu[i][j] for j < i.
    std::vector<Rational> bstar_sq(r);
    std::vector<std::vector<Rational>> mu(r, std::vector<Rational>(r));
    auto gram_schmidt = [&] {
        // |b_i*|^2 and mu from the exact Gram matrix
        std::vector<std::vector<Rational>> gso_dot(r, std::vector<Rational>(r));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) gso_dot[i][j] = dot(basis[i], basis[j]);
        }
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                Rational num = gso_dot[i][j];
                for (std::size_t t = 0; t < j; ++t)
                    num -= mu[i][t] * mu[j][t] * bstar_sq[t];
                mu[i][j] = num / bstar_sq[j];
            }
            bstar_sq[i] = gso_dot[i][i];
            for (std::size_t t = 0; t < i; ++t) bstar_sq[i] -= mu[i][t] * mu[i][t] * bstar_sq[t];
            if (bstar_sq[i] == 0)
                throw std::invalid_argument("lll_reduce: dependent basis");
        }
    };
    auto round_nearest = [](const Rational& q) {
        // nearest integer, ties toward +inf: floor(q + 1/2)
        Int num = q.get_num() * 2 + q.get_den();
        Int den = q.get_den() * 2;
        Int out;
        mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return out;
    };
    const Rational delta = rat(99, 100);
    gram_schmidt();
    std::size_t k = 1;
    while (k < r) {
        for (std::size_t j = k; j-- > 0;) {
            const Int q = round_nearest(mu[k][j]);
            if (q == 0) continue;
            for (std::size_t t = 0; t < n; ++t)
                if (basis[j][t] != 0) basis[k][t] -= q * basis[j][t];
            for (std::size_t t = 0; t < j; ++t) mu[k][t] -= Rational(q) * mu[j][t];
            mu[k][j] -= Rational(q);
        }
        if (bstar_sq[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar_sq[k - 1]) {
            ++k;
        } else {
            std::swap(basis[k], basis[k - 1]);
            gram_schmidt();
            k = k > 1 ? k - 1 : 1;
        }
    }
}

}  // namespace lcdlp

#endif
