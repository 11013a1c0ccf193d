#ifndef LCDLP_COMBINATORICS_HPP
#define LCDLP_COMBINATORICS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lcdlp/rational.hpp"

namespace lcdlp {

// Exponent profile of a joint-enumerator monomial a^n00 b^n01 c^n10 d^n11:
// the count of coordinate pairs (0,0), (0,1), (1,0), (1,1).
struct Composition {
    int n00 = 0, n01 = 0, n10 = 0, n11 = 0;

    int n() const { return n00 + n01 + n10 + n11; }

    std::array<int, 4> tuple() const { return {n00, n01, n10, n11}; }

    bool operator==(const Composition& o) const { return tuple() == o.tuple(); }
    bool operator!=(const Composition& o) const { return !(*this == o); }
    // Lexicographic descending enumeration order.
    bool operator<(const Composition& o) const { return tuple() > o.tuple(); }
};

// All 4-part compositions of n, lexicographically descending on
// (n00,n01,n10,n11); count = binomial(n+3,3). The first entry is (n,0,0,0).
inline std::vector<Composition> enumerate_compositions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_compositions: negative n");
    std::vector<Composition> out;
    for (int i = n; i >= 0; --i)
        for (int j = n - i; j >= 0; --j)
            for (int k = n - i - j; k >= 0; --k)
                out.push_back({i, j, k, n - i - j - k});
    return out;
}

// Index of a composition within enumerate_compositions(c.n()), O(1) lookup
// table shared per degree.
class CompositionIndex {
public:
    explicit CompositionIndex(int n) : n_(n), list_(enumerate_compositions(n)) {
        lut_.assign(static_cast<std::size_t>(n + 1) * (n + 1) * (n + 1), SIZE_MAX);
        for (std::size_t i = 0; i < list_.size(); ++i) lut_[key(list_[i])] = i;
    }

    int n() const { return n_; }
    std::size_t size() const { return list_.size(); }
    const std::vector<Composition>& list() const { return list_; }
    const Composition& at(std::size_t i) const { return list_[i]; }

    std::size_t index(const Composition& c) const {
        if (c.n() != n_) throw std::invalid_argument("CompositionIndex: wrong degree");
        return lut_[key(c)];
    }

private:
    std::size_t key(const Composition& c) const {
        return (static_cast<std::size_t>(c.n00) * (n_ + 1) + c.n01) * (n_ + 1) + c.n10;
    }

    int n_;
    std::vector<Composition> list_;
    std::vector<std::size_t> lut_;
};

inline Int binomial(long n, long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return b;
}

// values[i][x] = P_i(x), from sum_i P_i(x) z^i = (1+z)^(n-x) (1-z)^x.
struct KrawtchukTable {
    int n = 0;
    std::vector<std::vector<Int>> values;

    const Int& at(int i, int x) const { return values[i][x]; }
};

inline KrawtchukTable krawtchuk_table(int n) {
    if (n < 0) throw std::invalid_argument("krawtchuk_table: negative n");
    KrawtchukTable t;
    t.n = n;
    t.values.assign(n + 1, std::vector<Int>(n + 1));
    for (int x = 0; x <= n; ++x) {
        // Expand (1+z)^(n-x) (1-z)^x one linear factor at a time.
        std::vector<Int> poly(n + 1);
        poly[0] = 1;
        int deg = 0;
        for (int f = 0; f < n; ++f) {
            const int sign = f < n - x ? 1 : -1;
            for (int i = deg + 1; i > 0; --i) poly[i] += sign * poly[i - 1];
            ++deg;
        }
        for (int i = 0; i <= n; ++i) t.values[i][x] = poly[i];
    }
    return t;
}

namespace detail {

// Dense homogeneous 4-variable polynomial of fixed degree, coefficients
// indexed through CompositionIndex.
struct HomogeneousPoly {
    int degree = 0;
    std::vector<Int> coeff;  // aligned with enumerate_compositions(degree)
};

// Multiply by the linear form s0*a + s1*b + s2*c + s3*d.
inline HomogeneousPoly multiply_linear(const HomogeneousPoly& p, const std::array<int, 4>& s,
                                       const CompositionIndex& from, const CompositionIndex& to) {
    HomogeneousPoly q;
    q.degree = p.degree + 1;
    q.coeff.assign(to.size(), Int(0));
    for (std::size_t i = 0; i < p.coeff.size(); ++i) {
        if (p.coeff[i] == 0) continue;
        Composition c = from.at(i);
        for (int v = 0; v < 4; ++v) {
            if (s[v] == 0) continue;
            Composition d = c;
            (v == 0 ? d.n00 : v == 1 ? d.n01 : v == 2 ? d.n10 : d.n11) += 1;
            q.coeff[to.index(d)] += s[v] * p.coeff[i];
        }
    }
    return q;
}

}  // namespace detail

// The monomial transform T induced by the substitution
//   a <- a+b+c+d,  b <- a+b-c-d,  c <- a-b+c-d,  d <- a-b-c+d
// followed by division by 2^n.  Substituting into the monomial of composition
// m' yields sum_m T[m,m'] * (monomial of m); T is an involution.
inline RationalMatrix macwilliams_monomial_matrix(int n) {
    if (n < 0) throw std::invalid_argument("macwilliams_monomial_matrix: negative n");
    std::vector<CompositionIndex> idx;
    idx.reserve(n + 1);
    for (int t = 0; t <= n; ++t) idx.emplace_back(t);

    static constexpr std::array<std::array<int, 4>, 4> kSubst = {{
        {1, 1, 1, 1},    // image of a
        {1, 1, -1, -1},  // image of b
        {1, -1, 1, -1},  // image of c
        {1, -1, -1, 1},  // image of d
    }};

    const CompositionIndex& full = idx[n];
    RationalMatrix t_mat(full.size(), full.size());
    const Int scale = pow2(static_cast<unsigned long>(n));
    for (std::size_t col = 0; col < full.size(); ++col) {
        Composition c = full.at(col);
        detail::HomogeneousPoly p;
        p.degree = 0;
        p.coeff = {Int(1)};
        const std::array<int, 4> reps = {c.n00, c.n01, c.n10, c.n11};
        for (int v = 0; v < 4; ++v)
            for (int r = 0; r < reps[v]; ++r)
                p = detail::multiply_linear(p, kSubst[v], idx[p.degree], idx[p.degree + 1]);
        for (std::size_t row = 0; row < full.size(); ++row)
            if (p.coeff[row] != 0) t_mat(row, col) = rat(p.coeff[row], scale);
    }
    return t_mat;
}

}  // namespace lcdlp

#endif
