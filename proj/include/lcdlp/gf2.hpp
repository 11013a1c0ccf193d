#ifndef LCDLP_GF2_HPP
#define LCDLP_GF2_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcdlp/combinatorics.hpp"
#include "lcdlp/rational.hpp"

namespace lcdlp {

// Brute-force ground truth over GF(2): codewords are bit-packed words,
// bit i = coordinate i.
using Word = std::uint32_t;

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kMaxLength = 31;
constexpr std::uint64_t kDefaultPairBudget = 1ull << 26;

inline int gf2_rank(std::vector<Word> rows) {
    int r = 0;
    for (int bit = 0; bit < kMaxLength + 1 && r < static_cast<int>(rows.size()); ++bit) {
        const Word mask = Word(1) << bit;
        int p = r;
        while (p < static_cast<int>(rows.size()) && !(rows[p] & mask)) ++p;
        if (p == static_cast<int>(rows.size())) continue;
        std::swap(rows[r], rows[p]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != r && (rows[i] & mask)) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

struct BinaryCode {
    int n = 0;  // length
    int k = 0;  // dimension
    std::vector<Word> generator;  // k rows of full rank

    BinaryCode() = default;
    BinaryCode(int length, std::vector<Word> rows) : n(length), generator(std::move(rows)) {
        if (length < 0 || length > kMaxLength)
            throw std::invalid_argument("BinaryCode: length out of range");
        const Word mask = length == 0 ? 0 : ((Word(1) << length) - 1);
        for (Word& r : generator) r &= mask;
        k = static_cast<int>(generator.size());
        if (gf2_rank(generator) != k)
            throw std::invalid_argument("BinaryCode: generator matrix is rank-deficient");
    }
};

// All 2^k codewords, in the order of message words 0..2^k-1.
inline std::vector<Word> codewords(const BinaryCode& c,
                                   std::uint64_t budget = kDefaultPairBudget) {
    if ((std::uint64_t(1) << c.k) > budget)
        throw BudgetExceeded("codewords: 2^k exceeds enumeration budget");
    std::vector<Word> out(std::size_t(1) << c.k, 0);
    for (std::size_t m = 1; m < out.size(); ++m) {
        const int low = std::countr_zero(m);
        out[m] = out[m ^ (std::size_t(1) << low)] ^ c.generator[low];
    }
    return out;
}

inline BinaryCode dual(const BinaryCode& c) {
    // Nullspace of the generator: RREF, then one dual generator per free column.
    std::vector<Word> rows = c.generator;
    std::vector<int> pivot_of_row;
    std::vector<bool> is_pivot(c.n, false);
    int r = 0;
    for (int col = 0; col < c.n && r < c.k; ++col) {
        const Word mask = Word(1) << col;
        int p = r;
        while (p < c.k && !(rows[p] & mask)) ++p;
        if (p == c.k) continue;
        std::swap(rows[r], rows[p]);
        for (int i = 0; i < c.k; ++i)
            if (i != r && (rows[i] & mask)) rows[i] ^= rows[r];
        pivot_of_row.push_back(col);
        is_pivot[col] = true;
        ++r;
    }
    std::vector<Word> dual_rows;
    for (int free = 0; free < c.n; ++free) {
        if (is_pivot[free]) continue;
        Word v = Word(1) << free;
        for (int i = 0; i < c.k; ++i)
            if (rows[i] & (Word(1) << free)) v |= Word(1) << pivot_of_row[i];
        dual_rows.push_back(v);
    }
    return BinaryCode(c.n, std::move(dual_rows));
}

// LCD test: C meets its dual trivially iff rank of the stacked generators is n.
inline bool is_lcd(const BinaryCode& c) {
    BinaryCode d = dual(c);
    std::vector<Word> stacked = c.generator;
    stacked.insert(stacked.end(), d.generator.begin(), d.generator.end());
    return gf2_rank(std::move(stacked)) == c.n;
}

struct WeightDistribution {
    int n = 0;
    std::vector<Int> counts;  // A_0..A_n
};

inline WeightDistribution weight_distribution(const BinaryCode& c,
                                              std::uint64_t budget = kDefaultPairBudget) {
    WeightDistribution w;
    w.n = c.n;
    w.counts.assign(c.n + 1, Int(0));
    for (Word u : codewords(c, budget)) w.counts[std::popcount(u)] += 1;
    return w;
}

inline int min_distance(const BinaryCode& c, std::uint64_t budget = kDefaultPairBudget) {
    int d = c.n + 1;
    for (Word u : codewords(c, budget))
        if (u != 0) d = std::min(d, std::popcount(u));
    return d;  // n+1 for the zero code
}

// Coefficient table M over compositions of n: M(c) counts codeword pairs
// (u,v) whose coordinate-pair profile is c.
struct JointEnumerator {
    int n = 0;
    std::vector<Int> coeffs;  // aligned with enumerate_compositions(n)

    Int coeff(const CompositionIndex& idx, const Composition& c) const {
        return coeffs[idx.index(c)];
    }
};

inline JointEnumerator joint_enumerator(const BinaryCode& a, const BinaryCode& b,
                                        std::uint64_t budget = kDefaultPairBudget) {
    if (a.n != b.n) throw std::invalid_argument("joint_enumerator: length mismatch");
    if ((std::uint64_t(1) << (a.k + b.k)) > budget)
        throw BudgetExceeded("joint_enumerator: pair count exceeds budget");
    CompositionIndex idx(a.n);
    JointEnumerator je;
    je.n = a.n;
    je.coeffs.assign(idx.size(), Int(0));
    const auto wa = codewords(a, budget);
    const auto wb = codewords(b, budget);
    for (Word u : wa)
        for (Word v : wb) {
            Composition c;
            c.n11 = std::popcount(u & v);
            c.n10 = std::popcount(u & ~v);
            c.n01 = std::popcount(~u & v);
            c.n00 = a.n - c.n01 - c.n10 - c.n11;
            je.coeffs[idx.index(c)] += 1;
        }
    return je;
}

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Visits every k-dimensional subspace of GF(2)^n exactly once through its
// canonical reduced-row-echelon generator, keyed by pivot-column sets.
// Stops early when fn returns false.
inline void for_each_code(int n, int k, const std::function<bool(const BinaryCode&)>& fn) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        fn(BinaryCode(n, {}));
        return;
    }

    std::vector<int> pivots(k);
    std::function<bool(int, int)> choose = [&](int pos, int from) -> bool {
        if (pos == k) {
            // Free entries: row i, columns right of pivots[i] that are not pivots.
            std::vector<std::pair<int, int>> free_slots;  // (row, col)
            std::vector<bool> is_pivot(n, false);
            for (int p : pivots) is_pivot[p] = true;
            for (int i = 0; i < k; ++i)
                for (int col = pivots[i] + 1; col < n; ++col)
                    if (!is_pivot[col]) free_slots.emplace_back(i, col);
            const std::uint64_t total = std::uint64_t(1) << free_slots.size();
            std::vector<Word> rows(k);
            for (std::uint64_t assign = 0; assign < total; ++assign) {
                for (int i = 0; i < k; ++i) rows[i] = Word(1) << pivots[i];
                for (std::size_t s = 0; s < free_slots.size(); ++s)
                    if (assign & (std::uint64_t(1) << s))
                        rows[free_slots[s].first] |= Word(1) << free_slots[s].second;
                if (!fn(BinaryCode(n, rows))) return false;
            }
            return true;
        }
        for (int c = from; c <= n - (k - pos); ++c) {
            pivots[pos] = c;
            if (!choose(pos + 1, c + 1)) return false;
        }
        return true;
    };
    choose(0, 0);
}

// First LCD code with minimum distance >= d in canonical order, or nullopt.
inline std::optional<BinaryCode> exhaustive_lcd_search(int n, int k, int d, int cap = 10) {
    if (n > cap) throw CapExceeded("exhaustive_lcd_search: n exceeds cap");
    std::optional<BinaryCode> found;
    for_each_code(n, k, [&](const BinaryCode& c) {
        if (min_distance(c) >= d && is_lcd(c)) {
            found = c;
            return false;
        }
        return true;
    });
    return found;
}

// Generator matrix file format: one row per line, '0'/'1' characters only.
inline BinaryCode read_generator_matrix(std::istream& in) {
    std::vector<Word> rows;
    std::string line;
    int n = -1;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (n < 0) {
            n = static_cast<int>(line.size());
            if (n > kMaxLength) throw std::invalid_argument("generator matrix: row too long");
        } else if (static_cast<int>(line.size()) != n) {
            throw std::invalid_argument("generator matrix: ragged rows");
        }
        Word w = 0;
        for (int i = 0; i < n; ++i) {
            if (line[i] == '1') w |= Word(1) << i;
            else if (line[i] != '0')
                throw std::invalid_argument("generator matrix: expected '0'/'1'");
        }
        rows.push_back(w);
    }
    if (n < 0) throw std::invalid_argument("generator matrix: empty file");
    return BinaryCode(n, std::move(rows));
}

inline void write_generator_matrix(const BinaryCode& c, std::ostream& out) {
    for (Word row : c.generator) {
        for (int i = 0; i < c.n; ++i) out.put(row & (Word(1) << i) ? '1' : '0');
        out.put('\n');
    }
}

}  // namespace lcdlp

#endif
