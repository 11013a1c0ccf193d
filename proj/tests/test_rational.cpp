#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lcdlp/rational.hpp"

using namespace lcdlp;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rat(rows[i][j]);
    return m;
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rat(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rational canonical form and serialization") {
    CHECK(to_string(rat(4, 2)) == "2");
    CHECK(to_string(rat(-3, 6)) == "-1/2");
    CHECK(to_string(rat(0, 5)) == "0");
    CHECK(rational_from_string("7/21") == rat(1, 3));
    CHECK(rational_from_string("-5") == rat(-5));
    CHECK_THROWS(rat(1, 0));
}

TEST_CASE("rational exactness round-trips") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 50);
    for (int t = 0; t < 200; ++t) {
        Rational p = rat(num(rng), den(rng));
        Rational q = rat(num(rng), den(rng));
        CHECK((p + q) - q == p);
        if (q != 0) CHECK((p * q) / q == p);
    }
}

TEST_CASE("rank basics") {
    CHECK(rank(RationalMatrix::identity(3)) == 3);
    CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(RationalMatrix(4, 5)) == 0);
}

TEST_CASE("rank equals rank of transpose") {
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
        auto m = random_matrix(rng, 1 + t % 5, 1 + (t / 5) % 5);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("solve_linear") {
    auto id = RationalMatrix::identity(2);
    auto x = solve_linear(id, {rat(3), rat(4)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 3);
    CHECK((*x)[1] == 4);

    auto under = solve_linear(from_rows({{1, 1}}), {rat(2)});
    REQUIRE(under.has_value());
    CHECK((*under)[0] + (*under)[1] == 2);

    CHECK_FALSE(solve_linear(from_rows({{1}, {1}}), {rat(0), rat(1)}).has_value());
}

TEST_CASE("solve_linear residual is exactly zero on random consistent systems") {
    std::mt19937 rng(23);
    for (int t = 0; t < 40; ++t) {
        auto a = random_matrix(rng, 2 + t % 4, 2 + (t / 3) % 4);
        auto x0 = random_matrix(rng, a.cols(), 1);
        std::vector<Rational> xv(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) xv[j] = x0(j, 0);
        auto b = a.apply(xv);
        auto x = solve_linear(a, b);
        REQUIRE(x.has_value());
        CHECK(a.apply(*x) == b);
    }
}

TEST_CASE("nullspace_basis") {
    CHECK(nullspace_basis(RationalMatrix::identity(2)).empty());

    auto one = nullspace_basis(from_rows({{1, 1}}));
    REQUIRE(one.size() == 1);
    CHECK(one[0][0] + one[0][1] == 0);

    CHECK(nullspace_basis(RationalMatrix(1, 3)).size() == 3);

    std::mt19937 rng(31);
    for (int t = 0; t < 30; ++t) {
        auto a = random_matrix(rng, 2 + t % 3, 3 + t % 4);
        auto basis = nullspace_basis(a);
        CHECK(basis.size() == a.cols() - rank(a));
        for (const auto& v : basis)
            for (const auto& entry : a.apply(v)) CHECK(entry == 0);
    }
}

TEST_CASE("integer system solver") {
    // x + 2y = 5 over Z
    auto sol = solve_integer_system({{Int(1), Int(2)}}, {Int(5)});
    REQUIRE(sol.has_value());
    CHECK(sol->particular[0] + 2 * sol->particular[1] == 5);
    REQUIRE(sol->lattice.size() == 1);
    CHECK(sol->lattice[0][0] + 2 * sol->lattice[0][1] == 0);
    CHECK((abs(sol->lattice[0][0]) == 2 && abs(sol->lattice[0][1]) == 1));

    // 2x = 1 has no integer solution
    CHECK_FALSE(solve_integer_system({{Int(2)}}, {Int(1)}).has_value());

    // inconsistent
    CHECK_FALSE(solve_integer_system({{Int(1)}, {Int(1)}}, {Int(0), Int(1)}).has_value());

    // 2x + 2y = 4, x - y = 0 -> x = y = 1
    auto s2 = solve_integer_system({{Int(2), Int(2)}, {Int(1), Int(-1)}}, {Int(4), Int(0)});
    REQUIRE(s2.has_value());
    CHECK(s2->particular == std::vector<Int>{Int(1), Int(1)});
    CHECK(s2->lattice.empty());
}

TEST_CASE("integer solver covers the full solution lattice") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<long> coef(-4, 4);
    for (int t = 0; t < 40; ++t) {
        const std::size_t m = 1 + t % 3, n = 2 + t % 4;
        std::vector<std::vector<Int>> a(m, std::vector<Int>(n));
        std::vector<Int> x(n), b(m, Int(0));
        for (auto& v : x) v = coef(rng);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] = coef(rng);
                b[i] += a[i][j] * x[j];
            }
        auto sol = solve_integer_system(a, b);
        REQUIRE(sol.has_value());
        for (std::size_t i = 0; i < m; ++i) {
            Int lhs = 0;
            for (std::size_t j = 0; j < n; ++j) lhs += a[i][j] * sol->particular[j];
            CHECK(lhs == b[i]);
        }
        // The planted solution must lie in particular + lattice: solve the
        // difference against the lattice basis over the rationals and check
        // integrality of the unique coordinates.
        RationalMatrix latt(n, sol->lattice.size());
        for (std::size_t j = 0; j < sol->lattice.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) latt(i, j) = rat(sol->lattice[j][i]);
        std::vector<Rational> diff(n);
        for (std::size_t i = 0; i < n; ++i) diff[i] = rat(x[i] - sol->particular[i]);
        auto coords = solve_linear(latt, diff);
        REQUIRE(coords.has_value());
        for (const auto& c : *coords) CHECK(c.get_den() == 1);
    }
}
