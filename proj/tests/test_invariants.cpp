#include <catch2/catch_amalgamated.hpp>

#include "lcdlp/invariants.hpp"

using namespace lcdlp;

namespace {

BinaryCode parity_check_code(int n) {
    std::vector<Word> rows;
    for (int i = 0; i + 1 < n; ++i) rows.push_back(Word(3) << i);
    return BinaryCode(n, rows);
}

BinaryCode full_space(int n) {
    std::vector<Word> rows;
    for (int i = 0; i < n; ++i) rows.push_back(Word(1) << i);
    return BinaryCode(n, rows);
}

// det(g) read off as the t^4 coefficient of det(I - t g).
Rational det4(const RationalMatrix& g) {
    auto p = detail::char_det(g);
    p.resize(5);
    return p[4];
}

}  // namespace

TEST_CASE("group closure orders") {
    auto gens = make_group_generators();
    auto g = close_group(gens);
    CHECK(g.elements.size() == 12);

    CHECK(close_group({gens[2]}).elements.size() == 2);  // <-I>
    CHECK(close_group({gens[0]}).elements.size() == 2);  // H^2 = I
    CHECK(close_group({gens[1]}).elements.size() == 2);  // J^2 = I
    CHECK(close_group({gens[0], gens[1]}).elements.size() == 6);
}

TEST_CASE("group structure: -I central, determinants +-1") {
    auto gens = make_group_generators();
    auto g = close_group(gens);
    const RationalMatrix& neg = gens[2];
    bool has_neg = false;
    for (const auto& e : g.elements) {
        if (e == neg) has_neg = true;
        CHECK((e * neg == neg * e));
        Rational d = det4(e);
        CHECK((d == 1 || d == -1));
    }
    CHECK(has_neg);
}

TEST_CASE("closure cap") {
    CHECK_THROWS_AS(close_group(make_group_generators(), 5), CapExceeded);
}

TEST_CASE("closure rejects singular generators") {
    RationalMatrix z(4, 4);
    CHECK_THROWS_AS(close_group({z}), std::invalid_argument);
}

TEST_CASE("molien series of the trivial group counts all monomials") {
    MatrixGroup trivial;
    trivial.elements.push_back(RationalMatrix::identity(4));
    auto s = molien_series(trivial, 6);
    for (std::size_t d = 0; d <= 6; ++d)
        CHECK(s.coefficients[d] == Rational(binomial(static_cast<long>(d) + 3, 3)));
}

TEST_CASE("expand_rational_function basics") {
    auto geom = expand_rational_function({rat(1)}, {{rat(1), rat(-1)}}, 4);
    CHECK(geom.coefficients == std::vector<Rational>{rat(1), rat(1), rat(1), rat(1), rat(1)});

    // (1+2t^2+t^4)/((1-t^2)^3(1-t^6)) by hand: 1, 0, 5, 0, 13, 0, 26.
    std::vector<Rational> one_minus_t2 = {rat(1), rat(0), rat(-1)};
    std::vector<Rational> one_minus_t6 = {rat(1), rat(0), rat(0), rat(0), rat(0), rat(0), rat(-1)};
    auto s = expand_rational_function({rat(1), rat(0), rat(2), rat(0), rat(1)},
                                      {one_minus_t2, one_minus_t2, one_minus_t2, one_minus_t6}, 6);
    CHECK(s.coefficients ==
          std::vector<Rational>{rat(1), rat(0), rat(5), rat(0), rat(13), rat(0), rat(26)});

    auto m = molien_closed_form(6);
    CHECK(m.coefficients ==
          std::vector<Rational>{rat(1), rat(0), rat(4), rat(0), rat(11), rat(0), rat(23)});
}

TEST_CASE("molien series of G matches the closed form") {
    auto g = close_group(make_group_generators());
    auto s = molien_series(g, 20);
    auto want = molien_closed_form(20);
    CHECK(s == want);
    for (std::size_t d = 1; d <= 20; d += 2) CHECK(s.coefficients[d] == 0);
}

TEST_CASE("invariant dimensions match Molien coefficients") {
    auto g = close_group(make_group_generators());
    auto s = molien_series(g, 8);
    CHECK(invariant_dimension(g, 0) == 1);
    // degree-2 invariants: a^2+bc+d^2, ab-c^2-d^2, ac-bc+c^2-d^2, b^2-bc+c^2
    CHECK(invariant_dimension(g, 2) == 4);
    for (int d = 0; d <= 8; ++d)
        CHECK(Rational(invariant_dimension(g, d)) == s.coefficients[d]);
}

TEST_CASE("enumerator invariance") {
    auto g = close_group(make_group_generators());
    auto hj = close_group({make_group_generators()[0], make_group_generators()[1]});

    auto p3 = parity_check_code(3);
    CHECK(check_enumerator_invariance(joint_enumerator(p3, dual(p3)), g));
    CHECK(check_enumerator_invariance(joint_enumerator(p3, dual(p3)), hj));

    auto f4 = full_space(4);
    CHECK(check_enumerator_invariance(joint_enumerator(f4, dual(f4)), g));

    auto p5 = parity_check_code(5);
    CHECK(check_enumerator_invariance(joint_enumerator(p5, dual(p5)), g));

    // invariance needs the dual pairing: J(C, C) of a non-self-dual code fails
    auto bad = joint_enumerator(p3, p3);
    CHECK_FALSE(check_enumerator_invariance(bad, g));
}

TEST_CASE("non-LCD codes still satisfy the invariance propositions") {
    auto p4 = parity_check_code(4);
    REQUIRE_FALSE(is_lcd(p4));
    auto g = close_group(make_group_generators());
    CHECK(check_enumerator_invariance(joint_enumerator(p4, dual(p4)), g));
}
