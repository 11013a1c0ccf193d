#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "lcdlp/geometry.hpp"

using namespace lcdlp;

namespace {

ConstraintSystem make_system(std::size_t nvars,
                             std::vector<std::pair<std::vector<long>, long>> eqs,
                             std::vector<std::pair<std::vector<long>, long>> ineqs) {
    ConstraintSystem s;
    s.n = s.k = s.d = 1;
    for (std::size_t j = 0; j < nvars; ++j) s.variables.push_back({VarKind::M, {}, -1});
    auto conv = [](const std::pair<std::vector<long>, long>& row) {
        LinRow r;
        for (long c : row.first) r.coeffs.push_back(rat(c));
        r.rhs = rat(row.second);
        return r;
    };
    for (const auto& e : eqs) s.equalities.push_back(conv(e));
    for (const auto& i : ineqs) s.inequalities.push_back(conv(i));
    return s;
}

std::set<std::vector<Int>> point_set(const std::vector<std::vector<Int>>& pts) {
    return {pts.begin(), pts.end()};
}

BinaryCode parity_check_code(int n) {
    std::vector<Word> rows;
    for (int i = 0; i + 1 < n; ++i) rows.push_back(Word(3) << i);
    return BinaryCode(n, rows);
}

}  // namespace

TEST_CASE("integral points of a segment") {
    auto s = make_system(1, {}, {{{-1}, 0}, {{1}, 2}});
    auto pts = enumerate_integral_points(s, summarize(s), 100);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == std::vector<Int>{0});
    CHECK(pts[1] == std::vector<Int>{1});
    CHECK(pts[2] == std::vector<Int>{2});
}

TEST_CASE("integral points of the standard segment in the plane") {
    auto s = make_system(2, {{{1, 1}, 1}}, {{{-1, 0}, 0}, {{0, -1}, 0}});
    auto pts = enumerate_integral_points(s, summarize(s), 100);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == std::vector<Int>{0, 1});
    CHECK(pts[1] == std::vector<Int>{1, 0});
}

TEST_CASE("integral point cap") {
    auto s = make_system(1, {}, {{{-1}, 0}, {{1}, 50}});
    CHECK_THROWS_AS(enumerate_integral_points(s, summarize(s), 10), CapExceeded);
}

TEST_CASE("dimension threshold") {
    auto s = make_system(3, {}, {{{-1, 0, 0}, 0}, {{0, -1, 0}, 0}, {{0, 0, -1}, 0},
                                 {{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}});
    auto sum = summarize(s);
    CHECK_THROWS_AS(enumerate_integral_points(s, sum, 100, 2), DimensionTooHigh);
    CHECK_THROWS_AS(double_description(s, sum, 2), DimensionTooHigh);
}

TEST_CASE("misaligned lattice is still enumerated correctly") {
    // 2x - 2y = 1 has no integer solutions even though the segment is full
    // of rational points.
    auto s = make_system(2, {{{2, -2}, 1}}, {{{-1, 0}, 0}, {{1, 0}, 3}});
    auto sum = summarize(s);
    CHECK(enumerate_integral_points(s, sum, 100).empty());

    // x - 2y = 0: only even x survive.
    auto s2 = make_system(2, {{{1, -2}, 0}}, {{{-1, 0}, 0}, {{1, 0}, 5}});
    auto pts = enumerate_integral_points(s2, summarize(s2), 100);
    std::set<std::vector<Int>> want = {{0, 0}, {2, 1}, {4, 2}};
    CHECK(point_set(pts) == want);
}

TEST_CASE("joint system (3,2,2) integral points include the parity enumerator") {
    auto s = build_joint_system(3, 2, 2);
    auto sum = summarize(s);
    REQUIRE_FALSE(sum.empty);
    auto pts = enumerate_integral_points(s, sum, 100000, 16);
    auto c = parity_check_code(3);
    auto oracle = enumerator_point(s, joint_enumerator(c, dual(c)));
    REQUIRE(oracle.has_value());
    std::vector<Int> as_int;
    for (const auto& q : *oracle) {
        REQUIRE(q.get_den() == 1);
        as_int.push_back(q.get_num());
    }
    CHECK(point_set(pts).count(as_int) == 1);
}

TEST_CASE("integral points invariant under inequality row order") {
    auto s = make_system(2, {}, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, 3}});
    auto base = enumerate_integral_points(s, summarize(s), 100);
    ConstraintSystem p = s;
    std::reverse(p.inequalities.begin(), p.inequalities.end());
    auto perm = enumerate_integral_points(p, summarize(p), 100);
    CHECK(point_set(base) == point_set(perm));
    CHECK(base.size() == 10);
}

TEST_CASE("double description of the unit square") {
    auto s = make_system(2, {}, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 0}, 1}, {{0, 1}, 1}});
    auto g = double_description(s, summarize(s));
    CHECK(g.dimension == 2);
    CHECK(g.vertex_count == 4);
    CHECK(g.facet_count == 4);
    CHECK(g.integral_point_count == 4);
    std::set<std::vector<Rational>> want = {{rat(0), rat(0)}, {rat(0), rat(1)},
                                            {rat(1), rat(0)}, {rat(1), rat(1)}};
    CHECK(std::set<std::vector<Rational>>(g.vertices.begin(), g.vertices.end()) == want);
}

TEST_CASE("double description of the standard 2-simplex") {
    auto s = make_system(3, {{{1, 1, 1}, 1}},
                         {{{-1, 0, 0}, 0}, {{0, -1, 0}, 0}, {{0, 0, -1}, 0}});
    auto g = double_description(s, summarize(s));
    CHECK(g.dimension == 2);
    CHECK(g.vertex_count == 3);
    CHECK(g.facet_count == 3);
    CHECK(g.integral_point_count == 3);
}

TEST_CASE("double description with fractional vertices") {
    // triangle with vertex (1/2, 3/2)
    auto s = make_system(2, {}, {{{-1, 0}, 0}, {{1, -1}, 0}, {{1, 1}, 2}});
    auto g = double_description(s, summarize(s));
    CHECK(g.vertex_count == 3);
    bool found = false;
    for (const auto& v : g.vertices)
        if (v == std::vector<Rational>{rat(1), rat(1)}) found = true;
    CHECK(found);
    bool half = false;
    for (const auto& v : g.vertices)
        if (v == std::vector<Rational>{rat(0), rat(2)}) half = true;
    CHECK(half);
}

TEST_CASE("double description rejects unbounded and empty input") {
    auto ray = make_system(1, {}, {{{-1}, 0}});
    CHECK_THROWS_AS(double_description(ray, summarize(ray)), std::invalid_argument);
    auto empty = make_system(1, {}, {{{-1}, -1}, {{1}, 0}});
    CHECK_THROWS_AS(double_description(empty, summarize(empty)), std::invalid_argument);
}

TEST_CASE("vertices are tight on dimension-many independent rows") {
    auto s = make_system(2, {}, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 2}, 4}, {{2, 1}, 4}});
    auto sum = summarize(s);
    auto g = double_description(s, sum);
    REQUIRE(g.vertex_count == 4);
    for (const auto& v : g.vertices) {
        RationalMatrix tight(0, 0);
        std::vector<std::vector<Rational>> rows;
        for (const auto& ineq : s.inequalities) {
            Rational lhs = 0;
            for (std::size_t j = 0; j < v.size(); ++j) lhs += ineq.coeffs[j] * v[j];
            if (lhs == ineq.rhs) rows.push_back(ineq.coeffs);
        }
        RationalMatrix m(rows.size(), v.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = rows[i][j];
        CHECK(rank(m) == static_cast<std::size_t>(g.dimension));
    }
}

TEST_CASE("redundancy filter") {
    auto s = make_system(1, {}, {{{1}, 1}, {{1}, 2}, {{-1}, 0}});
    CHECK(redundancy_filter(s) == std::vector<std::size_t>{0, 2});

    auto square = make_system(2, {}, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 0}, 1}, {{0, 1}, 1},
                                      {{1, 1}, 3}});
    CHECK(redundancy_filter(square) == std::vector<std::size_t>{0, 1, 2, 3});

    // duplicate rows: lower index wins
    auto dup = make_system(1, {}, {{{1}, 1}, {{1}, 1}, {{-1}, 0}});
    CHECK(redundancy_filter(dup) == std::vector<std::size_t>{0, 2});
    auto dup2 = make_system(1, {}, {{{2}, 2}, {{1}, 1}, {{-1}, 0}});  // same after scaling
    CHECK(redundancy_filter(dup2) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("oracle enumerators appear as integral points across a small grid") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            for (int d = 1; d <= n; ++d) {
                auto code = exhaustive_lcd_search(n, k, d);
                if (!code) continue;
                auto s = build_joint_system(n, k, d);
                auto sum = summarize(s);
                REQUIRE_FALSE(sum.empty);
                if (sum.dimension > 6) continue;
                auto pts = enumerate_integral_points(s, sum, 100000, 6);
                auto oracle = enumerator_point(s, joint_enumerator(*code, dual(*code)));
                REQUIRE(oracle.has_value());
                std::vector<Int> as_int;
                for (const auto& q : *oracle) as_int.push_back(q.get_num());
                CHECK(point_set(pts).count(as_int) == 1);
            }
}

TEST_CASE("dimension-zero joint polytope reports a single vertex and no facets") {
    bool seen = false;
    for (int n = 2; n <= 6 && !seen; ++n)
        for (int k = 1; k <= n && !seen; ++k)
            for (int d = n; d >= 1 && !seen; --d) {
                auto s = build_joint_system(n, k, d);
                auto sum = summarize(s);
                if (sum.empty || sum.dimension != 0) continue;
                seen = true;
                auto g = double_description(s, sum);
                CHECK(g.vertex_count == 1);
                CHECK(g.facet_count == 0);
                CHECK(g.integral_point_count <= 1);
                CHECK(satisfies(s, g.vertices[0]));
            }
    CHECK(seen);
}

TEST_CASE("geometry json report") {
    auto s = make_system(1, {}, {{{-1}, 0}, {{1}, 2}});
    auto sum = summarize(s);
    auto g = double_description(s, sum);
    auto j = geometry_report_json(s, g);
    CHECK(j["dim"] == 1);
    CHECK(j["vertices"] == 2);
    CHECK(j["facets"] == 2);
    CHECK(j["integral_points"] == 3);
    CHECK(j["points"].size() == 5);
    CHECK(j["points"][0]["type"] == "vertex");
}
