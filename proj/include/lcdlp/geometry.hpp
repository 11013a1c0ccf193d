#ifndef LCDLP_GEOMETRY_HPP
#define LCDLP_GEOMETRY_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lcdlp/lp.hpp"
#include "lcdlp/polytope.hpp"
#include "lcdlp/rational.hpp"

namespace lcdlp {

struct DimensionTooHigh : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PolytopeGeometry {
    long dimension = -1;
    std::size_t facet_count = 0;
    std::size_t vertex_count = 0;
    std::size_t integral_point_count = 0;
    std::vector<std::vector<Rational>> vertices;
    std::vector<std::vector<Int>> integral_points;
};

namespace detail {

// Scale a rational row to a coprime integer row (positive scaling only).
inline std::vector<Int> clear_denominators(const std::vector<Rational>& row) {
    Int lcm = 1;
    for (const auto& v : row)
        if (v != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> out(row.size());
    Int g = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] == 0) continue;
        out[j] = row[j].get_num() * (lcm / row[j].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[j].get_mpz_t());
    }
    if (g > 1)
        for (auto& v : out)
            if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return out;
}

inline Int ceil_rat(const Rational& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Int floor_rat(const Rational& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

}  // namespace detail

// All integer points of the polytope.  The affine hull (equalities plus
// implicit inequalities from the summary) is solved over Z first, so the
// search runs over the lattice of the hull — exponential only in the polytope
// dimension, and integer parameter vectors map exactly onto the ambient
// integer solutions of the hull.
inline std::vector<std::vector<Int>> enumerate_integral_points(const ConstraintSystem& s,
                                                               const PolytopeSummary& summary,
                                                               std::size_t cap,
                                                               long dim_threshold = 16,
                                                               const SolveControl& ctl = {}) {
    if (summary.empty) throw std::invalid_argument("enumerate_integral_points: empty polytope");
    if (summary.dimension > dim_threshold)
        throw DimensionTooHigh("enumerate_integral_points: dimension " +
                               std::to_string(summary.dimension) + " above threshold");
    const std::size_t nv = s.variables.size();

    // Hull equalities over Z.
    std::vector<std::vector<Int>> ia;
    std::vector<Int> ib;
    for (std::size_t i = 0; i < summary.affine_hull.rows(); ++i) {
        std::vector<Rational> row(nv + 1);
        for (std::size_t j = 0; j < nv; ++j) row[j] = summary.affine_hull(i, j);
        row[nv] = summary.affine_hull_rhs[i];
        auto irow = detail::clear_denominators(row);
        ib.push_back(irow.back());
        irow.pop_back();
        ia.push_back(std::move(irow));
    }
    std::optional<IntegerSolution> lat;
    if (ia.empty()) {
        lat.emplace();
        lat->particular.assign(nv, Int(0));
        for (std::size_t j = 0; j < nv; ++j) {
            std::vector<Int> e(nv);
            e[j] = 1;
            lat->lattice.push_back(std::move(e));
        }
    } else {
        lat = solve_integer_system(ia, ib);
    }
    if (!lat) return {};  // hull carries no integer point at all
    lll_reduce(lat->lattice);
    const auto& p0 = lat->particular;
    const auto& basis = lat->lattice;
    const std::size_t r = basis.size();

    auto accept = [&](const std::vector<Int>& x) {
        std::vector<Rational> q(nv);
        for (std::size_t j = 0; j < nv; ++j) q[j] = Rational(x[j]);
        return satisfies(s, q);
    };

    std::vector<std::vector<Int>> found;
    if (r == 0) {
        if (accept(p0)) found.push_back(p0);
        return found;
    }

    // Inequalities in lattice coordinates: c . t <= rhs.
    struct IRow {
        std::vector<Int> c;
        Int rhs;
    };
    std::vector<IRow> rows;
    for (const auto& ineq : s.inequalities) {
        std::vector<Rational> row(r + 1);
        Rational shift = ineq.rhs;
        for (std::size_t j = 0; j < nv; ++j) {
            if (ineq.coeffs[j] == 0) continue;
            shift -= ineq.coeffs[j] * Rational(p0[j]);
            for (std::size_t f = 0; f < r; ++f)
                if (basis[f][j] != 0) row[f] += ineq.coeffs[j] * Rational(basis[f][j]);
        }
        row[r] = shift;
        auto irow = detail::clear_denominators(row);
        IRow out{{irow.begin(), irow.begin() + static_cast<long>(r)}, irow.back()};
        bool zero = true;
        for (const auto& v : out.c)
            if (v != 0) zero = false;
        if (zero) {
            if (out.rhs < 0) return {};  // row is violated on the whole hull lattice
            continue;
        }
        rows.push_back(std::move(out));
    }

    // Integer box per lattice parameter, from exact LPs over the t-polytope.
    ConstraintSystem ts;
    ts.n = s.n;
    ts.k = s.k;
    ts.d = s.d;
    ts.variables.assign(r, VariableIndex{});
    for (const auto& row : rows) {
        LinRow lr;
        for (const auto& v : row.c) lr.coeffs.push_back(Rational(v));
        lr.rhs = Rational(row.rhs);
        ts.inequalities.push_back(std::move(lr));
    }
    auto bounds = variable_bounds(ts, ctl);
    std::vector<Int> lo(r), hi(r);
    for (std::size_t f = 0; f < r; ++f) {
        lo[f] = detail::ceil_rat(bounds[f].first);
        if (!bounds[f].second)
            throw std::invalid_argument("enumerate_integral_points: unbounded lattice direction");
        hi[f] = detail::floor_rat(*bounds[f].second);
        if (lo[f] > hi[f]) return {};
    }

    // minimum possible contribution of parameters f..r-1 to each row
    std::vector<std::vector<Int>> min_tail(rows.size(), std::vector<Int>(r + 1));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t f = r; f-- > 0;) {
            const Int& c = rows[i].c[f];
            min_tail[i][f] = min_tail[i][f + 1] + (c > 0 ? c * lo[f] : c * hi[f]);
        }

    std::vector<Int> partial(rows.size());  // contribution of fixed prefix
    std::vector<Int> t(r);
    std::size_t nodes = 0;
    const std::size_t node_cap = std::max<std::size_t>((cap + 1) * 4096, std::size_t(1) << 22);

    auto dfs = [&](auto&& self, std::size_t depth) -> void {
        if (++nodes > node_cap) throw CapExceeded("enumerate_integral_points: search too large");
        if (depth == r) {
            std::vector<Int> x(nv);
            for (std::size_t j = 0; j < nv; ++j) {
                x[j] = p0[j];
                for (std::size_t f = 0; f < r; ++f)
                    if (basis[f][j] != 0) x[j] += basis[f][j] * t[f];
            }
            if (accept(x)) {
                if (found.size() >= cap) throw CapExceeded("enumerate_integral_points: cap hit");
                found.push_back(std::move(x));
            }
            return;
        }
        for (Int v = lo[depth]; v <= hi[depth]; ++v) {
            t[depth] = v;
            bool ok = true;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                partial[i] += rows[i].c[depth] * v;
                if (partial[i] + min_tail[i][depth + 1] > rows[i].rhs) ok = false;
            }
            if (ok) self(self, depth + 1);
            for (std::size_t i = 0; i < rows.size(); ++i) partial[i] -= rows[i].c[depth] * v;
        }
    };
    dfs(dfs, 0);
    std::sort(found.begin(), found.end());
    return found;
}

// Essential inequality indices: duplicates collapse to the lowest index, and a
// surviving row stays only when dropping it lets its left side exceed the rhs.
// With a summary, rows are first restricted to the affine hull, so rows that
// coincide only modulo the hull equalities are also recognized as duplicates
// and hull-parallel rows are never reported as facets.
inline std::vector<std::size_t> redundancy_filter(const ConstraintSystem& s,
                                                  const SolveControl& ctl = {},
                                                  const PolytopeSummary* summary = nullptr) {
    const std::size_t ni = s.inequalities.size();
    const std::size_t nv = s.variables.size();
    std::vector<bool> dropped(ni, false);

    std::optional<std::vector<Rational>> x0;
    std::vector<std::vector<Rational>> basis;
    if (summary && !summary->empty) {
        x0 = solve_linear(summary->affine_hull, summary->affine_hull_rhs);
        if (!x0) throw std::logic_error("redundancy_filter: inconsistent affine hull");
        basis = nullspace_basis(summary->affine_hull);
    }
    const std::size_t r = x0 ? basis.size() : nv;

    // Canonical integer form of each row, in hull coordinates when available.
    std::vector<std::vector<Int>> canon(ni);
    for (std::size_t i = 0; i < ni; ++i) {
        const auto& ineq = s.inequalities[i];
        std::vector<Rational> row;
        if (x0) {
            row.assign(r + 1, rat(0));
            row[r] = ineq.rhs;
            for (std::size_t j = 0; j < nv; ++j) {
                if (ineq.coeffs[j] == 0) continue;
                row[r] -= ineq.coeffs[j] * (*x0)[j];
                for (std::size_t f = 0; f < r; ++f)
                    if (basis[f][j] != 0) row[f] += ineq.coeffs[j] * basis[f][j];
            }
        } else {
            row = ineq.coeffs;
            row.push_back(ineq.rhs);
        }
        bool zero = true;
        for (std::size_t f = 0; f < r; ++f)
            if (row[f] != 0) zero = false;
        if (zero && x0) dropped[i] = true;  // no cut inside the hull
        canon[i] = detail::clear_denominators(row);
    }
    for (std::size_t i = 0; i < ni; ++i)
        for (std::size_t j = 0; j < i && !dropped[i]; ++j)
            if (!dropped[j] && canon[i] == canon[j]) dropped[i] = true;

    // Probe system: the deduplicated rows, in hull coordinates when available.
    ConstraintSystem base;
    if (x0) {
        base.n = s.n;
        base.k = s.k;
        base.d = s.d;
        base.variables.assign(r, VariableIndex{});
    } else {
        base = s;
        base.inequalities.clear();
    }
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < ni; ++i)
        if (!dropped[i]) {
            kept.push_back(i);
            if (x0) {
                LinRow lr;
                lr.coeffs.resize(r);
                for (std::size_t f = 0; f < r; ++f) lr.coeffs[f] = Rational(canon[i][f]);
                lr.rhs = Rational(canon[i].back());
                base.inequalities.push_back(std::move(lr));
            } else {
                base.inequalities.push_back(s.inequalities[i]);
            }
        }

    std::vector<std::size_t> essential;
    for (std::size_t pos = 0; pos < kept.size(); ++pos) {
        const std::size_t i = kept[pos];
        ConstraintSystem probe = base;
        const LinRow row = probe.inequalities[pos];
        probe.inequalities.erase(probe.inequalities.begin() + static_cast<long>(pos));
        auto res = solve(probe, row.coeffs, Sense::Maximize, ctl);
        if (res.status == LpStatus::Infeasible)
            throw std::invalid_argument("redundancy_filter: system became empty");
        if (res.status == LpStatus::Unbounded || *res.objective_value > row.rhs)
            essential.push_back(i);
    }
    return essential;
}

namespace detail {

struct Ray {
    std::vector<Int> v;              // homogeneous coordinates (y0 first), primitive
    std::vector<std::uint64_t> tight;  // bitset over processed rows
};

inline void make_primitive(std::vector<Int>& v) {
    Int g = 0;
    for (const auto& x : v) {
        if (x == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& x : v)
            if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

inline bool tight_subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

}  // namespace detail

// Vertex enumeration by the double description method on the homogenization
// of the polytope restricted to its affine hull; facets counted through
// redundancy_filter.  Requires a bounded, nonempty system.
inline PolytopeGeometry double_description(const ConstraintSystem& s,
                                           const PolytopeSummary& summary,
                                           long dim_threshold = 6,
                                           std::size_t integral_cap = 100000,
                                           const SolveControl& ctl = {}) {
    if (summary.empty) throw std::invalid_argument("double_description: empty polytope");
    if (summary.dimension > dim_threshold)
        throw DimensionTooHigh("double_description: dimension " +
                               std::to_string(summary.dimension) + " above threshold");
    const std::size_t nv = s.variables.size();

    PolytopeGeometry geo;
    geo.dimension = summary.dimension;

    // Facets: essential, non-implicit inequality rows (0 for a point).
    if (summary.dimension > 0) {
        auto essential = redundancy_filter(s, ctl, &summary);
        for (auto i : essential)
            if (std::find(summary.implicit_equalities.begin(), summary.implicit_equalities.end(),
                          i) == summary.implicit_equalities.end())
                ++geo.facet_count;
    }

    // Parametrize the affine hull: x = x0 + N t.
    auto x0 = solve_linear(summary.affine_hull, summary.affine_hull_rhs);
    if (!x0) throw std::logic_error("double_description: inconsistent affine hull");
    auto basis = nullspace_basis(summary.affine_hull);
    const std::size_t r = basis.size();
    if (static_cast<long>(r) != summary.dimension)
        throw std::logic_error("double_description: hull dimension mismatch");

    auto lift = [&](const std::vector<Rational>& t) {
        std::vector<Rational> x = *x0;
        for (std::size_t f = 0; f < r; ++f) {
            if (t[f] == 0) continue;
            for (std::size_t j = 0; j < nv; ++j)
                if (basis[f][j] != 0) x[j] += basis[f][j] * t[f];
        }
        return x;
    };

    if (r == 0) {
        geo.vertices.push_back(*x0);
        geo.vertex_count = 1;
        geo.integral_points = enumerate_integral_points(s, summary, integral_cap, dim_threshold, ctl);
        geo.integral_point_count = geo.integral_points.size();
        return geo;
    }

    // Homogenized rows [rhs | -A'] with A' the inequality in t-coordinates,
    // plus y0 >= 0; rays with y0 > 0 are vertices t = v/y0.
    std::vector<std::vector<Int>> hrows;
    {
        std::vector<Int> y0row(r + 1);
        y0row[0] = 1;
        hrows.push_back(std::move(y0row));
    }
    for (const auto& ineq : s.inequalities) {
        std::vector<Rational> row(r + 1);
        row[0] = ineq.rhs;
        for (std::size_t j = 0; j < nv; ++j) {
            if (ineq.coeffs[j] == 0) continue;
            row[0] -= ineq.coeffs[j] * (*x0)[j];
            for (std::size_t f = 0; f < r; ++f)
                if (basis[f][j] != 0) row[f + 1] -= ineq.coeffs[j] * basis[f][j];
        }
        auto irow = detail::clear_denominators(row);
        bool zero = true;
        for (std::size_t f = 1; f <= r; ++f)
            if (irow[f] != 0) zero = false;
        if (zero) continue;  // no cut inside the hull
        bool dup = false;
        for (const auto& h : hrows)
            if (h == irow) dup = true;
        if (!dup) hrows.push_back(std::move(irow));
    }

    // Initial simplicial cone from r+1 independent rows.
    std::vector<std::size_t> chosen;
    {
        std::vector<std::vector<Int>> picked;
        for (std::size_t i = 0; i < hrows.size() && chosen.size() <= r; ++i) {
            picked.push_back(hrows[i]);
            RationalMatrix m(picked.size(), r + 1);
            for (std::size_t a = 0; a < picked.size(); ++a)
                for (std::size_t b = 0; b <= r; ++b) m(a, b) = Rational(picked[a][b]);
            if (rank(m) == picked.size())
                chosen.push_back(i);
            else
                picked.pop_back();
        }
        if (chosen.size() != r + 1)
            throw std::invalid_argument("double_description: unbounded polytope");
    }

    // Rays = columns of the inverse of the chosen row matrix.
    std::vector<detail::Ray> rays;
    {
        RationalMatrix aug(r + 1, 2 * (r + 1));
        for (std::size_t a = 0; a <= r; ++a) {
            for (std::size_t b = 0; b <= r; ++b) aug(a, b) = Rational(hrows[chosen[a]][b]);
            aug(a, r + 1 + a) = 1;
        }
        lcdlp::detail::rref(aug, r + 1);
        for (std::size_t c = 0; c <= r; ++c) {
            std::vector<Rational> col(r + 1);
            for (std::size_t a = 0; a <= r; ++a) col[a] = aug(a, r + 1 + c);
            auto icol = detail::clear_denominators(col);
            rays.push_back({std::move(icol), {}});
        }
    }

    // Process rows: the chosen ones first (rays already satisfy them), then
    // the rest ordered by increasing support.
    std::vector<std::size_t> order = chosen;
    {
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < hrows.size(); ++i)
            if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) rest.push_back(i);
        std::stable_sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
            std::size_t na = 0, nb = 0;
            for (const auto& v : hrows[a])
                if (v != 0) ++na;
            for (const auto& v : hrows[b])
                if (v != 0) ++nb;
            return na < nb;
        });
        order.insert(order.end(), rest.begin(), rest.end());
    }

    const std::size_t words = (order.size() + 63) / 64;
    for (auto& ray : rays) ray.tight.assign(words, 0);
    auto eval = [&](const std::vector<Int>& row, const std::vector<Int>& v) {
        Int s2 = 0;
        for (std::size_t j = 0; j <= r; ++j)
            if (row[j] != 0 && v[j] != 0) s2 += row[j] * v[j];
        return s2;
    };

    constexpr std::size_t kRayCap = 200000;
    for (std::size_t step = 0; step < order.size(); ++step) {
        const auto& row = hrows[order[step]];
        std::vector<Int> vals(rays.size());
        bool any_neg = false;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            vals[i] = eval(row, rays[i].v);
            if (vals[i] < 0) any_neg = true;
            if (vals[i] == 0) rays[i].tight[step / 64] |= std::uint64_t(1) << (step % 64);
        }
        if (!any_neg) continue;

        std::vector<detail::Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (vals[i] >= 0) next.push_back(rays[i]);
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (vals[p] <= 0) continue;
            for (std::size_t n = 0; n < rays.size(); ++n) {
                if (vals[n] >= 0) continue;
                // combinatorial adjacency: no third ray is tight everywhere
                // both p and n are
                std::vector<std::uint64_t> common(words);
                for (std::size_t w = 0; w < words; ++w)
                    common[w] = rays[p].tight[w] & rays[n].tight[w];
                bool adjacent = true;
                for (std::size_t z = 0; z < rays.size() && adjacent; ++z) {
                    if (z == p || z == n) continue;
                    if (detail::tight_subset(common, rays[z].tight)) adjacent = false;
                }
                if (!adjacent) continue;
                detail::Ray w;
                w.v.assign(r + 1, Int(0));
                for (std::size_t j = 0; j <= r; ++j)
                    w.v[j] = vals[p] * rays[n].v[j] - vals[n] * rays[p].v[j];
                detail::make_primitive(w.v);
                w.tight = common;
                w.tight[step / 64] |= std::uint64_t(1) << (step % 64);
                next.push_back(std::move(w));
                if (next.size() > kRayCap) throw CapExceeded("double_description: ray explosion");
            }
        }
        rays = std::move(next);
    }

    for (const auto& ray : rays) {
        if (ray.v[0] <= 0) throw std::invalid_argument("double_description: unbounded polytope");
        std::vector<Rational> t(r);
        for (std::size_t f = 0; f < r; ++f) t[f] = rat(ray.v[f + 1], ray.v[0]);
        auto x = lift(t);
        if (!satisfies(s, x)) throw std::logic_error("double_description: vertex check failed");
        geo.vertices.push_back(std::move(x));
    }
    std::sort(geo.vertices.begin(), geo.vertices.end());
    geo.vertices.erase(std::unique(geo.vertices.begin(), geo.vertices.end()), geo.vertices.end());
    geo.vertex_count = geo.vertices.size();

    geo.integral_points = enumerate_integral_points(s, summary, integral_cap, dim_threshold, ctl);
    geo.integral_point_count = geo.integral_points.size();
    return geo;
}

// {n,k,d,dim,facets,vertices,integral_points,points:[...]} with exact
// coordinates rendered as decimal or "p/q" strings.
inline nlohmann::json geometry_report_json(const ConstraintSystem& s, const PolytopeGeometry& g) {
    nlohmann::json j;
    j["n"] = s.n;
    j["k"] = s.k;
    j["d"] = s.d;
    j["dim"] = g.dimension;
    j["facets"] = g.facet_count;
    j["vertices"] = g.vertex_count;
    j["integral_points"] = g.integral_point_count;
    j["points"] = nlohmann::json::array();
    for (const auto& v : g.vertices) {
        nlohmann::json p;
        p["type"] = "vertex";
        p["coords"] = nlohmann::json::array();
        for (const auto& c : v) p["coords"].push_back(to_string(c));
        j["points"].push_back(std::move(p));
    }
    for (const auto& v : g.integral_points) {
        nlohmann::json p;
        p["type"] = "integral";
        p["coords"] = nlohmann::json::array();
        for (const auto& c : v) p["coords"].push_back(c.get_str());
        j["points"].push_back(std::move(p));
    }
    return j;
}

}  // namespace lcdlp

#endif
