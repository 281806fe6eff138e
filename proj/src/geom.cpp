#include "okcaps/geom.hpp"

#include "okcaps/errors.hpp"

#include <algorithm>
#include <numeric>

namespace okcaps {

Rat cross(const RatPt& u, const RatPt& v) { return u.x * v.y - u.y * v.x; }
RatPt sub(const RatPt& p, const RatPt& q) { return {p.x - q.x, p.y - q.y}; }
RatPt add(const RatPt& p, const RatPt& q) { return {p.x + q.x, p.y + q.y}; }

static bool lex_less(const RatPt& p, const RatPt& q) {
    if (p.x != q.x) return p.x < q.x;
    return p.y < q.y;
}

std::vector<RatPt> convex_hull(std::vector<RatPt> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    auto build = [&](auto begin, auto end) {
        std::vector<RatPt> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   cross(sub(chain.back(), chain[chain.size() - 2]),
                         sub(*it, chain.back())) <= 0)
                chain.pop_back();
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<RatPt> lower = build(pts.begin(), pts.end());
    std::vector<RatPt> upper = build(pts.rbegin(), pts.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

Polygon::Polygon(std::vector<RatPt> verts) {
    if (verts.empty()) throw degenerate_polygon();
    verts_ = convex_hull(std::move(verts));
    if (verts_.size() < 3)
        throw domain_error("degenerate-polygon",
                           "polygon needs three non-collinear vertices");
    // Canonical start: lexicographically smallest vertex.
    auto first = std::min_element(verts_.begin(), verts_.end(), lex_less);
    std::rotate(verts_.begin(), first, verts_.end());
}

Rat Polygon::area() const {
    Rat twice = 0;
    for (size_t i = 0; i < verts_.size(); ++i)
        twice += cross(verts_[i], verts_[(i + 1) % verts_.size()]);
    return twice / 2;
}

bool Polygon::contains(const RatPt& p) const {
    for (size_t i = 0; i < verts_.size(); ++i) {
        if (cross(sub(verts_[(i + 1) % verts_.size()], verts_[i]),
                  sub(p, verts_[i])) < 0)
            return false;
    }
    return true;
}

Rat support_eval(const Polygon& p, const LatticeVec& v) {
    bool first = true;
    Rat best = 0;
    for (const auto& q : p.vertices()) {
        Rat val = Rat(v.x) * q.y - Rat(v.y) * q.x;
        if (first || val > best) best = val, first = false;
    }
    return best;
}

namespace {

/* Integer points on the closed rational segment [a, b]. */
Int segment_lattice_points(const RatPt& a, const RatPt& b) {
    if (a == b) return (is_integer(a.x) && is_integer(a.y)) ? 1 : 0;
    if (a.x == b.x) {
        if (!is_integer(a.x)) return 0;
        Int lo = ceil_rat(std::min(a.y, b.y)), hi = floor_rat(std::max(a.y, b.y));
        return hi >= lo ? hi - lo + 1 : Int(0);
    }
    Rat x0 = std::min(a.x, b.x), x1 = std::max(a.x, b.x);
    Rat slope = (b.y - a.y) / (b.x - a.x);
    Int count = 0;
    for (Int x = ceil_rat(x0); x <= floor_rat(x1); ++x) {
        Rat y = a.y + slope * (Rat(x) - a.x);
        if (is_integer(y)) ++count;
    }
    return count;
}

Int row_count(const std::vector<RatPt>& verts) {
    Rat ymin = verts[0].y, ymax = verts[0].y;
    for (const auto& v : verts) {
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    Int total = 0;
    size_t n = verts.size();
    for (Int y = ceil_rat(ymin); y <= floor_rat(ymax); ++y) {
        Rat ry(y);
        bool seen = false;
        Rat xlo, xhi;
        auto note = [&](const Rat& x) {
            if (!seen) {
                xlo = xhi = x;
                seen = true;
            } else {
                xlo = std::min(xlo, x);
                xhi = std::max(xhi, x);
            }
        };
        for (size_t i = 0; i < n; ++i) {
            const RatPt &a = verts[i], &b = verts[(i + 1) % n];
            if (a.y == ry) note(a.x);
            if ((a.y < ry && b.y > ry) || (a.y > ry && b.y < ry))
                note(a.x + (b.x - a.x) * (ry - a.y) / (b.y - a.y));
        }
        if (!seen) continue;
        Int lo = ceil_rat(xlo), hi = floor_rat(xhi);
        if (hi >= lo) total += hi - lo + 1;
    }
    return total;
}

} // namespace

Int lattice_count(const Polygon& p) { return row_count(p.vertices()); }

Int lattice_count_points(const std::vector<RatPt>& pts) {
    if (pts.empty()) throw degenerate_polygon();
    std::vector<RatPt> hull = convex_hull(pts);
    if (hull.size() == 1) return segment_lattice_points(hull[0], hull[0]);
    if (hull.size() == 2) return segment_lattice_points(hull[0], hull[1]);
    return row_count(hull);
}

Int boundary_lattice_count(const Polygon& p) {
    const auto& v = p.vertices();
    Int total = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        // Count each edge half-open at its endpoint to avoid double counting.
        const RatPt &a = v[i], &b = v[(i + 1) % v.size()];
        Int on_edge = segment_lattice_points(a, b);
        bool b_int = is_integer(b.x) && is_integer(b.y);
        total += on_edge - (b_int ? 1 : 0);
    }
    return total;
}

Polygon unimodular_apply(const Polygon& p, const Mat2& m, const RatPt& t) {
    if (m.det() != 1 && m.det() != -1)
        throw domain_error("not-unimodular", "matrix determinant must be +-1");
    std::vector<RatPt> out;
    out.reserve(p.size());
    for (const auto& q : p.vertices())
        out.push_back({Rat(m.a) * q.x + Rat(m.b) * q.y + t.x,
                       Rat(m.c) * q.x + Rat(m.d) * q.y + t.y});
    return Polygon(std::move(out));
}

Polygon minkowski_sum(const Polygon& p, const Polygon& q) {
    std::vector<RatPt> sums;
    sums.reserve(p.size() * q.size());
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) sums.push_back(add(a, b));
    return Polygon(std::move(sums));
}

LatticeVec primitive_dir(const RatPt& v) {
    if (v.x == 0 && v.y == 0)
        throw domain_error("zero-vector", "no direction for the zero vector");
    Int xn = numerator(v.x), xd = denominator(v.x);
    Int yn = numerator(v.y), yd = denominator(v.y);
    Int ax = xn * yd, ay = yn * xd; // common denominator xd*yd
    Int g = gcd(abs(ax), abs(ay));
    ax /= g;
    ay /= g;
    return {ax.convert_to<long long>(), ay.convert_to<long long>()};
}

Rat lattice_length(const RatPt& v) {
    LatticeVec d = primitive_dir(v);
    return d.x != 0 ? v.x / d.x : v.y / d.y;
}

} // namespace okcaps
