#pragma once

#include "okcaps/rat.hpp"

#include <vector>

namespace okcaps {

struct LatticeVec {
    long long x = 0, y = 0;

    friend bool operator==(const LatticeVec&, const LatticeVec&) = default;
};

struct RatPt {
    Rat x, y;

    friend bool operator==(const RatPt&, const RatPt&) = default;
};

/* 2x2 integer matrix [[a, b], [c, d]] acting on column vectors. */
struct Mat2 {
    long long a = 1, b = 0, c = 0, d = 1;

    long long det() const { return a * d - b * c; }
};

Rat cross(const RatPt& u, const RatPt& v);
RatPt sub(const RatPt& p, const RatPt& q);
RatPt add(const RatPt& p, const RatPt& q);

/* Hull of a rational point set, counterclockwise. May be a point or a
 * segment (1 or 2 output points). */
std::vector<RatPt> convex_hull(std::vector<RatPt> pts);

/* Convex polygon with rational vertices, stored counterclockwise with no
 * three consecutive collinear vertices and a canonical starting vertex.
 * Degenerate inputs (all points collinear) are rejected. */
class Polygon {
public:
    explicit Polygon(std::vector<RatPt> verts);

    const std::vector<RatPt>& vertices() const { return verts_; }
    size_t size() const { return verts_.size(); }
    Rat area() const;
    bool contains(const RatPt& p) const; // closed region

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    std::vector<RatPt> verts_;
};

/* max over p in P of v.x * p.y - v.y * p.x; the support function of P
 * evaluated on the outward normal dual to a path edge v. */
Rat support_eval(const Polygon& p, const LatticeVec& v);

/* Number of integer points in the closed region. Row-by-row rational
 * interval counting. */
Int lattice_count(const Polygon& p);

/* Same count for a raw point set; tolerates degenerate hulls (segment or
 * single point), which arise from degenerate axis-hugging paths. */
Int lattice_count_points(const std::vector<RatPt>& pts);

/* Number of integer points on the boundary of the closed region. */
Int boundary_lattice_count(const Polygon& p);

/* Image of P under p -> M p + t. Requires det(M) = +-1. */
Polygon unimodular_apply(const Polygon& p, const Mat2& m, const RatPt& t);

Polygon minkowski_sum(const Polygon& p, const Polygon& q);

/* Primitive integer direction of a nonzero rational vector, and the rational
 * "lattice length" t with v = t * primitive(v). */
LatticeVec primitive_dir(const RatPt& v);
Rat lattice_length(const RatPt& v);

} // namespace okcaps
