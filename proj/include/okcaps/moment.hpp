#pragma once

#include "okcaps/geom.hpp"

#include <optional>
#include <string>
#include <vector>

namespace okcaps {

enum class Classification { ConvexMoment, ConcaveMoment, Neither };

/* Region in the closed first quadrant containing a quadrant-neighborhood of
 * the origin. Convex domains are stored as their region polygon; concave
 * domains as the outer boundary polyline from (0, y0) down to (x0, 0), the
 * region being everything between the polyline and the axes. */
struct MomentDomain {
    enum class Kind { Convex, Concave };

    Kind kind;
    std::optional<Polygon> poly;  // convex case
    std::vector<RatPt> polyline;  // concave case

    Rat area() const;
    Rat max_xy() const; // max of x+y over the region (side of circumscribing triangle)
    std::vector<RatPt> region_ring() const; // ccw region boundary incl. origin

    static MomentDomain convex(Polygon p);
    static MomentDomain concave(std::vector<RatPt> boundary);
    static MomentDomain triangle(const Rat& a); // Delta(a), classified Convex
    static MomentDomain ellipsoid(const Rat& a, const Rat& b); // triangle (a,0),(0,b)
    static MomentDomain rect(const Rat& a, const Rat& b);
};

Classification classify(const std::vector<RatPt>& pts);
MomentDomain make_domain(const std::vector<RatPt>& pts); // classify or throw

/* Weight sequence of a moment domain, indexed by a rooted binary tree: each
 * node's children correspond to the two complement components its triangle
 * cut creates (y-axis side and x-axis side). Trees built from flat lists
 * keep the list; tree structure is derived on demand by canonical cutting. */
struct WeightTree {
    struct Node {
        Rat w;
        int cy = -1, cx = -1;
    };

    std::optional<Rat> head;      // present iff convex-type
    std::vector<Node> nodes;
    int root_y = -1, root_x = -1; // concave trees use root_y only
    std::optional<std::vector<Rat>> flat; // flat input form, order preserved

    bool convex_type() const { return head.has_value(); }
    bool has_tree() const { return root_y >= 0 || root_x >= 0 || nodes.empty(); }

    std::vector<Rat> weight_multiset() const; // nonzero weights, descending
    Rat sum_weights() const;
    Rat sum_weight_squares() const;
    std::string canonical_key() const; // unordered-children canonical form

    static WeightTree from_flat(const Rat& head, std::vector<Rat> weights);
    static WeightTree concave_root(const Rat& w); // single-node concave tree
};

bool equal_trees(const WeightTree& a, const WeightTree& b);
bool equal_multiset(const WeightTree& a, const WeightTree& b);

WeightTree wt_concave(const MomentDomain& d);
WeightTree wt_convex(const MomentDomain& d);

/* Rebuild a convex moment domain realizing the tree, cutting corners off the
 * circumscribing triangle. Throws polytopality_error when a cut cannot be
 * placed. Flat lists are placed canonically: each successive weight is cut
 * at the first fitting vertex in creation order. */
MomentDomain reconstruct(const WeightTree& w);

MomentDomain minkowski(const WeightTree& w1, const WeightTree& w2);

} // namespace okcaps
