#pragma once

#include "germ/fpoly.hpp"

namespace germ {

// Newton polygon of f relative to a demi-branch: the lower-left boundary of
// the support of f(X + lambda(Y), Y). Vertices in increasing x-degree;
// consecutive vertices span edges of strictly increasing (negative) slope.
struct RelPolygon {
    struct Vertex {
        int i;
        Rat j;
    };
    std::vector<Vertex> vertices;

    struct Edge {
        Vertex from, to;
        Rat slope_mag;  // edge slope is -slope_mag, slope_mag >= 1
    };
    std::vector<Edge> edges() const;
    bool operator==(const RelPolygon& o) const;
};

// Concave piecewise-linear order function ord(xi) = intercept + slope*xi on
// consecutive segments; slopes are the x-degrees of the achieving vertices
// and strictly decrease. Domain [1, infinity).
struct OrderFn {
    struct Seg {
        Rat from;
        std::optional<Rat> to;  // nullopt: unbounded final segment
        int slope;
        Rat intercept;
    };
    std::vector<Seg> segs;
    std::optional<Rat> certified_to;  // values certified for xi <= this

    Rat eval(const Rat& xi) const;
    int slope_at(const Rat& xi) const;  // slope of the segment containing xi (right-continuous)
    std::vector<std::pair<Rat, Rat>> breakpoints() const;  // (xi, value) incl. xi = 1
    bool operator==(const OrderFn& o) const;
};

struct EdgePolyData {
    Rat xi;
    Rat ord;
    UniPoly<AlgNum> poly;
    std::optional<Rat> valid_to;  // certified for queries at xi' <= this
};

RelPolygon relative_polygon(const BiPoly& f, const DemiBranch& g);
OrderFn order_function(const BiPoly& f, const DemiBranch& g);
EdgePolyData edge_polynomial(const BiPoly& f, const DemiBranch& g, const Rat& xi);
// Terms of f(X+lambda(Y),Y) supported on the Newton boundary.
FPoly initial_newton_polynomial(const BiPoly& f, const DemiBranch& g);
bool legendre_roundtrip_check(const RelPolygon& polygon, const OrderFn& ordfn);

// Internal building blocks shared with the tree module.
RelPolygon polygon_of_support(const FPoly& p);
OrderFn order_from_polygon(const RelPolygon& poly);
// The substituted polynomial for a branch, with the half-plane flip applied
// and truncation certification performed.
Substituted branch_substitute(const BiPoly& f, const DemiBranch& g);

}  // namespace germ
