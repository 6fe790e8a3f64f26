#include "germ/polygon.hpp"

#include <algorithm>
#include <map>

namespace germ {

std::vector<RelPolygon::Edge> RelPolygon::edges() const {
    std::vector<Edge> out;
    for (size_t k = 0; k + 1 < vertices.size(); ++k) {
        const Vertex &a = vertices[k], &b = vertices[k + 1];
        Rat mag = (a.j - b.j) / Rat(b.i - a.i);
        out.push_back({a, b, mag});
    }
    return out;
}

bool RelPolygon::operator==(const RelPolygon& o) const {
    if (vertices.size() != o.vertices.size()) return false;
    for (size_t k = 0; k < vertices.size(); ++k)
        if (vertices[k].i != o.vertices[k].i || vertices[k].j != o.vertices[k].j) return false;
    return true;
}

RelPolygon polygon_of_support(const FPoly& p) {
    if (p.is_zero()) throw InputError("Newton polygon of the zero polynomial");
    // minimal y-exponent per x-degree
    std::map<int, Rat> mins;
    for (const auto& t : p.terms()) {
        auto it = mins.find(t.i);
        if (it == mins.end() || t.e < it->second) mins[t.i] = t.e;
    }
    // lower-left convex hull over (i, e), slopes strictly increasing (all < 0)
    std::vector<RelPolygon::Vertex> hull;
    for (const auto& [i, e] : mins) {
        RelPolygon::Vertex v{i, e};
        if (!hull.empty() && hull.back().j <= v.j) continue;  // dominated
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // drop b if it lies on or above the segment a-v
            Rat lhs = (b.j - a.j) * Rat(v.i - a.i);
            Rat rhs = (v.j - a.j) * Rat(b.i - a.i);
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(v);
    }
    RelPolygon poly;
    poly.vertices = std::move(hull);
    return poly;
}

Substituted branch_substitute(const BiPoly& f, const DemiBranch& g) {
    if (f.is_zero()) throw InputError("zero polynomial");
    if (!f.mini_regular_x())
        throw InputError("polynomial is not mini-regular in x; apply mini_regularize first");
    if (!g.allowable()) throw InputError("demi-branch is not allowable (lowest exponent < 1)");
    const BiPoly* base = &f;
    BiPoly flipped;
    if (g.lower_half) {
        flipped = f.sub_neg_y();
        base = &flipped;
    }
    return substitute(*base, g.series);
}

namespace {

// Terms hidden beyond the truncation bound have y-exponent >= T and any
// x-degree. They are all dominated by the hull exactly when the hull reaches
// x-degree 0 and T clears its top; otherwise the full polygon cannot be
// known from this truncation.
void certify_polygon(const RelPolygon& poly, const std::optional<Rat>& validity) {
    if (!validity) return;
    const auto& v = poly.vertices;
    if (v.empty()) throw InternalError("empty polygon");
    if (v.front().i != 0)
        throw InputError(
            "branch truncation cannot determine the full Newton polygon (leftmost known vertex has "
            "x-degree > 0); extend the branch, or query the order function / edge polynomials instead");
    if (!(*validity > v.front().j))
        throw InputError("branch truncation insufficient for the Newton polygon; need exponents beyond " +
                         rat_str(v.front().j) + ", have " + rat_str(*validity));
}

}  // namespace

RelPolygon relative_polygon(const BiPoly& f, const DemiBranch& g) {
    Substituted s = branch_substitute(f, g);
    RelPolygon poly = polygon_of_support(s.poly);
    certify_polygon(poly, s.validity);
    return poly;
}

OrderFn order_from_polygon(const RelPolygon& poly) {
    OrderFn fn;
    const auto& v = poly.vertices;
    if (v.empty()) throw InternalError("empty polygon");
    auto es = poly.edges();
    // Vertex k is active on [slope_mag of edge k, slope_mag of edge k-1]
    // (edges indexed from the left); rightmost vertex active near xi = 1.
    Rat cur(1);
    for (size_t k = v.size(); k-- > 0;) {
        Rat upper_limit;  // where this vertex stops being active
        bool last = (k == 0);
        if (!last) upper_limit = es[k - 1].slope_mag;
        if (!last && upper_limit <= cur) continue;  // edge entirely below xi = 1
        OrderFn::Seg seg;
        seg.from = cur;
        seg.slope = v[k].i;
        seg.intercept = v[k].j;
        if (last) {
            seg.to = std::nullopt;
            fn.segs.push_back(seg);
            break;
        }
        seg.to = upper_limit;
        fn.segs.push_back(seg);
        cur = upper_limit;
    }
    return fn;
}

Rat OrderFn::eval(const Rat& xi) const {
    if (xi < Rat(1)) throw InputError("order function domain is [1, infinity)");
    if (certified_to && xi > *certified_to)
        throw InputError("order function query beyond certified bound " + rat_str(*certified_to));
    for (const auto& s : segs) {
        if (xi >= s.from && (!s.to || xi <= *s.to)) return s.intercept + Rat(s.slope) * xi;
    }
    throw InternalError("order function segments do not cover the query");
}

int OrderFn::slope_at(const Rat& xi) const {
    for (size_t k = 0; k < segs.size(); ++k) {
        const auto& s = segs[k];
        bool in = xi >= s.from && (!s.to || xi < *s.to);
        if (in) return s.slope;
    }
    return segs.back().slope;
}

std::vector<std::pair<Rat, Rat>> OrderFn::breakpoints() const {
    std::vector<std::pair<Rat, Rat>> out;
    for (const auto& s : segs) out.emplace_back(s.from, s.intercept + Rat(s.slope) * s.from);
    return out;
}

bool OrderFn::operator==(const OrderFn& o) const {
    if (segs.size() != o.segs.size()) return false;
    for (size_t k = 0; k < segs.size(); ++k) {
        const auto &a = segs[k], &b = o.segs[k];
        if (a.from != b.from || a.slope != b.slope || a.intercept != b.intercept) return false;
        if (a.to.has_value() != b.to.has_value()) return false;
        if (a.to && *a.to != *b.to) return false;
    }
    return true;
}

OrderFn order_function(const BiPoly& f, const DemiBranch& g) {
    Substituted s = branch_substitute(f, g);
    RelPolygon poly = polygon_of_support(s.poly);
    OrderFn fn = order_from_polygon(poly);
    // Values are certain while ord(xi) < validity: hidden terms have
    // y-exponent >= validity and cannot lower such minima.
    std::optional<Rat> cert;
    if (s.validity) {
        for (const auto& seg : fn.segs) {
            Rat at_from = seg.intercept + Rat(seg.slope) * seg.from;
            if (at_from >= *s.validity) {
                cert = seg.from;
                break;
            }
            if (seg.slope == 0) continue;  // constant segment stays certified
            Rat hit = (*s.validity - seg.intercept) / Rat(seg.slope);
            if (!seg.to || hit <= *seg.to) {
                cert = hit;
                break;
            }
        }
    }
    if (g.generic_tail) {
        if (!cert || *g.generic_tail < *cert) cert = g.generic_tail;
    }
    fn.certified_to = cert;
    return fn;
}

EdgePolyData edge_polynomial(const BiPoly& f, const DemiBranch& g, const Rat& xi) {
    if (xi < Rat(1)) throw InputError("edge polynomial requires xi >= 1");
    Substituted s = branch_substitute(f, g);
    if (g.generic_tail && xi > *g.generic_tail)
        throw InputError("query beyond the generic tail marker at " + rat_str(*g.generic_tail));
    EdgePolyData out;
    out.xi = xi;
    out.ord = s.poly.weighted_min(xi);
    if (s.validity && out.ord >= *s.validity)
        throw InputError("edge polynomial at xi = " + rat_str(xi) +
                         " is not certified by the branch truncation");
    out.poly = s.poly.edge_at(xi);
    if (s.validity) {
        // largest certified xi: where ord reaches the validity bound
        RelPolygon poly = polygon_of_support(s.poly);
        OrderFn fn = order_from_polygon(poly);
        for (const auto& seg : fn.segs) {
            if (seg.slope == 0) continue;
            Rat hit = (*s.validity - seg.intercept) / Rat(seg.slope);
            if (hit >= seg.from && (!seg.to || hit <= *seg.to)) {
                out.valid_to = hit;
                break;
            }
        }
    }
    if (g.generic_tail && (!out.valid_to || *g.generic_tail < *out.valid_to)) out.valid_to = g.generic_tail;
    return out;
}

FPoly initial_newton_polynomial(const BiPoly& f, const DemiBranch& g) {
    Substituted s = branch_substitute(f, g);
    RelPolygon poly = polygon_of_support(s.poly);
    certify_polygon(poly, s.validity);
    auto es = poly.edges();
    std::vector<FPoly::Term> keep;
    for (const auto& t : s.poly.terms()) {
        bool on_boundary = false;
        for (const auto& v : poly.vertices)
            if (v.i == t.i && v.j == t.e) {
                on_boundary = true;
                break;
            }
        for (const auto& e : es) {
            if (on_boundary) break;
            if (t.i < e.from.i || t.i > e.to.i) continue;
            if (t.e + e.slope_mag * Rat(t.i) == e.from.j + e.slope_mag * Rat(e.from.i)) on_boundary = true;
        }
        if (on_boundary) keep.push_back(t);
    }
    return FPoly(std::move(keep));
}

bool legendre_roundtrip_check(const RelPolygon& polygon, const OrderFn& ordfn) {
    // Internal consistency of the order function: starts at 1, continuous,
    // strictly decreasing integer slopes (concavity).
    if (ordfn.segs.empty()) return false;
    if (ordfn.segs.front().from != Rat(1)) return false;
    for (size_t k = 0; k + 1 < ordfn.segs.size(); ++k) {
        const auto &a = ordfn.segs[k], &b = ordfn.segs[k + 1];
        if (!a.to || *a.to != b.from) return false;
        if (!(a.from < *a.to)) return false;
        if (a.slope <= b.slope) return false;
        if (a.intercept + Rat(a.slope) * *a.to != b.intercept + Rat(b.slope) * b.from) return false;
    }
    if (ordfn.segs.back().to) return false;

    // Legendre transform of the order function: each segment contributes the
    // boundary vertex (slope, intercept), ascending x-degree for descending xi.
    std::vector<RelPolygon::Vertex> rebuilt;
    for (size_t k = ordfn.segs.size(); k-- > 0;)
        rebuilt.push_back({ordfn.segs[k].slope, ordfn.segs[k].intercept});
    if (rebuilt.size() > polygon.vertices.size()) return false;
    for (size_t k = 0; k < rebuilt.size(); ++k)
        if (rebuilt[k].i != polygon.vertices[k].i || rebuilt[k].j != polygon.vertices[k].j) return false;
    // Boundary parts of slope exactly -1 are invisible on [1, infinity);
    // their vertices must sit on the supporting line of ord at xi = 1.
    Rat ord1 = ordfn.segs.front().intercept + Rat(ordfn.segs.front().slope);
    for (size_t k = rebuilt.size(); k < polygon.vertices.size(); ++k) {
        const auto& v = polygon.vertices[k];
        if (v.j + Rat(v.i) != ord1) return false;
    }
    return true;
}

}  // namespace germ
