#pragma once

#include "germ/algnum.hpp"
#include "germ/bipoly.hpp"
#include "germ/unipoly.hpp"

namespace germ {

struct RealRoot {
    AlgNum value;
    int multiplicity;
};

// Deepest tower level referenced by the coefficients.
LevelPtr poly_level(const UniPoly<AlgNum>& p);

// Real roots of p over its coefficient field, sorted ascending, with
// multiplicities from the squarefree decomposition. Rational roots (and
// roots lying in the current tower when the defining factor is linear)
// come back as explicit values; the rest extend the tower.
std::vector<RealRoot> isolate_real_roots(const UniPoly<AlgNum>& p);

// deg(p / gcd(p, p')).
int distinct_complex_root_count(const UniPoly<AlgNum>& p);

// Exact sign of p(a).
int sign_at(const UniPoly<Rat>& p, const AlgNum& a);

// Number of real roots of p in the open interval (lo, hi), by Sturm counts.
// Endpoints must not be roots.
int count_real_roots_between(const UniPoly<AlgNum>& p, const Rat& lo, const Rat& hi);

// The unique real k-th root of a >= 0 (or any sign when k is odd).
AlgNum real_kth_root(const AlgNum& a, unsigned long k);

UniPoly<AlgNum> lift_unipoly(const UniPoly<Rat>& p);

}  // namespace germ
