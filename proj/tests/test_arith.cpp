#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "germ/arith.hpp"
#include "germ/bipoly.hpp"

using namespace germ;

namespace {

UniPoly<Rat> upoly(std::vector<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly<Rat>(std::move(c));
}

// Independent gcd oracle for the tests: plain Euclid, written separately
// from the library path.
UniPoly<Rat> oracle_gcd(UniPoly<Rat> a, UniPoly<Rat> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

}  // namespace

TEST_CASE("rational helpers") {
    CHECK(rat_str(rat(-4, 6)) == "-2/3");
    CHECK(*simplest_rational_between(rat(1, 3), rat(1, 2), Int(100)) == rat(2, 5));
    CHECK(*simplest_rational_between(rat(-1, 2), rat(1, 2), Int(100)) == 0);
    CHECK(*exact_root(rat(8, 27), 3) == rat(2, 3));
    CHECK(!exact_root(rat(2), 2).has_value());
}

TEST_CASE("interval arithmetic basics") {
    QI a(rat(1, 2), rat(3, 4)), b(rat(-2), rat(-1));
    QI p = a * b;
    CHECK(p.lo == rat(-3, 2));
    CHECK(p.hi == rat(-1, 2));
    CHECK(p.known_sign() == -1);
}

TEST_CASE("unipoly divmod and gcd over Q") {
    auto p = upoly({-1, 0, 1});        // z^2 - 1
    auto q = upoly({1, 1});            // z + 1
    auto [d, r] = divmod(p, q);
    CHECK(r.is_zero());
    CHECK(d.structurally_equal(upoly({-1, 1})));
    CHECK(gcd_poly(p, q).structurally_equal(upoly({1, 1})));
}

TEST_CASE("isolate_real_roots: symmetric irrational pair z^2 - 2") {
    auto roots = isolate_real_roots(lift_unipoly(upoly({-2, 0, 1})));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[1].multiplicity == 1);
    CHECK(roots[0].value.sign() == -1);
    CHECK(roots[1].value.sign() == 1);
    CHECK((roots[0].value + roots[1].value).is_zero());
    CHECK((roots[1].value * roots[1].value - AlgNum(2)).is_zero());
    CHECK(roots[0].value.to_double() == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("isolate_real_roots: z(z^3-1)(z^3+1) has real roots -1, 0, 1") {
    // z^7 - z
    auto p = upoly({0, -1, 0, 0, 0, 0, 0, 1});
    auto roots = isolate_real_roots(lift_unipoly(p));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].value == AlgNum(-1));
    CHECK(roots[1].value == AlgNum(0));
    CHECK(roots[2].value == AlgNum(1));
    for (const auto& r : roots) CHECK(r.multiplicity == 1);
}

TEST_CASE("isolate_real_roots: repeated rational root (z-1)^3") {
    auto p = upoly({-1, 3, -3, 1});
    auto roots = isolate_real_roots(lift_unipoly(p));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].value == AlgNum(1));
    CHECK(roots[0].multiplicity == 3);
}

TEST_CASE("distinct_complex_root_count") {
    CHECK(distinct_complex_root_count(lift_unipoly(upoly({0, 2, 1}))) == 2);  // z^2 + 2z
    // (z-1)^4
    CHECK(distinct_complex_root_count(lift_unipoly(upoly({1, -4, 6, -4, 1}))) == 1);
    // z^4 - z: gcd(p, p') = 1, verified independently
    auto p = upoly({0, -1, 0, 0, 1});
    CHECK(oracle_gcd(p, p.derivative()).degree() == 0);
    CHECK(distinct_complex_root_count(lift_unipoly(p)) == 4);
}

TEST_CASE("counts satisfy distinct + deg gcd = deg") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rat> c;
        int deg = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i <= deg; ++i) c.emplace_back(static_cast<long>(rng() % 9) - 4);
        UniPoly<Rat> p(std::move(c));
        if (p.degree() < 1) continue;
        auto pl = lift_unipoly(p);
        int dc = distinct_complex_root_count(pl);
        auto g = gcd_poly(p, p.derivative());
        CHECK(dc + g.degree() == p.degree());
    }
}

TEST_CASE("sign_at") {
    auto sqrt2 = isolate_real_roots(lift_unipoly(upoly({-2, 0, 1})))[1].value;
    CHECK(sign_at(upoly({-2, 0, 1}), sqrt2) == 0);   // its own minimal polynomial
    CHECK(sign_at(upoly({-1, 1}), sqrt2) == 1);      // z - 1 at sqrt(2)
    CHECK(sign_at(upoly({-3, 1}), sqrt2) == -1);     // z - 3 at sqrt(2)
}

TEST_CASE("sign_at at a critical value, cross-checked with floating point") {
    // p(z) = z^3 + 3*sqrt(t)*z^2 + 2(1 - t*sqrt(t)) at t = 4: sqrt(t) = 2
    auto p = upoly({2 * (1 - 4 * 2), 0, 3 * 2, 1});  // z^3 + 6z^2 - 14
    // critical points of p: p' = 3z^2 + 12z -> z in {-4, 0}
    auto dp = p.derivative();
    auto crits = isolate_real_roots(lift_unipoly(dp));
    REQUIRE(crits.size() == 2);
    for (const auto& c : crits) {
        int s = sign_at(p, c.value);
        double zd = c.value.to_double();
        double pd = ((zd + 6) * zd * zd) - 14;
        if (std::fabs(pd) > 1e-6) CHECK(s == (pd > 0 ? 1 : -1));
    }
}

TEST_CASE("interval refinement keeps the root enclosed") {
    auto p = upoly({-2, 0, 0, 0, 1});  // z^4 - 2
    auto roots = isolate_real_roots(lift_unipoly(p));
    REQUIRE(roots.size() == 2);
    for (int k = 4; k <= 64; k *= 2) {
        for (const auto& r : roots) {
            QI e = r.value.enclosure(k);
            // interval evaluation of p over the enclosure must contain 0
            QI acc = QI::point(Rat(0));
            for (int i = p.degree(); i >= 0; --i) acc = acc * e + QI::point(p[i]);
            CHECK(acc.contains_zero());
        }
    }
}

TEST_CASE("tower arithmetic: sqrt(2) + sqrt(3) works in a two-level tower") {
    auto sqrt2 = isolate_real_roots(lift_unipoly(upoly({-2, 0, 1})))[1].value;
    // z^2 - 3 over Q(sqrt2)
    std::vector<AlgNum> c{AlgNum(-3), AlgNum(0), AlgNum(1)};
    // lift into sqrt2's level first
    UniPoly<AlgNum> p(std::vector<AlgNum>{AlgNum(-3) + (sqrt2 - sqrt2), AlgNum(0), AlgNum(1)});
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    AlgNum sqrt3 = roots[1].value;
    AlgNum s = sqrt2 + sqrt3;
    AlgNum t = s * s;  // 5 + 2*sqrt6
    AlgNum u = (t - AlgNum(5)) * (t - AlgNum(5));  // 24
    CHECK(u == AlgNum(24));
    CHECK((AlgNum(1) / s * s) == AlgNum(1));
    CHECK(s.sign() == 1);
    CHECK(s.to_double() == doctest::Approx(std::sqrt(2.0) + std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("real_kth_root") {
    AlgNum c = real_kth_root(AlgNum(rat(8, 27)), 3);
    CHECK(c == AlgNum(rat(2, 3)));
    AlgNum r = real_kth_root(AlgNum(2), 3);
    CHECK(r.pow(3) == AlgNum(2));
    CHECK(r.sign() == 1);
    AlgNum n = real_kth_root(AlgNum(-8), 3);
    CHECK(n == AlgNum(-2));
}

TEST_CASE("squarefree_factor_bipoly: monomial-style factors") {
    BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    BiPoly f = x.pow(2) * (x - y).pow(3);
    auto sf = squarefree_factor_bipoly(f);
    REQUIRE(sf.factors.size() == 2);
    // ordered by multiplicity of discovery; check as a set
    bool saw_x2 = false, saw_xy3 = false;
    for (const auto& fac : sf.factors) {
        if (fac.multiplicity == 2 && fac.factor == x) saw_x2 = true;
        if (fac.multiplicity == 3 && (fac.factor == x - y || fac.factor == y - x)) saw_xy3 = true;
    }
    CHECK(saw_x2);
    CHECK(saw_xy3);
    // reassembly
    BiPoly prod = BiPoly::constant(sf.unit);
    for (const auto& fac : sf.factors) prod = prod * fac.factor.pow(fac.multiplicity);
    CHECK(prod == f);
}

TEST_CASE("squarefree_factor_bipoly: x(x^3-y^5) is already squarefree") {
    BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    BiPoly f = x * (x.pow(3) - y.pow(5));
    // brute-force oracle: gcd(f(x,y0), fx(x,y0)) is constant for some sample y0
    auto fy = f.at_y(rat(3, 7));
    CHECK(oracle_gcd(fy, fy.derivative()).degree() == 0);
    auto sf = squarefree_factor_bipoly(f);
    int total = 0;
    for (const auto& fac : sf.factors) {
        CHECK(fac.multiplicity == 1);
        ++total;
    }
    BiPoly prod = BiPoly::constant(sf.unit);
    for (const auto& fac : sf.factors) prod = prod * fac.factor.pow(fac.multiplicity);
    CHECK(prod == f);
}

TEST_CASE("squarefree_factor_bipoly: repeated irreducible (x^2+y^2)^2") {
    BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    BiPoly f = (x * x + y * y).pow(2);
    auto sf = squarefree_factor_bipoly(f);
    REQUIRE(sf.factors.size() == 1);
    CHECK(sf.factors[0].multiplicity == 2);
    CHECK(sf.factors[0].factor == x * x + y * y);
}

TEST_CASE("squarefree reassembly on random bivariate products") {
    std::mt19937_64 rng(777);
    BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    for (int trial = 0; trial < 10; ++trial) {
        BiPoly f = BiPoly::constant(Rat(1 + static_cast<long>(rng() % 3)));
        int nf = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < nf; ++i) {
            long a = static_cast<long>(rng() % 5) - 2;
            long b = static_cast<long>(rng() % 5) - 2;
            if (a == 0 && b == 0) a = 1;
            BiPoly g = x.scaled(Rat(a)) + y.scaled(Rat(b)) + x * y.scaled(Rat(static_cast<long>(rng() % 3)));
            if (g.is_zero()) continue;
            f = f * g.pow(1 + rng() % 3);
        }
        if (f.total_degree() < 1) continue;
        auto sf = squarefree_factor_bipoly(f);
        BiPoly prod = BiPoly::constant(sf.unit);
        for (const auto& fac : sf.factors) prod = prod * fac.factor.pow(fac.multiplicity);
        CHECK(prod == f);
    }
}
