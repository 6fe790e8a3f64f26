#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "germ/base.hpp"

namespace germ {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
    if (d == 0) throw InputError("rational with zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& n, const Int& d) {
    if (d == 0) throw InputError("rational with zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline const Int& num(const Rat& r) { return r.get_num(); }
inline const Int& den(const Rat& r) { return r.get_den(); }

inline int sign(const Rat& r) { return sgn(r); }
inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline Int floor_int(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num(r).get_mpz_t(), den(r).get_mpz_t());
    return q;
}

inline Int ceil_int(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num(r).get_mpz_t(), den(r).get_mpz_t());
    return q;
}

inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = base;
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv) {
        if (b == 0) throw InputError("zero raised to negative power");
        b = Rat(1) / b;
    }
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Canonical "p/q" rendering; integers print without the denominator.
inline std::string rat_str(const Rat& r) {
    if (is_integer(r)) return num(r).get_str();
    return num(r).get_str() + "/" + den(r).get_str();
}

inline double to_double(const Rat& r) { return r.get_d(); }

// The rational with the smallest denominator strictly inside (lo, hi),
// by walking the Stern-Brocot tree. Used to spot rational roots cheaply.
std::optional<Rat> simplest_rational_between(const Rat& lo, const Rat& hi, const Int& max_den);

// Exact k-th root of a rational if it is one, else nullopt.
std::optional<Rat> exact_root(const Rat& r, unsigned long k);

Int binomial(unsigned long n, unsigned long k);

}  // namespace germ
