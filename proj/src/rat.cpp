#include "germ/rat.hpp"

namespace germ {

namespace {

// Smallest-denominator rational in the open interval (lo, hi), by the
// continued-fraction construction.
Rat simplest_in_open(const Rat& lo, const Rat& hi) {
    Int z = floor_int(lo) + 1;
    if (Rat(z) < hi) return Rat(z);
    Int f = floor_int(lo);
    Rat flo = lo - Rat(f), fhi = hi - Rat(f);
    if (sign(flo) == 0) {
        // interval (0, fhi) with fhi <= 1: answer is 1/n for the least n with 1/n < fhi
        Int n = floor_int(Rat(1) / fhi) + 1;
        return Rat(f) + Rat(1) / Rat(n);
    }
    return Rat(f) + Rat(1) / simplest_in_open(Rat(1) / fhi, Rat(1) / flo);
}

}  // namespace

std::optional<Rat> simplest_rational_between(const Rat& lo, const Rat& hi, const Int& max_den) {
    if (!(lo < hi)) return std::nullopt;
    Rat r = simplest_in_open(lo, hi);
    if (den(r) > max_den) return std::nullopt;
    return r;
}

std::optional<Rat> exact_root(const Rat& r, unsigned long k) {
    if (k == 0) throw InputError("0th root");
    if (sign(r) == 0) return Rat(0);
    if (sign(r) < 0 && k % 2 == 0) return std::nullopt;
    Int n = num(r), d = den(r);
    bool neg = sign(r) < 0;
    if (neg) n = -n;
    Int rn, rd;
    if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k)) return std::nullopt;
    Rat root = rat(neg ? Int(-rn) : rn, rd);
    if (pow_rat(root, static_cast<long>(k)) != r) return std::nullopt;
    return root;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace germ
