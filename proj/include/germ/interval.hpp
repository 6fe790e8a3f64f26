#pragma once

#include "germ/rat.hpp"

namespace germ {

// Closed interval with exact rational endpoints.
struct QI {
    Rat lo, hi;

    QI() : lo(0), hi(0) {}
    QI(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw InternalError("interval with lo > hi");
    }
    static QI point(const Rat& v) { return QI(v, v); }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }

    // Sign when the interval separates from zero; 0 means undecided.
    int known_sign() const {
        if (sign(lo) > 0) return 1;
        if (sign(hi) < 0) return -1;
        return 0;
    }

    QI operator-() const { return QI(-hi, -lo); }
    QI operator+(const QI& o) const { return QI(lo + o.lo, hi + o.hi); }
    QI operator-(const QI& o) const { return QI(lo - o.hi, hi - o.lo); }

    QI operator*(const QI& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        Rat mn = a, mx = a;
        for (const Rat* v : {&b, &c, &d}) {
            if (*v < mn) mn = *v;
            if (*v > mx) mx = *v;
        }
        return QI(mn, mx);
    }

    QI operator*(const Rat& s) const {
        if (sign(s) >= 0) return QI(lo * s, hi * s);
        return QI(hi * s, lo * s);
    }

    QI operator+(const Rat& s) const { return QI(lo + s, hi + s); }

    Rat abs_upper() const {
        Rat a = abs(lo), b = abs(hi);
        return a > b ? a : b;
    }
};

inline QI pow_qi(const QI& x, unsigned long k) {
    if (k == 0) return QI::point(Rat(1));
    QI acc = x;
    for (unsigned long i = 1; i < k; ++i) acc = acc * x;
    return acc;
}

}  // namespace germ
