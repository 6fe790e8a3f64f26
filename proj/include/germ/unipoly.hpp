#pragma once

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "germ/rat.hpp"

namespace germ {

inline bool k_is_zero(const Rat& r) { return sign(r) == 0; }
inline Rat k_inverse(const Rat& r) {
    if (sign(r) == 0) throw InternalError("inverse of zero");
    return Rat(1) / r;
}

// Dense univariate polynomial over a field K, coefficients by ascending
// degree. K must provide k_is_zero and k_inverse (exact). The zero
// polynomial has an empty coefficient vector.
template <class K>
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<K> c) : c_(std::move(c)) { normalize(); }
    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(K v) { return UniPoly(std::vector<K>{std::move(v)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }

    const K& operator[](size_t i) const { return c_[i]; }
    const K& leading() const {
        if (is_zero()) throw InternalError("leading coefficient of zero polynomial");
        return c_.back();
    }

    K coeff_or_zero(size_t i) const { return i < c_.size() ? c_[i] : K(0); }

    void normalize() {
        while (!c_.empty() && k_is_zero(c_.back())) c_.pop_back();
    }

    UniPoly operator-() const {
        std::vector<K> r;
        r.reserve(c_.size());
        for (const auto& v : c_) r.push_back(-v);
        return UniPoly(std::move(r));
    }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<K> r(std::max(c_.size(), o.c_.size()), K(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
        return UniPoly(std::move(r));
    }

    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }

    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        std::vector<K> r(c_.size() + o.c_.size() - 1, K(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (k_is_zero(c_[i])) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return UniPoly(std::move(r));
    }

    UniPoly scaled(const K& s) const {
        std::vector<K> r;
        r.reserve(c_.size());
        for (const auto& v : c_) r.push_back(v * s);
        return UniPoly(std::move(r));
    }

    UniPoly shifted(size_t k) const {  // multiply by z^k
        if (is_zero()) return UniPoly();
        std::vector<K> r(c_.size() + k, K(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return UniPoly(std::move(r));
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<K> r;
        r.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * K(static_cast<long>(i)));
        return UniPoly(std::move(r));
    }

    template <class V>
    V eval(const V& x) const {
        V acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
        return acc;
    }

    K eval_k(const K& x) const {
        K acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UniPoly monic() const {
        if (is_zero()) throw InternalError("monic of zero polynomial");
        return scaled(k_inverse(c_.back()));
    }

    // Substitute z -> z + a.
    UniPoly taylor_shift(const K& a) const {
        UniPoly res;
        UniPoly base = constant(K(1));
        UniPoly lin(std::vector<K>{a, K(1)});
        for (size_t i = 0; i < c_.size(); ++i) {
            res = res + base.scaled(c_[i]);
            if (i + 1 < c_.size()) base = base * lin;
        }
        return res;
    }

    // Substitute z -> s*z.
    UniPoly arg_scaled(const K& s) const {
        std::vector<K> r = c_;
        K p(1);
        for (size_t i = 0; i < r.size(); ++i) {
            r[i] = r[i] * p;
            p = p * s;
        }
        return UniPoly(std::move(r));
    }

    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw InternalError("division by zero polynomial");
        UniPoly r = a;
        std::vector<K> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, K(0));
        K linv = k_inverse(b.leading());
        while (!r.is_zero() && r.degree() >= b.degree()) {
            size_t k = static_cast<size_t>(r.degree() - b.degree());
            K f = r.leading() * linv;
            q[k] = q[k] + f;
            // r -= f * z^k * b
            std::vector<K> rc = r.c_;
            for (size_t i = 0; i < b.c_.size(); ++i) rc[i + k] = rc[i + k] - f * b.c_[i];
            rc.pop_back();  // leading term cancels exactly
            r = UniPoly(std::move(rc));
        }
        return {UniPoly(std::move(q)), std::move(r)};
    }

    friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }
    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

    bool structurally_equal(const UniPoly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!k_is_zero(c_[i] - o.c_[i])) return false;
        return true;
    }

  private:
    std::vector<K> c_;
};

// Monic gcd by the Euclidean algorithm over a field.
template <class K>
UniPoly<K> gcd_poly(UniPoly<K> a, UniPoly<K> b) {
    while (!b.is_zero()) {
        UniPoly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
template <class K>
std::tuple<UniPoly<K>, UniPoly<K>, UniPoly<K>> extended_gcd(const UniPoly<K>& a, const UniPoly<K>& b) {
    UniPoly<K> r0 = a, r1 = b;
    UniPoly<K> u0 = UniPoly<K>::constant(K(1)), u1;
    UniPoly<K> v0, v1 = UniPoly<K>::constant(K(1));
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        UniPoly<K> u2 = u0 - q * u1;
        UniPoly<K> v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    K s = k_inverse(r0.leading());
    return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

// Yun's squarefree decomposition over a field of characteristic zero.
// Returns pairs (factor, multiplicity) with factors monic, squarefree and
// pairwise coprime; the product of factor^mult equals the input up to a
// nonzero constant.
template <class K>
std::vector<std::pair<UniPoly<K>, int>> squarefree_decompose(const UniPoly<K>& p) {
    std::vector<std::pair<UniPoly<K>, int>> out;
    if (p.is_zero()) throw InputError("squarefree decomposition of zero polynomial");
    if (p.degree() == 0) return out;
    UniPoly<K> f = p.monic();
    UniPoly<K> fp = f.derivative();
    UniPoly<K> a = gcd_poly(f, fp);
    UniPoly<K> b = f / a;
    UniPoly<K> c = fp / a;
    UniPoly<K> d = c - b.derivative();
    int i = 1;
    while (!(b.degree() == 0)) {
        UniPoly<K> g = gcd_poly(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

// Number of distinct complex roots: deg(p / gcd(p, p')).
template <class K>
int distinct_root_count(const UniPoly<K>& p) {
    if (p.is_zero()) throw InputError("distinct roots of zero polynomial");
    if (p.degree() == 0) return 0;
    UniPoly<K> g = gcd_poly(p, p.derivative());
    return p.degree() - g.degree();
}

template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& p) {
    if (p.is_zero()) throw InputError("squarefree part of zero polynomial");
    if (p.degree() == 0) return UniPoly<K>::constant(K(1));
    return (p / gcd_poly(p, p.derivative())).monic();
}

}  // namespace germ
