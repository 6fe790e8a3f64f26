#include "germ/arith.hpp"

#include <algorithm>

namespace germ {

LevelPtr poly_level(const UniPoly<AlgNum>& p) {
    LevelPtr deepest;
    for (const auto& c : p.coeffs())
        if (level_depth(c.level()) > level_depth(deepest)) deepest = c.level();
    return deepest;
}

UniPoly<AlgNum> lift_unipoly(const UniPoly<Rat>& p) {
    std::vector<AlgNum> c;
    c.reserve(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) c.emplace_back(p[i]);
    return UniPoly<AlgNum>(std::move(c));
}

int distinct_complex_root_count(const UniPoly<AlgNum>& p) { return distinct_root_count(p); }

int sign_at(const UniPoly<Rat>& p, const AlgNum& a) { return p.eval<AlgNum>(a).sign(); }

namespace {

// Sturm chain of a squarefree polynomial.
std::vector<UniPoly<AlgNum>> sturm_chain(const UniPoly<AlgNum>& f) {
    std::vector<UniPoly<AlgNum>> s;
    s.push_back(f);
    s.push_back(f.derivative());
    while (!s.back().is_zero() && s.back().degree() > 0) {
        UniPoly<AlgNum> r = s[s.size() - 2] % s.back();
        if (r.is_zero()) break;
        s.push_back(-r);
    }
    return s;
}

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int var_at(const std::vector<UniPoly<AlgNum>>& chain, const Rat& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) signs.push_back(p.eval<AlgNum>(AlgNum(x)).sign());
    return variations(signs);
}

int var_at_inf(const std::vector<UniPoly<AlgNum>>& chain, bool plus) {
    std::vector<int> signs;
    for (const auto& p : chain) {
        if (p.is_zero()) {
            signs.push_back(0);
            continue;
        }
        int s = p.leading().sign();
        if (!plus && p.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}

// Rigorous upper bound for |roots| of a monic polynomial.
Rat root_bound(const UniPoly<AlgNum>& f) {
    Rat m(0);
    for (int i = 0; i < f.degree(); ++i) {
        Rat u = f[i].enclosure(8).abs_upper();
        if (u > m) m = u;
    }
    return m + 2;
}

struct Isolated {
    QI interval;     // isolating, endpoints not roots
};

// Isolating intervals for all real roots of a monic squarefree polynomial.
std::vector<Isolated> sturm_isolate(const UniPoly<AlgNum>& f) {
    std::vector<Isolated> out;
    if (f.degree() <= 0) return out;
    auto chain = sturm_chain(f);
    Rat b = root_bound(f);

    auto eval_nonzero = [&](const Rat& x) { return f.eval<AlgNum>(AlgNum(x)).sign() != 0; };

    // Shrink endpoints off roots (the bound itself is never a root).
    struct Item {
        Rat lo, hi;
        int nlo, nhi;  // sign variation counts
    };
    std::vector<Item> work;
    int vlo = var_at(chain, -b), vhi = var_at(chain, b);
    if (vlo - vhi > 0) work.push_back({-b, b, vlo, vhi});
    long guard = 0;
    while (!work.empty()) {
        if (++guard > 100000) throw InternalError("root isolation did not terminate");
        Item it = work.back();
        work.pop_back();
        int count = it.nlo - it.nhi;
        if (count <= 0) continue;
        if (count == 1 && eval_nonzero(it.lo) && eval_nonzero(it.hi)) {
            out.push_back({QI(it.lo, it.hi)});
            continue;
        }
        // split at a non-root point
        Rat w = it.hi - it.lo;
        Rat mid;
        bool found = false;
        for (long denom = 2; denom < 2 + 64; ++denom) {
            mid = it.lo + w / Rat(denom);
            if (eval_nonzero(mid)) {
                found = true;
                break;
            }
        }
        if (!found) throw InternalError("could not find a non-root split point");
        int vm = var_at(chain, mid);
        work.push_back({it.lo, mid, it.nlo, vm});
        work.push_back({mid, it.hi, vm, it.nhi});
    }
    std::sort(out.begin(), out.end(), [](const Isolated& a, const Isolated& b) { return a.interval.lo < b.interval.lo; });
    return out;
}

}  // namespace

int count_real_roots_between(const UniPoly<AlgNum>& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw InputError("root count of zero polynomial");
    UniPoly<AlgNum> f = squarefree_part(p);
    auto chain = sturm_chain(f);
    return var_at(chain, lo) - var_at(chain, hi);
}

std::vector<RealRoot> isolate_real_roots(const UniPoly<AlgNum>& p) {
    if (p.is_zero()) throw InputError("cannot isolate roots of the zero polynomial");
    std::vector<RealRoot> roots;
    if (p.degree() == 0) return roots;
    LevelPtr lev = poly_level(p);

    for (auto& [fac0, mult] : squarefree_decompose(p)) {
        UniPoly<AlgNum> fac = fac0;  // monic
        if (fac.degree() == 1) {
            roots.push_back({-fac[0], mult});
            continue;
        }
        auto isolated = sturm_isolate(fac);
        // Cheap rational-root detection, then deflate.
        std::vector<std::pair<QI, bool>> pending;  // interval, resolved
        std::vector<AlgNum> rational_found;
        UniPoly<AlgNum> rem = fac;
        for (const auto& iso : isolated) {
            auto cand = simplest_rational_between(iso.interval.lo, iso.interval.hi, Int(1000000));
            if (cand && fac.eval<AlgNum>(AlgNum(*cand)).is_zero()) {
                roots.push_back({AlgNum(*cand), mult});
                UniPoly<AlgNum> lin(std::vector<AlgNum>{AlgNum(-*cand), AlgNum(1)});
                rem = rem / lin;
                pending.push_back({iso.interval, true});
            } else {
                pending.push_back({iso.interval, false});
            }
        }
        for (const auto& [interval, resolved] : pending) {
            if (resolved) continue;
            if (rem.degree() == 1) {
                roots.push_back({-rem[0], mult});
                continue;
            }
            LevelPtr ext = TowerLevel::make(lev, rem, interval);
            roots.push_back({AlgNum::generator(ext), mult});
        }
    }

    // Sort ascending; roots are pairwise distinct, so enclosures separate.
    if (roots.size() > 1) {
        std::vector<QI> encl(roots.size());
        for (int k = 8;; k *= 2) {
            bool ok = true;
            for (size_t i = 0; i < roots.size(); ++i) encl[i] = roots[i].value.enclosure(k);
            for (size_t i = 0; i < roots.size() && ok; ++i)
                for (size_t j = i + 1; j < roots.size() && ok; ++j)
                    if (!(encl[i].hi < encl[j].lo || encl[j].hi < encl[i].lo)) ok = false;
            if (ok) break;
            if (k > limits().refine_steps * 64) throw InternalError("could not separate isolated roots");
        }
        std::vector<size_t> idx(roots.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return encl[a].lo < encl[b].lo; });
        std::vector<RealRoot> sorted;
        sorted.reserve(roots.size());
        for (size_t i : idx) sorted.push_back(std::move(roots[i]));
        roots = std::move(sorted);
    }
    return roots;
}

AlgNum real_kth_root(const AlgNum& a, unsigned long k) {
    if (k == 0) throw InputError("0th root");
    if (k == 1) return a;
    int s = a.sign();
    if (s == 0) return AlgNum(0);
    if (s < 0 && k % 2 == 0) throw InputError("even root of a negative number");
    Rat rv;
    if (a.is_rational() || a.rational_value(rv)) {
        Rat r = a.is_rational() ? a.rat() : rv;
        if (auto e = exact_root(r, k)) return AlgNum(*e);
    }
    // z^k - a over a's level
    std::vector<AlgNum> c(k + 1, AlgNum(0));
    c[0] = -a;
    c[k] = AlgNum(1);
    UniPoly<AlgNum> p(std::move(c));
    auto roots = isolate_real_roots(p);
    for (auto& r : roots) {
        if (r.value.sign() == s) return r.value;
    }
    throw InternalError("real k-th root not found");
}

}  // namespace germ
