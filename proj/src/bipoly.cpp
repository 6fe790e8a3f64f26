#include "germ/bipoly.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace germ {

BiPoly BiPoly::term(int i, int j, const Rat& c) {
    BiPoly p;
    if (i < 0 || j < 0) throw InputError("negative exponent in polynomial term");
    if (sign(c) != 0) p.t_[{i, j}] = c;
    return p;
}

Rat BiPoly::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Rat(0) : it->second;
}

void BiPoly::set(int i, int j, const Rat& c) {
    if (sign(c) == 0)
        t_.erase({i, j});
    else
        t_[{i, j}] = c;
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [k, c] : t_) r.t_[k] = -c;
    return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [k, c] : o.t_) {
        auto it = r.t_.find(k);
        if (it == r.t_.end()) {
            r.t_[k] = c;
        } else {
            it->second += c;
            if (sign(it->second) == 0) r.t_.erase(it);
        }
    }
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [ka, ca] : t_)
        for (const auto& [kb, cb] : o.t_) {
            Key k{ka.first + kb.first, ka.second + kb.second};
            auto it = r.t_.find(k);
            if (it == r.t_.end()) {
                Rat v = ca * cb;
                if (sign(v) != 0) r.t_[k] = v;
            } else {
                it->second += ca * cb;
                if (sign(it->second) == 0) r.t_.erase(it);
            }
        }
    return r;
}

BiPoly BiPoly::scaled(const Rat& s) const {
    BiPoly r;
    if (sign(s) == 0) return r;
    for (const auto& [k, c] : t_) r.t_[k] = c * s;
    return r;
}

BiPoly BiPoly::pow(unsigned long k) const {
    BiPoly acc = constant(Rat(1));
    BiPoly b = *this;
    while (k) {
        if (k & 1) acc = acc * b;
        if (k >>= 1) b = b * b;
    }
    return acc;
}

BiPoly BiPoly::dx() const {
    BiPoly r;
    for (const auto& [k, c] : t_)
        if (k.first > 0) r.t_[{k.first - 1, k.second}] = c * k.first;
    return r;
}

BiPoly BiPoly::dy() const {
    BiPoly r;
    for (const auto& [k, c] : t_)
        if (k.second > 0) r.t_[{k.first, k.second - 1}] = c * k.second;
    return r;
}

int BiPoly::deg_x() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.first);
    return d;
}

int BiPoly::deg_y() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.second);
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.first + k.second);
    return d;
}

int BiPoly::mult0() const {
    if (t_.empty()) return -1;
    int m = INT_MAX;
    for (const auto& [k, c] : t_) m = std::min(m, k.first + k.second);
    return m;
}

BiPoly BiPoly::initial_form() const {
    BiPoly r;
    int m = mult0();
    if (m < 0) return r;
    for (const auto& [k, c] : t_)
        if (k.first + k.second == m) r.t_[k] = c;
    return r;
}

bool BiPoly::mini_regular_x() const {
    if (t_.empty()) return false;
    return t_.count({mult0(), 0}) > 0;
}

BiPoly BiPoly::sub_x_plus_cy(const Rat& c) const {
    BiPoly r;
    for (const auto& [k, coef] : t_) {
        // (x + c y)^i y^j
        for (int s = 0; s <= k.first; ++s) {
            Rat term = coef * Rat(binomial(k.first, s)) * pow_rat(c, k.first - s);
            if (sign(term) == 0) continue;
            Key key{s, k.second + (k.first - s)};
            auto it = r.t_.find(key);
            if (it == r.t_.end())
                r.t_[key] = term;
            else {
                it->second += term;
                if (sign(it->second) == 0) r.t_.erase(it);
            }
        }
    }
    return r;
}

BiPoly BiPoly::sub_y_plus_cx(const Rat& c) const {
    BiPoly r;
    for (const auto& [k, coef] : t_) {
        for (int s = 0; s <= k.second; ++s) {
            Rat term = coef * Rat(binomial(k.second, s)) * pow_rat(c, k.second - s);
            if (sign(term) == 0) continue;
            Key key{k.first + (k.second - s), s};
            auto it = r.t_.find(key);
            if (it == r.t_.end())
                r.t_[key] = term;
            else {
                it->second += term;
                if (sign(it->second) == 0) r.t_.erase(it);
            }
        }
    }
    return r;
}

BiPoly BiPoly::sub_neg_x() const {
    BiPoly r;
    for (const auto& [k, c] : t_) r.t_[k] = (k.first % 2 == 0) ? c : -c;
    return r;
}

BiPoly BiPoly::sub_neg_y() const {
    BiPoly r;
    for (const auto& [k, c] : t_) r.t_[k] = (k.second % 2 == 0) ? c : -c;
    return r;
}

BiPoly BiPoly::sub_x_plus_poly_y(const UniPoly<Rat>& p) const {
    // x -> x + p(y), expanded via x-major Horner.
    std::vector<UniPoly<Rat>> xm = x_major();
    BiPoly x_plus_p = var_x();
    for (int j = 0; j <= p.degree(); ++j) x_plus_p = x_plus_p + term(0, j, p[j]);
    BiPoly acc;
    for (size_t i = xm.size(); i-- > 0;) {
        BiPoly coef;
        for (int j = 0; j <= xm[i].degree(); ++j) coef = coef + term(0, j, xm[i][j]);
        acc = acc * x_plus_p + coef;
    }
    return acc;
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
    Rat acc(0);
    for (const auto& [k, c] : t_) acc += c * pow_rat(x, k.first) * pow_rat(y, k.second);
    return acc;
}

double BiPoly::eval_d(double x, double y) const {
    double acc = 0;
    for (const auto& [k, c] : t_) {
        double t = to_double(c);
        for (int i = 0; i < k.first; ++i) t *= x;
        for (int j = 0; j < k.second; ++j) t *= y;
        acc += t;
    }
    return acc;
}

UniPoly<Rat> BiPoly::at_y(const Rat& y0) const {
    std::vector<Rat> c(static_cast<size_t>(std::max(deg_x(), -1) + 1), Rat(0));
    for (const auto& [k, v] : t_) c[k.first] += v * pow_rat(y0, k.second);
    return UniPoly<Rat>(std::move(c));
}

UniPoly<Rat> BiPoly::assoc_z1() const { return at_y(Rat(1)); }
UniPoly<Rat> BiPoly::assoc_z_neg1() const { return at_y(Rat(-1)); }

UniPoly<Rat> BiPoly::y_slice(int i) const {
    std::vector<Rat> c;
    for (const auto& [k, v] : t_)
        if (k.first == i) {
            if (static_cast<size_t>(k.second) >= c.size()) c.resize(k.second + 1, Rat(0));
            c[k.second] = v;
        }
    return UniPoly<Rat>(std::move(c));
}

std::vector<UniPoly<Rat>> BiPoly::x_major() const {
    std::vector<UniPoly<Rat>> r(static_cast<size_t>(deg_x() + 1));
    for (int i = 0; i <= deg_x(); ++i) r[i] = y_slice(i);
    return r;
}

BiPoly BiPoly::from_x_major(const std::vector<UniPoly<Rat>>& v) {
    BiPoly r;
    for (size_t i = 0; i < v.size(); ++i)
        for (int j = 0; j <= v[i].degree(); ++j)
            if (sign(v[i][j]) != 0) r.t_[{static_cast<int>(i), j}] = v[i][j];
    return r;
}

std::string BiPoly::str() const {
    if (t_.empty()) return "0";
    // Ascending total degree, then ascending y-degree: deterministic.
    std::vector<std::pair<Key, Rat>> terms(t_.begin(), t_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta < tb;
        if (a.first.second != b.first.second) return a.first.second < b.first.second;
        return a.first.first < b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms) {
        Rat a = c;
        if (first) {
            if (sign(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sign(a) < 0 ? " - " : " + ");
            if (sign(a) < 0) a = -a;
        }
        first = false;
        bool has_var = k.first > 0 || k.second > 0;
        bool coef_shown = (a != 1) || !has_var;
        if (coef_shown) os << rat_str(a);
        if (k.first > 0) {
            if (coef_shown) os << "*";
            os << "x";
            if (k.first > 1) os << "^" << k.first;
        }
        if (k.second > 0) {
            if (coef_shown || k.first > 0) os << "*";
            os << "y";
            if (k.second > 1) os << "^" << k.second;
        }
    }
    return os.str();
}

// ---------- gcd / squarefree over Q[x,y] ----------

namespace {

using YP = UniPoly<Rat>;

// gcd of univariate polynomials over Q, monic.
YP gcd_y(const YP& a, const YP& b) { return gcd_poly(a, b); }

YP content_of(const std::vector<YP>& xs) {
    YP g;
    for (const auto& p : xs) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p : gcd_y(g, p);
        if (g.degree() == 0) break;
    }
    if (g.is_zero()) return g;
    return g.monic();
}

std::vector<YP> div_xmajor_exact(const std::vector<YP>& a, const std::vector<YP>& b, bool* ok) {
    // long division in x with exact coefficient division in Q[y]
    *ok = true;
    std::vector<YP> r = a;
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    std::vector<YP> bb = b;
    while (!bb.empty() && bb.back().is_zero()) bb.pop_back();
    if (bb.empty()) throw InternalError("bivariate division by zero");
    if (r.empty()) return {};
    if (r.size() < bb.size()) {
        *ok = false;
        return {};
    }
    std::vector<YP> q(r.size() - bb.size() + 1);
    const YP& lead = bb.back();
    for (size_t k = q.size(); k-- > 0;) {
        size_t top = k + bb.size() - 1;
        YP cur = top < r.size() ? r[top] : YP();
        if (cur.is_zero()) {
            q[k] = YP();
            continue;
        }
        auto [qq, rr] = divmod(cur, lead);
        if (!rr.is_zero()) {
            *ok = false;
            return {};
        }
        q[k] = qq;
        for (size_t i = 0; i < bb.size(); ++i) {
            if (top >= r.size()) r.resize(top + 1);
            r[k + i] = r[k + i] - qq * bb[i];
        }
    }
    for (size_t i = 0; i < bb.size() - 1 && i < r.size(); ++i)
        if (!r[i].is_zero()) {
            *ok = false;
            return {};
        }
    return q;
}

std::vector<YP> pp_xmajor(const std::vector<YP>& a) {
    YP c = content_of(a);
    if (c.is_zero() || c.degree() == 0) return a;
    std::vector<YP> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        auto [q, rem] = divmod(a[i], c);
        if (!rem.is_zero()) throw InternalError("content division not exact");
        r[i] = q;
    }
    return r;
}

int deg_of(const std::vector<YP>& a) {
    for (size_t i = a.size(); i-- > 0;)
        if (!a[i].is_zero()) return static_cast<int>(i);
    return -1;
}

std::vector<YP> scale_xmajor(const std::vector<YP>& a, const YP& s) {
    std::vector<YP> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

std::vector<YP> prem_xmajor(const std::vector<YP>& a, const std::vector<YP>& b) {
    // pseudo-remainder of a by b in x over Q[y]
    int da = deg_of(a), db = deg_of(b);
    if (db < 0) throw InternalError("pseudo-division by zero");
    std::vector<YP> r = a;
    r.resize(da + 1);
    const YP lead = b[db];
    int cur = deg_of(r);
    while (cur >= db) {
        YP c = r[cur];
        std::vector<YP> nr(std::max<size_t>(r.size(), 0));
        nr = scale_xmajor(r, lead);
        for (int i = 0; i <= db; ++i) nr[cur - db + i] = nr[cur - db + i] - c * b[i];
        nr[cur] = YP();
        r = std::move(nr);
        cur = deg_of(r);
    }
    return r;
}

}  // namespace

BiPoly gcd_bipoly(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<YP> fa = a.x_major(), fb = b.x_major();
    YP ca = content_of(fa), cb = content_of(fb);
    std::vector<YP> r0 = pp_xmajor(fa), r1 = pp_xmajor(fb);
    if (deg_of(r0) < deg_of(r1)) std::swap(r0, r1);
    while (deg_of(r1) >= 0) {
        std::vector<YP> r2 = prem_xmajor(r0, r1);
        r2 = pp_xmajor(r2);
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    // r0 is the primitive gcd of the primitive parts (up to a unit)
    std::vector<YP> g = pp_xmajor(r0);
    YP cg = gcd_y(ca, cb);
    BiPoly G = BiPoly::from_x_major(g);
    BiPoly C;
    for (int j = 0; j <= cg.degree(); ++j) C = C + BiPoly::term(0, j, cg[j]);
    BiPoly res = G * C;
    // normalize: integer-primitive, positive leading coefficient (lex x > y)
    Int l(1), gg(0);
    for (const auto& [k, c] : res.terms()) {
        l = lcm_int(l, den(c));
    }
    for (const auto& [k, c] : res.terms()) gg = gcd_int(gg, Int(num(c) * (l / den(c))));
    if (gg == 0) gg = 1;
    Rat scale = Rat(l) / Rat(gg);
    res = res.scaled(scale);
    if (!res.is_zero() && sign(res.terms().rbegin()->second) < 0) res = -res;
    return res;
}

BiPoly div_exact_bipoly(const BiPoly& a, const BiPoly& b) {
    bool ok = false;
    std::vector<YP> q = div_xmajor_exact(a.x_major(), b.x_major(), &ok);
    if (!ok) throw InternalError("bivariate division not exact");
    return BiPoly::from_x_major(q);
}

SquarefreeBipoly squarefree_factor_bipoly(const BiPoly& f) {
    if (f.is_zero()) throw InputError("squarefree factorization of zero");
    SquarefreeBipoly out;
    out.unit = Rat(1);

    auto normalize_factor = [](BiPoly p) {
        Int l(1), g(0);
        for (const auto& [k, c] : p.terms()) l = lcm_int(l, den(c));
        for (const auto& [k, c] : p.terms()) g = gcd_int(g, Int(num(c) * (l / den(c))));
        if (g == 0) g = 1;
        BiPoly r = p.scaled(Rat(l) / Rat(g));
        if (!r.is_zero() && sign(r.terms().rbegin()->second) < 0) r = -r;
        return r;
    };

    // split off the content in y
    std::vector<YP> xm = f.x_major();
    YP cont = content_of(xm);
    std::vector<YP> ppv = pp_xmajor(xm);
    BiPoly pp = BiPoly::from_x_major(ppv);

    // univariate squarefree factorization of the content
    if (cont.degree() > 0) {
        for (auto& [fac, mult] : squarefree_decompose(cont)) {
            BiPoly yfac;
            for (int j = 0; j <= fac.degree(); ++j) yfac = yfac + BiPoly::term(0, j, fac[j]);
            out.factors.push_back({normalize_factor(yfac), mult});
        }
    }

    // Yun's algorithm in x for the primitive part
    if (pp.deg_x() > 0) {
        BiPoly P = pp;
        BiPoly Px = P.dx();
        BiPoly A = gcd_bipoly(P, Px);
        BiPoly B = div_exact_bipoly(P, A);
        BiPoly C = div_exact_bipoly(Px, A);
        BiPoly D = C - B.dx();
        int i = 1;
        while (B.deg_x() > 0 || B.total_degree() > 0) {
            BiPoly G = gcd_bipoly(B, D);
            if (G.total_degree() > 0) out.factors.push_back({normalize_factor(G), i});
            if (G.total_degree() == 0 && G.is_zero()) throw InternalError("zero gcd in Yun");
            B = div_exact_bipoly(B, G);
            C = div_exact_bipoly(D, G);
            D = C - B.dx();
            ++i;
        }
    }

    // unit = f / prod factors^mult
    BiPoly prod = BiPoly::constant(Rat(1));
    for (const auto& [fac, mult] : out.factors) prod = prod * fac.pow(mult);
    BiPoly q = div_exact_bipoly(f, prod);
    if (q.total_degree() != 0) throw InternalError("squarefree reassembly left a non-constant unit");
    out.unit = q.coeff(0, 0);
    return out;
}

}  // namespace germ
