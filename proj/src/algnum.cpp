#include "germ/algnum.hpp"

#include <sstream>

namespace germ {

Limits& limits() {
    static Limits l;
    return l;
}

int level_depth(const LevelPtr& l) { return l ? l->depth() : 0; }

bool level_equal(const LevelPtr& a, const LevelPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    return a->struct_equal(*b);
}

bool level_prefix(const LevelPtr& a, const LevelPtr& b) {
    LevelPtr cur = b;
    while (level_depth(cur) > level_depth(a)) cur = cur->base();
    return level_equal(a, cur);
}

bool TowerLevel::struct_equal(const TowerLevel& o) const {
    if (this == &o) return true;
    if (depth_ != o.depth_) return false;
    if (isol_.lo != o.isol_.lo || isol_.hi != o.isol_.hi) return false;
    if (minpoly_.degree() != o.minpoly_.degree()) return false;
    for (int i = 0; i <= minpoly_.degree(); ++i)
        if (!minpoly_[i].struct_equal(o.minpoly_[i])) return false;
    return level_equal(base_, o.base_);
}

LevelPtr TowerLevel::make(LevelPtr base, UniPoly<AlgNum> p, QI isol) {
    int d = level_depth(base) + 1;
    if (d > limits().tower_depth)
        throw ResourceError("algebraic extension tower depth limit (" +
                            std::to_string(limits().tower_depth) + ") exceeded");
    if (p.degree() < 2) throw InternalError("tower extension by polynomial of degree < 2");
    return LevelPtr(new TowerLevel(std::move(base), std::move(p), std::move(isol), d));
}

QI TowerLevel::refined(int k) const {
    std::lock_guard<std::mutex> g(mu_);
    while (cache_steps_ < k) {
        Rat w4 = cache_.width() / 4;
        Rat mid = cache_.mid();
        AlgNum v = minpoly_.eval<AlgNum>(AlgNum(mid));
        int s = v.sign();
        if (s == 0) {
            // The root is exactly the midpoint; shrink symmetrically.
            cache_ = QI(mid - w4, mid + w4);
        } else {
            AlgNum vlo = minpoly_.eval<AlgNum>(AlgNum(cache_.lo));
            if (vlo.sign() * s < 0)
                cache_ = QI(cache_.lo, mid);
            else
                cache_ = QI(mid, cache_.hi);
        }
        ++cache_steps_;
    }
    return cache_;
}

AlgNum AlgNum::generator(const LevelPtr& lev) {
    if (!lev) throw InternalError("generator of the rational level");
    AlgNum a;
    a.lev_ = lev;
    a.rat_ = 0;
    a.poly_ = {AlgNum(0), AlgNum(1)};
    return a;
}

AlgNum AlgNum::from_parts(const LevelPtr& lev, std::vector<AlgNum> coeffs) {
    AlgNum a;
    a.lev_ = lev;
    a.poly_ = std::move(coeffs);
    a.trim_struct();
    if (a.poly_.size() == 1) return a.poly_[0];
    if (a.poly_.empty()) return AlgNum(0);
    return a;
}

int AlgNum::depth() const { return level_depth(lev_); }

void AlgNum::trim_struct() {
    while (!poly_.empty() && poly_.back().struct_zero()) poly_.pop_back();
}

bool AlgNum::struct_zero() const {
    if (is_rational()) return germ::sign(rat_) == 0;
    for (const auto& c : poly_)
        if (!c.struct_zero()) return false;
    return true;
}

bool AlgNum::struct_equal(const AlgNum& o) const {
    if (is_rational() != o.is_rational()) return false;
    if (is_rational()) return rat_ == o.rat_;
    if (!level_equal(lev_, o.lev_)) return false;
    size_t n = std::max(poly_.size(), o.poly_.size());
    for (size_t i = 0; i < n; ++i) {
        bool za = i >= poly_.size(), zb = i >= o.poly_.size();
        if (za && zb) continue;
        if (za) { if (!o.poly_[i].struct_zero()) return false; continue; }
        if (zb) { if (!poly_[i].struct_zero()) return false; continue; }
        if (!poly_[i].struct_equal(o.poly_[i])) return false;
    }
    return true;
}

bool AlgNum::rational_value(Rat& out) const {
    if (is_rational()) {
        out = rat_;
        return true;
    }
    AlgNum t = *this;
    t.trim_struct();
    if (t.poly_.empty()) {
        out = 0;
        return true;
    }
    if (t.poly_.size() == 1) return t.poly_[0].rational_value(out);
    return false;
}

AlgNum AlgNum::lift_to(const AlgNum& v, const LevelPtr& lev) {
    if (level_equal(v.lev_, lev)) return v;
    if (!lev) throw InternalError("cannot lower algebraic number to Q");
    AlgNum inner = lift_to(v, lev->base());
    AlgNum a;
    a.lev_ = lev;
    a.poly_ = {std::move(inner)};
    return a;
}

namespace {

std::vector<LevelPtr> chain_of(const LevelPtr& lev) {
    std::vector<LevelPtr> c;
    for (LevelPtr cur = lev; cur; cur = cur->base()) c.push_back(cur);
    std::reverse(c.begin(), c.end());
    return c;
}

// Rewrite an element's level pointers according to a chain substitution map
// (old level -> new level); levels not in the map are kept.
AlgNum rewrite_levels(const AlgNum& v, const std::vector<std::pair<LevelPtr, LevelPtr>>& map);

UniPoly<AlgNum> rewrite_poly(const UniPoly<AlgNum>& p, const std::vector<std::pair<LevelPtr, LevelPtr>>& map) {
    std::vector<AlgNum> c;
    c.reserve(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) c.push_back(rewrite_levels(p[i], map));
    return UniPoly<AlgNum>(std::move(c));
}

AlgNum rewrite_levels(const AlgNum& v, const std::vector<std::pair<LevelPtr, LevelPtr>>& map) {
    if (v.is_rational()) return v;
    LevelPtr nl = v.level();
    for (const auto& [o, n] : map)
        if (level_equal(o, v.level())) {
            nl = n;
            break;
        }
    return AlgNum::rebased(v, nl, map);
}

}  // namespace

AlgNum AlgNum::rebased(const AlgNum& v, const LevelPtr& new_level,
                       const std::vector<std::pair<LevelPtr, LevelPtr>>& map) {
    std::vector<AlgNum> coeffs;
    coeffs.reserve(v.poly_.size());
    for (const auto& c : v.poly_) coeffs.push_back(rewrite_levels(c, map));
    return from_parts(new_level, std::move(coeffs));
}

void AlgNum::lift_pair(AlgNum& a, AlgNum& b) {
    int da = a.depth(), db = b.depth();
    const LevelPtr& deep = da >= db ? a.lev_ : b.lev_;
    AlgNum& shallow = da >= db ? b : a;
    if (level_prefix(shallow.lev_, deep)) {
        shallow = lift_to(shallow, deep);
        return;
    }
    // Divergent towers sharing a prefix: stack the shallow tower's tail on
    // top of the deep one. Defining polynomials stay squarefree over the
    // larger field and the isolating intervals still select the same roots.
    auto dc = chain_of(deep), sc = chain_of(shallow.lev_);
    size_t common = 0;
    while (common < dc.size() && common < sc.size() && level_equal(dc[common], sc[common])) ++common;
    LevelPtr top = deep;
    std::vector<std::pair<LevelPtr, LevelPtr>> map;
    for (size_t i = common; i < sc.size(); ++i) {
        UniPoly<AlgNum> mp = rewrite_poly(sc[i]->minpoly(), map);
        LevelPtr nl = TowerLevel::make(top, std::move(mp), sc[i]->initial_interval());
        map.emplace_back(sc[i], nl);
        top = nl;
    }
    shallow = rebased(shallow, map.back().second, map);
    AlgNum& deep_val = da >= db ? a : b;
    deep_val = lift_to(deep_val, top);
}

AlgNum AlgNum::operator-() const {
    if (is_rational()) return AlgNum(Rat(-rat_));
    AlgNum r = *this;
    for (auto& c : r.poly_) c = -c;
    return r;
}

AlgNum AlgNum::operator+(const AlgNum& o) const {
    if (is_rational() && o.is_rational()) return AlgNum(Rat(rat_ + o.rat_));
    AlgNum a = *this, b = o;
    lift_pair(a, b);
    std::vector<AlgNum> r(std::max(a.poly_.size(), b.poly_.size()), AlgNum(0));
    for (size_t i = 0; i < a.poly_.size(); ++i) r[i] = a.poly_[i];
    for (size_t i = 0; i < b.poly_.size(); ++i) r[i] = r[i] + b.poly_[i];
    return from_parts(a.lev_, std::move(r));
}

AlgNum AlgNum::operator-(const AlgNum& o) const { return *this + (-o); }

AlgNum AlgNum::reduce_and_wrap(const LevelPtr& lev, std::vector<AlgNum> raw) const {
    const UniPoly<AlgNum>& m = lev->minpoly();
    size_t dm = static_cast<size_t>(m.degree());
    for (size_t i = raw.size(); i-- > dm;) {
        if (raw[i].struct_zero()) continue;
        AlgNum c = raw[i];
        raw[i] = AlgNum(0);
        for (size_t j = 0; j < dm; ++j) raw[i - dm + j] = raw[i - dm + j] - c * m[j];
    }
    raw.resize(std::min(raw.size(), dm));
    return from_parts(lev, std::move(raw));
}

AlgNum AlgNum::operator*(const AlgNum& o) const {
    if (is_rational() && o.is_rational()) return AlgNum(Rat(rat_ * o.rat_));
    if (is_rational() && germ::sign(rat_) == 0) return AlgNum(0);
    if (o.is_rational() && germ::sign(o.rat_) == 0) return AlgNum(0);
    AlgNum a = *this, b = o;
    lift_pair(a, b);
    if (a.poly_.empty() || b.poly_.empty()) return AlgNum(0);
    std::vector<AlgNum> r(a.poly_.size() + b.poly_.size() - 1, AlgNum(0));
    for (size_t i = 0; i < a.poly_.size(); ++i) {
        if (a.poly_[i].struct_zero()) continue;
        for (size_t j = 0; j < b.poly_.size(); ++j) r[i + j] = r[i + j] + a.poly_[i] * b.poly_[j];
    }
    return reduce_and_wrap(a.lev_, std::move(r));
}

AlgNum AlgNum::inverse() const {
    if (is_rational()) {
        if (germ::sign(rat_) == 0) throw InternalError("inverse of zero");
        return AlgNum(Rat(1 / rat_));
    }
    AlgNum t = *this;
    t.trim_struct();
    if (t.poly_.empty()) throw InternalError("inverse of zero");
    UniPoly<AlgNum> e(t.poly_);
    UniPoly<AlgNum> m = lev_->minpoly();
    // Dynamic evaluation: peel factors of m not vanishing at our root until
    // e becomes invertible modulo what is left.
    for (;;) {
        auto [g, u, v] = extended_gcd(e, m);
        (void)v;
        if (g.degree() == 0) {
            std::vector<AlgNum> coeffs(u.coeffs());
            return reduce_and_wrap(lev_, std::move(coeffs));
        }
        QI iso = lev_->initial_interval();
        int slo = g.eval<AlgNum>(AlgNum(iso.lo)).sign();
        int shi = g.eval<AlgNum>(AlgNum(iso.hi)).sign();
        if (slo == 0 || shi == 0 || slo * shi < 0)
            throw InternalError("inverse of zero algebraic number");
        m = m / g;
        if (m.degree() < 1) throw InternalError("dynamic evaluation exhausted modulus");
    }
}

AlgNum AlgNum::operator/(const AlgNum& o) const { return *this * o.inverse(); }

AlgNum AlgNum::pow(unsigned long k) const {
    AlgNum acc(1), b = *this;
    while (k) {
        if (k & 1) acc = acc * b;
        if (k >>= 1) b = b * b;
    }
    return acc;
}

QI AlgNum::enclosure(int k) const {
    if (is_rational()) return QI::point(rat_);
    QI x = lev_->refined(k);
    QI acc = QI::point(Rat(0));
    for (size_t i = poly_.size(); i-- > 0;) acc = acc * x + poly_[i].enclosure(k);
    return acc;
}

bool AlgNum::is_zero() const {
    if (is_rational()) return germ::sign(rat_) == 0;
    if (struct_zero()) return true;
    for (int k = 4; k <= limits().refine_steps; k *= 2) {
        if (enclosure(k).known_sign() != 0) return false;
    }
    AlgNum t = *this;
    t.trim_struct();
    if (t.poly_.empty()) return true;
    UniPoly<AlgNum> e(t.poly_);
    UniPoly<AlgNum> g = gcd_poly(e, lev_->minpoly());
    if (g.degree() == 0) return false;
    QI iso = lev_->initial_interval();
    int slo = g.eval<AlgNum>(AlgNum(iso.lo)).sign();
    int shi = g.eval<AlgNum>(AlgNum(iso.hi)).sign();
    return slo * shi < 0;
}

int AlgNum::sign() const {
    if (is_rational()) return germ::sign(rat_);
    for (int k = 4; k <= limits().refine_steps; k *= 2) {
        int s = enclosure(k).known_sign();
        if (s != 0) return s;
    }
    if (is_zero()) return 0;
    for (int k = limits().refine_steps * 2; k <= limits().refine_steps * 64; k *= 2) {
        int s = enclosure(k).known_sign();
        if (s != 0) return s;
    }
    throw InternalError("sign determination did not converge");
}

Rat AlgNum::approx(const Rat& width) const {
    if (is_rational()) return rat_;
    for (int k = 4;; k *= 2) {
        QI e = enclosure(k);
        if (e.width() < width) return e.mid();
        if (k > limits().refine_steps * 64)
            throw InternalError("approximation did not converge");
    }
}

double AlgNum::to_double() const {
    if (is_rational()) return germ::to_double(rat_);
    return germ::to_double(approx(Rat(1, 1) / Rat(Int(1) << 80)));
}

std::string AlgNum::str() const {
    Rat r;
    if (rational_value(r)) return rat_str(r);
    // 30 significant decimals, deterministic.
    Rat scale = pow_rat(Rat(10), 30);
    Rat a = approx(Rat(1) / scale);
    Int scaled = floor_int(a * scale);
    Rat shown = Rat(scaled) / scale;
    std::ostringstream os;
    mpf_class f(shown, 256);
    mp_exp_t ex;
    std::string digits = f.get_str(ex, 10, 30);
    bool neg = !digits.empty() && digits[0] == '-';
    if (neg) digits = digits.substr(1);
    std::string mant = digits.empty() ? "0" : digits.substr(0, 1) + "." + (digits.size() > 1 ? digits.substr(1) : "0");
    os << "~" << (neg ? "-" : "") << mant << "e" << (ex - 1);
    return os.str();
}

}  // namespace germ
