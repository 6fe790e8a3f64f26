#include "germ/series.hpp"

#include <algorithm>
#include <sstream>

#include "germ/arith.hpp"

namespace germ {

FracSeries::FracSeries(std::vector<Term> terms, std::optional<Rat> trunc)
    : t_(std::move(terms)), trunc_(std::move(trunc)) {
    normalize();
}

FracSeries FracSeries::monomial(const AlgNum& c, const Rat& e) {
    return FracSeries(std::vector<Term>{{e, c}});
}

void FracSeries::normalize() {
    std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.e < b.e; });
    std::vector<Term> out;
    for (auto& t : t_) {
        if (!out.empty() && out.back().e == t.e)
            out.back().c = out.back().c + t.c;
        else
            out.push_back(std::move(t));
    }
    t_.clear();
    for (auto& t : out) {
        if (trunc_ && t.e >= *trunc_) continue;
        if (!t.c.is_zero()) t_.push_back(std::move(t));
    }
}

std::optional<Rat> FracSeries::lowest_exponent() const {
    if (t_.empty()) return std::nullopt;
    return t_.front().e;
}

AlgNum FracSeries::coeff_at(const Rat& e) const {
    for (const auto& t : t_)
        if (t.e == e) return t.c;
    return AlgNum(0);
}

Int FracSeries::exponent_denominator() const {
    Int l(1);
    for (const auto& t : t_) l = lcm_int(l, den(t.e));
    return l;
}

Int FracSeries::exponent_denominator_below(const Rat& bound) const {
    Int l(1);
    for (const auto& t : t_)
        if (t.e < bound) l = lcm_int(l, den(t.e));
    return l;
}

FracSeries FracSeries::operator-() const {
    FracSeries r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

namespace {
std::optional<Rat> min_trunc(const std::optional<Rat>& a, const std::optional<Rat>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}
}  // namespace

FracSeries FracSeries::operator+(const FracSeries& o) const {
    std::vector<Term> all = t_;
    all.insert(all.end(), o.t_.begin(), o.t_.end());
    return FracSeries(std::move(all), min_trunc(trunc_, o.trunc_));
}

FracSeries FracSeries::operator-(const FracSeries& o) const { return *this + (-o); }

FracSeries FracSeries::operator*(const FracSeries& o) const {
    std::optional<Rat> tr;
    if (trunc_) {
        Rat shift = o.t_.empty() ? Rat(0) : o.t_.front().e;
        tr = min_trunc(tr, *trunc_ + shift);
    }
    if (o.trunc_) {
        Rat shift = t_.empty() ? Rat(0) : t_.front().e;
        tr = min_trunc(tr, *o.trunc_ + shift);
    }
    std::vector<Term> all;
    all.reserve(t_.size() * o.t_.size());
    for (const auto& ta : t_)
        for (const auto& tb : o.t_) all.push_back({ta.e + tb.e, ta.c * tb.c});
    return FracSeries(std::move(all), tr);
}

FracSeries FracSeries::scaled(const AlgNum& s) const {
    std::vector<Term> all = t_;
    for (auto& t : all) t.c = t.c * s;
    return FracSeries(std::move(all), trunc_);
}

FracSeries FracSeries::shifted(const Rat& e) const {
    std::vector<Term> all = t_;
    for (auto& t : all) t.e += e;
    auto tr = trunc_;
    if (tr) *tr += e;
    return FracSeries(std::move(all), tr);
}

FracSeries FracSeries::truncated_below(const Rat& bound) const {
    std::vector<Term> keep;
    for (const auto& t : t_)
        if (t.e < bound) keep.push_back(t);
    return FracSeries(std::move(keep));
}

FracSeries FracSeries::with_truncation(const Rat& bound) const {
    std::vector<Term> keep;
    for (const auto& t : t_)
        if (t.e < bound) keep.push_back(t);
    return FracSeries(std::move(keep), bound);
}

std::string FracSeries::str(const std::string& var) const {
    if (t_.empty()) return trunc_ ? "0 + O(" + var + "^(" + rat_str(*trunc_) + "))" : "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
        std::string cs = t.c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        bool unit = (cs == "1");
        if (sign(t.e) == 0) {
            os << cs;
            continue;
        }
        if (!unit) os << cs << "*";
        os << var;
        if (t.e != 1) {
            if (is_integer(t.e))
                os << "^" << rat_str(t.e);
            else
                os << "^(" << rat_str(t.e) << ")";
        }
    }
    if (trunc_) os << " + O(" << var << "^(" << rat_str(*trunc_) << "))";
    return os.str();
}

ContactOrder contact_order(const FracSeries& a, const FracSeries& b,
                           std::optional<Rat> generic_a, std::optional<Rat> generic_b) {
    std::optional<Rat> limit = min_trunc(a.truncation(), b.truncation());
    std::optional<Rat> marker = min_trunc(generic_a, generic_b);

    size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() || j < tb.size()) {
        Rat e;
        if (i < ta.size() && j < tb.size())
            e = std::min(ta[i].e, tb[j].e);
        else if (i < ta.size())
            e = ta[i].e;
        else
            e = tb[j].e;
        if (limit && e >= *limit) break;
        if (marker && e >= *marker) break;
        AlgNum ca = (i < ta.size() && ta[i].e == e) ? ta[i].c : AlgNum(0);
        AlgNum cb = (j < tb.size() && tb[j].e == e) ? tb[j].c : AlgNum(0);
        if (!(ca - cb).is_zero()) return {ContactOrder::Exact, e};
        if (i < ta.size() && ta[i].e == e) ++i;
        if (j < tb.size() && tb[j].e == e) ++j;
    }
    // A generic coefficient differs from every concrete value and from any
    // other generic, so the first marker position decides the contact.
    if (marker && (!limit || *marker < *limit)) return {ContactOrder::Exact, *marker};
    if (limit) return {ContactOrder::AtLeast, *limit};
    return {ContactOrder::Infinite, Rat(0)};
}

namespace {

// Keep exponents <= T and mark the truncation just above T, respecting the
// exponent lattice actually present.
FracSeries clamp_at(const FracSeries& s, const Rat& T) {
    Int n = lcm_int(s.exponent_denominator(), den(T));
    Rat eps = Rat(1) / Rat(2 * n);
    std::vector<FracSeries::Term> keep;
    for (const auto& t : s.terms())
        if (t.e <= T) keep.push_back(t);
    std::optional<Rat> tr = s.truncation();
    Rat mark = T + eps;
    if (!tr || *tr > mark) tr = mark;
    return FracSeries(std::move(keep), tr);
}

}  // namespace

FracSeries pow_frac(const FracSeries& s, const Rat& e, const Rat& T) {
    if (s.is_zero_series()) {
        if (sign(e) <= 0) throw InputError("power of zero series with non-positive exponent");
        return FracSeries(std::vector<FracSeries::Term>{}, s.truncation());
    }
    if (!s.terms().empty() && sign(s.terms().front().e) < 0)
        throw InputError("series with negative exponents are not supported");
    if (is_integer(e) && sign(e) >= 0 && num(e).fits_ulong_p()) {
        unsigned long k = num(e).get_ui();
        FracSeries acc = FracSeries::monomial(AlgNum(1), Rat(0));
        FracSeries b = s;
        std::optional<Rat> tr = s.truncation();
        while (k) {
            if (k & 1) {
                acc = acc * b;
                tr = min_trunc(tr, acc.truncation());
                acc = acc.truncated_below(T + 1);
            }
            if (k >>= 1) {
                b = b * b;
                tr = min_trunc(tr, b.truncation());
                b = b.truncated_below(T + 1);
            }
        }
        if (tr) {
            std::vector<FracSeries::Term> terms(acc.terms().begin(), acc.terms().end());
            acc = FracSeries(std::move(terms), tr);
        }
        return clamp_at(acc, T);
    }
    const auto& t0 = s.terms().front();
    AlgNum c0 = t0.c;
    Rat e0 = t0.e;
    FracSeries rest = (s - FracSeries::monomial(c0, e0)).shifted(-e0).scaled(c0.inverse());
    if (!num(e).fits_slong_p()) throw InputError("series exponent too large");
    long p = num(e).get_si();
    unsigned long q = den(e).get_ui();
    AlgNum root = real_kth_root(c0, q);
    AlgNum lead = p >= 0 ? root.pow(static_cast<unsigned long>(p))
                         : root.pow(static_cast<unsigned long>(-p)).inverse();
    Rat head_exp = e0 * e;
    Rat bound = T - head_exp;
    FracSeries acc = FracSeries::monomial(AlgNum(1), Rat(0));
    if (!rest.is_zero_series() && sign(bound) > 0) {
        Rat eps = *rest.lowest_exponent();
        FracSeries rpow = FracSeries::monomial(AlgNum(1), Rat(0));
        Rat coef(1);
        Rat fall = e;
        long k = 1;
        while (Rat(k) * eps <= bound) {
            rpow = (rpow * rest).truncated_below(bound + 1);
            coef = coef * fall / Rat(k);
            fall -= 1;
            if (rpow.is_zero_series()) break;
            if (sign(coef) != 0) acc = acc + rpow.scaled(AlgNum(coef));
            ++k;
            if (k > 8192) throw ResourceError("fractional power expansion too long");
        }
    }
    FracSeries out = acc.scaled(lead).shifted(head_exp);
    if (rest.truncation()) {
        Rat tr = *rest.truncation() + head_exp;
        std::vector<FracSeries::Term> terms(out.terms().begin(), out.terms().end());
        out = FracSeries(std::move(terms), min_trunc(out.truncation(), tr));
    }
    return clamp_at(out, T);
}

FracSeries compose(const FracSeries& outer, const FracSeries& inner, const Rat& T) {
    if (!inner.is_zero_series() && sign(*inner.lowest_exponent()) <= 0)
        throw InputError("composition requires an inner series of positive order");
    FracSeries acc;
    Rat il = inner.is_zero_series() ? Rat(1) : *inner.lowest_exponent();
    std::optional<Rat> lim;
    if (outer.truncation()) lim = *outer.truncation() * il;
    for (const auto& t : outer.terms()) {
        if (t.e * il > T) break;
        acc = acc + pow_frac(inner, t.e, T).scaled(t.c);
    }
    if (lim) {
        std::vector<FracSeries::Term> terms(acc.terms().begin(), acc.terms().end());
        acc = FracSeries(std::move(terms), min_trunc(acc.truncation(), lim));
    }
    return clamp_at(acc, T);
}

FracSeries invert_reparametrization(const FracSeries& w, const Rat& T) {
    auto le = w.lowest_exponent();
    if (!le || *le != 1) throw InputError("reparametrization must have lowest exponent exactly 1");
    AlgNum c = w.terms().front().c;
    if (c.sign() <= 0) throw InputError("reparametrization must be orientation-preserving (c > 0)");
    if (w.truncation() && *w.truncation() <= T)
        throw InputError("reparametrization series not known to the requested order");
    AlgNum cinv = c.inverse();
    FracSeries u = FracSeries::monomial(cinv, Rat(1));
    FracSeries ident = FracSeries::monomial(AlgNum(1), Rat(1));
    long guard = 0;
    for (;;) {
        if (++guard > limits().track_steps) throw ResourceError("series inversion budget exceeded");
        FracSeries r = compose(w, u, T) - ident;
        std::vector<FracSeries::Term> sig;
        for (const auto& t : r.terms())
            if (t.e <= T) sig.push_back(t);
        if (sig.empty()) break;
        u = u - FracSeries::monomial(sig.front().c * cinv, sig.front().e);
    }
    return clamp_at(u, T);
}

DemiBranch image_branch_shear(const UniPoly<Rat>& p, const DemiBranch& g) {
    if (!p.is_zero() && sign(p.coeff_or_zero(0)) != 0)
        throw InputError("shear must vanish at the origin");
    FracSeries ps;
    for (int i = 1; i <= p.degree(); ++i)
        if (sign(p[i]) != 0) ps = ps + FracSeries::monomial(AlgNum(p[i]), Rat(i));
    DemiBranch out = g;
    out.series = g.series + ps;
    if (!out.allowable()) throw InputError("image branch not allowable");
    return out;
}

DemiBranch image_branch_linear(const LinearMap& m, const DemiBranch& g, const Rat& T) {
    if (m.a * m.d - m.b * m.c == 0) throw InputError("singular linear map");
    const FracSeries& lam = g.series;
    FracSeries y1 = FracSeries::monomial(AlgNum(1), Rat(1));
    FracSeries w = lam.scaled(AlgNum(m.c)) + y1.scaled(AlgNum(m.d));
    auto le = w.lowest_exponent();
    if (!le || *le != 1 || w.terms().front().c.sign() <= 0)
        throw InputError("image branch tangent to the x-axis");
    FracSeries target = lam.scaled(AlgNum(m.a)) + y1.scaled(AlgNum(m.b));
    FracSeries u = invert_reparametrization(w, T);
    FracSeries lt = compose(target, u, T);
    DemiBranch out;
    out.lower_half = g.lower_half;
    out.generic_tail = g.generic_tail;
    out.series = lt;
    if (!out.allowable()) throw InputError("image branch not allowable");
    return out;
}

}  // namespace germ
