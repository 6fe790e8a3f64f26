#include "germ/fpoly.hpp"

#include <algorithm>
#include <sstream>

namespace germ {

FPoly::FPoly(std::vector<Term> t) : t_(std::move(t)) { normalize(); }

void FPoly::normalize() {
    std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) {
        if (a.i != b.i) return a.i < b.i;
        return a.e < b.e;
    });
    std::vector<Term> out;
    for (auto& t : t_) {
        if (!out.empty() && out.back().i == t.i && out.back().e == t.e)
            out.back().c = out.back().c + t.c;
        else
            out.push_back(std::move(t));
    }
    t_.clear();
    for (auto& t : out)
        if (!t.c.is_zero()) t_.push_back(std::move(t));
}

FPoly FPoly::from_bipoly(const BiPoly& f) {
    std::vector<Term> t;
    t.reserve(f.terms().size());
    for (const auto& [k, c] : f.terms()) t.push_back({k.first, Rat(k.second), AlgNum(c)});
    FPoly p;
    p.t_ = std::move(t);  // already nonzero and unique
    std::sort(p.t_.begin(), p.t_.end(), [](const Term& a, const Term& b) {
        if (a.i != b.i) return a.i < b.i;
        return a.e < b.e;
    });
    return p;
}

FPoly FPoly::term(int i, const Rat& e, const AlgNum& c) {
    if (i < 0 || sign(e) < 0) throw InputError("negative exponent in fractional polynomial");
    return FPoly(std::vector<Term>{{i, e, c}});
}

FPoly FPoly::operator+(const FPoly& o) const {
    std::vector<Term> all = t_;
    all.insert(all.end(), o.t_.begin(), o.t_.end());
    return FPoly(std::move(all));
}

FPoly FPoly::operator-() const {
    FPoly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

FPoly FPoly::operator*(const FPoly& o) const {
    std::vector<Term> all;
    all.reserve(t_.size() * o.t_.size());
    for (const auto& a : t_)
        for (const auto& b : o.t_) all.push_back({a.i + b.i, a.e + b.e, a.c * b.c});
    return FPoly(std::move(all));
}

FPoly FPoly::scaled(const AlgNum& s) const {
    std::vector<Term> all = t_;
    for (auto& t : all) t.c = t.c * s;
    return FPoly(std::move(all));
}

FPoly FPoly::sub_x_shift(const AlgNum& c, const Rat& tshift) const {
    if (c.is_zero()) return *this;
    // Precompute c^k.
    int maxi = max_x_degree();
    std::vector<AlgNum> cpow(static_cast<size_t>(maxi + 1), AlgNum(1));
    for (int k = 1; k <= maxi; ++k) cpow[k] = cpow[k - 1] * c;
    std::vector<Term> all;
    for (const auto& t : t_) {
        for (int s = 0; s <= t.i; ++s) {
            AlgNum coef = t.c * AlgNum(Rat(binomial(t.i, s))) * cpow[t.i - s];
            all.push_back({s, t.e + tshift * (t.i - s), coef});
        }
    }
    return FPoly(std::move(all));
}

FPoly FPoly::drop_y_from(const Rat& bound) const {
    std::vector<Term> keep;
    for (const auto& t : t_)
        if (t.e < bound) keep.push_back(t);
    FPoly p;
    p.t_ = std::move(keep);
    return p;
}

int FPoly::min_x_degree() const {
    if (t_.empty()) return -1;
    return t_.front().i;
}

int FPoly::max_x_degree() const {
    if (t_.empty()) return -1;
    return t_.back().i;
}

Rat FPoly::weighted_min(const Rat& xi) const {
    if (t_.empty()) throw InternalError("weighted_min of zero polynomial");
    bool first = true;
    Rat best;
    for (const auto& t : t_) {
        Rat v = t.e + Rat(t.i) * xi;
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    return best;
}

UniPoly<AlgNum> FPoly::edge_at(const Rat& xi) const {
    Rat m = weighted_min(xi);
    std::vector<AlgNum> c(static_cast<size_t>(max_x_degree() + 1), AlgNum(0));
    for (const auto& t : t_)
        if (t.e + Rat(t.i) * xi == m) c[t.i] = c[t.i] + t.c;
    return UniPoly<AlgNum>(std::move(c));
}

std::string FPoly::str() const {
    if (t_.empty()) return "0";
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
        bool unit = cs == "1" && (t.i > 0 || sign(t.e) > 0);
        if (!unit) os << cs;
        bool prev = !unit;
        if (t.i > 0) {
            if (prev) os << "*";
            os << "X";
            if (t.i > 1) os << "^" << t.i;
            prev = true;
        }
        if (sign(t.e) > 0) {
            if (prev) os << "*";
            os << "Y";
            if (t.e != 1) {
                if (is_integer(t.e))
                    os << "^" << rat_str(t.e);
                else
                    os << "^(" << rat_str(t.e) << ")";
            }
        }
    }
    return os.str();
}

Substituted substitute(const BiPoly& f, const FracSeries& lambda) {
    FPoly acc = FPoly::from_bipoly(f);
    for (const auto& t : lambda.terms()) acc = acc.sub_x_shift(t.c, t.e);
    Substituted out;
    out.validity = lambda.truncation();
    if (out.validity) acc = acc.drop_y_from(*out.validity);
    out.poly = std::move(acc);
    return out;
}

}  // namespace germ
