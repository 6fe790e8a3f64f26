#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "germ/algnum.hpp"

namespace germ {

// Finite fractional power series  sum c_k y^{e_k}  with strictly increasing
// rational exponents and nonzero algebraic coefficients. truncation_order
// T means exponents >= T are unspecified; no T means the series is exact.
class FracSeries {
  public:
    struct Term {
        Rat e;
        AlgNum c;
    };

    FracSeries() = default;
    explicit FracSeries(std::vector<Term> terms, std::optional<Rat> trunc = std::nullopt);
    static FracSeries zero() { return FracSeries(); }
    static FracSeries monomial(const AlgNum& c, const Rat& e);

    const std::vector<Term>& terms() const { return t_; }
    const std::optional<Rat>& truncation() const { return trunc_; }
    bool is_exact() const { return !trunc_.has_value(); }
    bool is_zero_series() const { return t_.empty(); }

    std::optional<Rat> lowest_exponent() const;
    AlgNum coeff_at(const Rat& e) const;
    // lcm of exponent denominators present (1 for the empty series).
    Int exponent_denominator() const;
    // lcm of exponent denominators of terms with exponent < bound.
    Int exponent_denominator_below(const Rat& bound) const;

    FracSeries operator-() const;
    FracSeries operator+(const FracSeries& o) const;
    FracSeries operator-(const FracSeries& o) const;
    FracSeries operator*(const FracSeries& o) const;
    FracSeries scaled(const AlgNum& s) const;
    // multiply by y^e
    FracSeries shifted(const Rat& e) const;

    // Keep terms with exponent < bound (exact result, no truncation marker).
    FracSeries truncated_below(const Rat& bound) const;
    // Same, but record the truncation marker.
    FracSeries with_truncation(const Rat& bound) const;

    std::string str(const std::string& var = "y") const;

  private:
    std::vector<Term> t_;
    std::optional<Rat> trunc_;
    void normalize();
};

// Demi-branch x = lambda(y) on a half-plane. lower_half means the series is
// written in the variable -y (i.e. it parametrizes y <= 0 of the original
// germ). generic_tail marks a symbolic generic coefficient at that exponent
// (a truncated Newton-Puiseux root).
struct DemiBranch {
    FracSeries series;
    bool lower_half = false;
    std::optional<Rat> generic_tail;

    bool allowable() const {
        auto e = series.lowest_exponent();
        return !e || *e >= 1;
    }
};

// Contact order of two series: exponent of the first difference. AtLeast is
// returned when the series agree through the usable (truncated) range;
// Infinite when both are exact and identical.
struct ContactOrder {
    enum Kind { Exact, AtLeast, Infinite };
    Kind kind;
    Rat bound;  // Exact: the order; AtLeast: agreement holds through this
    bool exact() const { return kind == Exact; }
};

ContactOrder contact_order(const FracSeries& a, const FracSeries& b,
                           std::optional<Rat> generic_a = std::nullopt,
                           std::optional<Rat> generic_b = std::nullopt);

// s^(p/q) truncated at exponent bound T. The lowest coefficient must admit
// a real q-th root (positive, or odd q).
FracSeries pow_frac(const FracSeries& s, const Rat& e, const Rat& T);

// outer(inner(y)) truncated at T; inner must have all exponents >= 1.
FracSeries compose(const FracSeries& outer, const FracSeries& inner, const Rat& T);

// Inverse series u with w(u(t)) = t through exponent T; w must have lowest
// exponent exactly 1 with positive coefficient.
FracSeries invert_reparametrization(const FracSeries& w, const Rat& T);

// Image of a demi-branch under a planar map.
struct LinearMap {
    Rat a, b, c, d;  // (x,y) -> (a x + b y, c x + d y)
};
DemiBranch image_branch_linear(const LinearMap& m, const DemiBranch& g, const Rat& T);
DemiBranch image_branch_shear(const UniPoly<Rat>& p, const DemiBranch& g);  // (x,y)->(x+p(y),y)

}  // namespace germ
