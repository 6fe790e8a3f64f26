#pragma once

#include "germ/bipoly.hpp"
#include "germ/series.hpp"

namespace germ {

// Fractional bivariate polynomial  sum c_{i,e} x^i y^e  with natural x-powers,
// nonnegative rational y-exponents and algebraic coefficients. Coefficients
// are kept exactly nonzero so the support is trustworthy.
class FPoly {
  public:
    struct Term {
        int i;
        Rat e;
        AlgNum c;
    };

    FPoly() = default;
    explicit FPoly(std::vector<Term> t);
    static FPoly from_bipoly(const BiPoly& f);
    static FPoly term(int i, const Rat& e, const AlgNum& c);

    bool is_zero() const { return t_.empty(); }
    const std::vector<Term>& terms() const { return t_; }

    FPoly operator+(const FPoly& o) const;
    FPoly operator-() const;
    FPoly operator*(const FPoly& o) const;
    FPoly scaled(const AlgNum& s) const;

    // x -> x + c y^t
    FPoly sub_x_shift(const AlgNum& c, const Rat& t) const;
    // drop terms with y-exponent >= bound
    FPoly drop_y_from(const Rat& bound) const;

    int min_x_degree() const;  // -1 for zero
    int max_x_degree() const;

    // min over support of (e + i*xi); the polynomial must be nonzero.
    Rat weighted_min(const Rat& xi) const;
    // edge polynomial at xi: coefficients of z^i collected from terms with
    // e + i*xi == weighted_min(xi).
    UniPoly<AlgNum> edge_at(const Rat& xi) const;

    AlgNum eval(const AlgNum& x, const AlgNum& y_pow_base, const Rat& y_den) const = delete;

    std::string str() const;

  private:
    std::vector<Term> t_;  // sorted by (i, e)
    void normalize();
};

// Exact expansion of f(X + lambda(Y), Y). When lambda carries a truncation
// marker T, terms with y-exponent >= T are unreliable; the returned
// validity bound reflects that (nullopt = globally exact).
struct Substituted {
    FPoly poly;
    std::optional<Rat> validity;
};
Substituted substitute(const BiPoly& f, const FracSeries& lambda);

}  // namespace germ
