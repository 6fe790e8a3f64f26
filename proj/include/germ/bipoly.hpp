#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "germ/unipoly.hpp"

namespace germ {

// Sparse bivariate polynomial over Q. Keys are (i, j) for x^i y^j; stored
// coefficients are nonzero.
class BiPoly {
  public:
    using Key = std::pair<int, int>;

    BiPoly() = default;
    static BiPoly term(int i, int j, const Rat& c);
    static BiPoly var_x() { return term(1, 0, Rat(1)); }
    static BiPoly var_y() { return term(0, 1, Rat(1)); }
    static BiPoly constant(const Rat& c) { return term(0, 0, c); }

    bool is_zero() const { return t_.empty(); }
    const std::map<Key, Rat>& terms() const { return t_; }
    Rat coeff(int i, int j) const;
    void set(int i, int j, const Rat& c);

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly scaled(const Rat& s) const;
    BiPoly pow(unsigned long k) const;
    bool operator==(const BiPoly& o) const { return t_ == o.t_; }

    BiPoly dx() const;
    BiPoly dy() const;

    int deg_x() const;
    int deg_y() const;
    int total_degree() const;
    // Multiplicity at the origin (minimal total degree); -1 for zero.
    int mult0() const;
    // Homogeneous form of lowest degree.
    BiPoly initial_form() const;
    bool mini_regular_x() const;  // initial form nonzero at (1,0)

    // x -> x + c*y   /  y -> y + c*x  /  sign flips.
    BiPoly sub_x_plus_cy(const Rat& c) const;
    BiPoly sub_y_plus_cx(const Rat& c) const;
    BiPoly sub_neg_x() const;
    BiPoly sub_neg_y() const;
    // x -> x + p(y) for polynomial p (exact shear).
    BiPoly sub_x_plus_poly_y(const UniPoly<Rat>& p) const;

    Rat eval(const Rat& x, const Rat& y) const;
    double eval_d(double x, double y) const;

    // One-variable views.
    UniPoly<Rat> at_y(const Rat& y0) const;      // f(z, y0) as poly in z
    UniPoly<Rat> assoc_z1() const;               // f(z, 1)
    UniPoly<Rat> assoc_z_neg1() const;           // f(z, -1)
    UniPoly<Rat> y_slice(int i) const;           // coefficient of x^i as poly in y

    // x-major view: coefficient of x^i is a polynomial in y.
    std::vector<UniPoly<Rat>> x_major() const;
    static BiPoly from_x_major(const std::vector<UniPoly<Rat>>& v);

    std::string str() const;  // canonical rendering, parseable back

  private:
    std::map<Key, Rat> t_;
};

// Gcd in Q[x,y] (primitive PRS), normalized integer-primitive with positive
// leading coefficient in lex order x > y.
BiPoly gcd_bipoly(const BiPoly& a, const BiPoly& b);

// Exact division; throws InternalError if not divisible.
BiPoly div_exact_bipoly(const BiPoly& a, const BiPoly& b);

struct BiFactor {
    BiPoly factor;
    int multiplicity;
};

// f = unit * prod(factor^multiplicity), factors squarefree, pairwise coprime,
// integer-primitive with positive leading coefficient.
struct SquarefreeBipoly {
    Rat unit;
    std::vector<BiFactor> factors;
};
SquarefreeBipoly squarefree_factor_bipoly(const BiPoly& f);

}  // namespace germ
