#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "germ/interval.hpp"
#include "germ/unipoly.hpp"

namespace germ {

class TowerLevel;
using LevelPtr = std::shared_ptr<const TowerLevel>;

// A real algebraic number inside a tower of real extensions
// Q = L0 < L1 < ... < Lk, each level generated by a real root of a monic
// squarefree polynomial over the previous level, selected by an isolating
// interval. A null level means the number is rational. Elements of level k
// are polynomials in the level generator with coefficients one level down,
// reduced modulo the generator's defining polynomial.
//
// Defining polynomials are squarefree but not necessarily irreducible;
// inversion walks gcds ("dynamic evaluation") so arithmetic never needs
// polynomial factorization.
class AlgNum {
  public:
    AlgNum() : rat_(0) {}
    AlgNum(const Rat& r) : rat_(r) {}
    AlgNum(const Int& n) : rat_(n) {}
    AlgNum(long n) : rat_(n) {}
    AlgNum(int n) : rat_(static_cast<long>(n)) {}

    static AlgNum generator(const LevelPtr& lev);
    static AlgNum from_parts(const LevelPtr& lev, std::vector<AlgNum> coeffs);
    static AlgNum rebased(const AlgNum& v, const LevelPtr& new_level,
                          const std::vector<std::pair<LevelPtr, LevelPtr>>& map);

    const LevelPtr& level() const { return lev_; }
    int depth() const;

    bool is_rational() const { return lev_ == nullptr; }
    const Rat& rat() const {
        if (!is_rational()) throw InternalError("rat() on non-rational algebraic number");
        return rat_;
    }
    // Exact rational value if this number is structurally rational at any level.
    bool rational_value(Rat& out) const;

    bool struct_zero() const;
    bool struct_equal(const AlgNum& o) const;

    bool is_zero() const;       // exact
    int sign() const;           // exact: -1, 0, +1
    AlgNum inverse() const;

    AlgNum operator-() const;
    AlgNum operator+(const AlgNum& o) const;
    AlgNum operator-(const AlgNum& o) const;
    AlgNum operator*(const AlgNum& o) const;
    AlgNum operator/(const AlgNum& o) const;
    AlgNum pow(unsigned long k) const;

    bool operator==(const AlgNum& o) const { return (*this - o).is_zero(); }
    bool operator!=(const AlgNum& o) const { return !(*this == o); }

    // Enclosure after k bisection steps of every generator interval below.
    QI enclosure(int k) const;
    // Rational approximation within the given width.
    Rat approx(const Rat& width) const;
    double to_double() const;

    // Rational if rational, otherwise a fixed-precision decimal with '~'.
    std::string str() const;

  private:
    LevelPtr lev_;               // null => rational
    Rat rat_;                    // valid when lev_ is null
    std::vector<AlgNum> poly_;   // else: coefficients over lev_->base()

    void trim_struct();
    static void lift_pair(AlgNum& a, AlgNum& b);
    static AlgNum lift_to(const AlgNum& v, const LevelPtr& lev);
    AlgNum reduce_and_wrap(const LevelPtr& lev, std::vector<AlgNum> raw) const;

    friend class TowerLevel;
};

inline bool k_is_zero(const AlgNum& a) { return a.is_zero(); }
inline AlgNum k_inverse(const AlgNum& a) { return a.inverse(); }

class TowerLevel {
  public:
    // base may be null (extension of Q). p must be monic and squarefree over
    // the base level with exactly one real root in isol, endpoints excluded.
    static LevelPtr make(LevelPtr base, UniPoly<AlgNum> p, QI isol);

    const LevelPtr& base() const { return base_; }
    const UniPoly<AlgNum>& minpoly() const { return minpoly_; }
    const QI& initial_interval() const { return isol_; }
    int depth() const { return depth_; }

    // Isolating interval after at least k bisections (cached, monotone).
    QI refined(int k) const;

    bool struct_equal(const TowerLevel& o) const;

  private:
    TowerLevel(LevelPtr base, UniPoly<AlgNum> p, QI isol, int depth)
        : base_(std::move(base)), minpoly_(std::move(p)), isol_(std::move(isol)), depth_(depth), cache_(isol_) {}

    LevelPtr base_;
    UniPoly<AlgNum> minpoly_;
    QI isol_;
    int depth_;

    mutable std::mutex mu_;
    mutable QI cache_;
    mutable int cache_steps_ = 0;
};

bool level_equal(const LevelPtr& a, const LevelPtr& b);
int level_depth(const LevelPtr& l);

// True when a's level chain is a prefix of b's (or equal).
bool level_prefix(const LevelPtr& a, const LevelPtr& b);

}  // namespace germ
