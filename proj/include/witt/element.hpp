#pragma once

#include <compare>
#include <map>
#include <vector>

#include "witt/lattice.hpp"

namespace witt {

/// A single basis monomial t^x d_i, used as an index into derivation tables
/// and as the unit of tensor expansion.
struct Monomial {
  LatticePoint point;
  int index = 0;  // torus basis index, 0-based

  bool operator==(const Monomial& o) const {
    return index == o.index && point == o.point;
  }
  std::strong_ordering operator<=>(const Monomial& o) const {
    const auto c = point <=> o.point;
    if (c != std::strong_ordering::equal) return c;
    return index <=> o.index;
  }
};

/// An element of the graded algebra: a finite sum of monomials t^x d, stored
/// as a map from degree to the torus coefficient vector at that degree.
/// No stored vector is zero, so equality is structural and the homogeneous
/// component at degree x is exactly terms()[x].
class WittElement {
 public:
  WittElement() = default;
  explicit WittElement(int rank) : rank_(rank) {}

  static WittElement monomial(const LatticePoint& x, const TorusVector& d);
  static WittElement monomial(const Monomial& m, int rank);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<LatticePoint, TorusVector>& terms() const { return terms_; }

  /// Accumulates t^x d into the element, pruning zero coefficients.
  void add_term(const LatticePoint& x, const TorusVector& d);

  WittElement operator+(const WittElement& o) const;
  WittElement operator-(const WittElement& o) const;
  WittElement operator-() const;
  WittElement& operator+=(const WittElement& o);

  bool operator==(const WittElement& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
  }

 private:
  int rank_ = 0;
  std::map<LatticePoint, TorusVector> terms_;
};

WittElement operator*(const Scalar& c, const WittElement& u);

/// The bracket [t^x d, t^y d'] = t^{x+y}(d(y) d' - d'(x) d), extended
/// bilinearly over all term pairs.
WittElement bracket(const WittElement& u, const WittElement& w);

/// Splits an element into its homogeneous components, keyed by degree.
std::map<LatticePoint, WittElement> grade(const WittElement& u);

/// [[u,v],w] + [[v,w],u] + [[w,u],v]; identically zero here.
WittElement jacobi_defect(const WittElement& u, const WittElement& v,
                          const WittElement& w);

/// Writes the element as a list of scaled basis monomials.
std::vector<std::pair<Scalar, Monomial>> monomial_terms(const WittElement& u);

/// True iff neither element is a scalar multiple of the other.
bool linearly_independent(const WittElement& a, const WittElement& b);

}  // namespace witt
