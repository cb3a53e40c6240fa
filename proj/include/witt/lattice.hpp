#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "witt/scalar.hpp"

namespace witt {

/// A point of the grading group in basis coordinates. Addition is
/// componentwise; the zero point is all zeros.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(int rank) : coords_(rank) {}
  explicit LatticePoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {}

  static LatticePoint basis(int rank, int i) {
    LatticePoint p(rank);
    p.coords_[i] = Scalar(1);
    return p;
  }

  int rank() const { return static_cast<int>(coords_.size()); }
  const Scalar& operator[](int i) const { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (!c.is_zero()) return false;
    return true;
  }

  LatticePoint operator+(const LatticePoint& o) const;
  LatticePoint operator-(const LatticePoint& o) const;
  LatticePoint operator-() const;

  bool operator==(const LatticePoint& o) const { return coords_ == o.coords_; }

  /// Lexicographic on coordinates; translation-invariant, so it is a total
  /// order compatible with the group structure.
  std::strong_ordering operator<=>(const LatticePoint& o) const;

 private:
  std::vector<Scalar> coords_;
};

/// A torus element in basis coordinates.
class TorusVector {
 public:
  TorusVector() = default;
  explicit TorusVector(int rank) : coeffs_(rank) {}
  explicit TorusVector(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}

  static TorusVector basis(int rank, int i) {
    TorusVector d(rank);
    d.coeffs_[i] = Scalar(1);
    return d;
  }

  int rank() const { return static_cast<int>(coeffs_.size()); }
  const Scalar& operator[](int i) const { return coeffs_[i]; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  TorusVector operator+(const TorusVector& o) const;
  TorusVector operator-(const TorusVector& o) const;
  TorusVector operator-() const;

  bool operator==(const TorusVector& o) const { return coeffs_ == o.coeffs_; }
  std::strong_ordering operator<=>(const TorusVector& o) const;

 private:
  std::vector<Scalar> coeffs_;
};

TorusVector operator*(const Scalar& c, const TorusVector& d);

/// Configuration shared by sampling and search operations.
struct AlgebraConfig {
  int rank = 1;
  std::uint64_t seed = 0;
  int sample_window = 3;   // bound on sampled coordinate numerators/denominators
  int escalation_cap = 8;  // bound on witness candidate enumeration

  void validate() const {
    if (rank < 1) throw Error("rank must be at least 1");
    if (sample_window < 1) throw Error("sample window must be at least 1");
    if (escalation_cap < 0) throw Error("escalation cap must be nonnegative");
  }
};

/// Dual pairing in coordinates: <d, x> = sum_i d_i x_i.
Scalar pairing(const TorusVector& d, const LatticePoint& x);

/// True iff the points span the whole rank-dimensional coordinate space over
/// the rationals. Rank is computed by exact Gaussian elimination.
bool check_spanning(const std::vector<LatticePoint>& points);

/// The total order used throughout the engine, as a named operation.
std::strong_ordering compare(const LatticePoint& x, const LatticePoint& y);

}  // namespace witt
