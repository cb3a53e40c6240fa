#include "witt/lattice.hpp"

namespace witt {

namespace {

void require_same_rank(int a, int b) {
  if (a != b)
    throw DimensionError("rank mismatch: " + std::to_string(a) + " vs " +
                         std::to_string(b));
}

}  // namespace

LatticePoint LatticePoint::operator+(const LatticePoint& o) const {
  require_same_rank(rank(), o.rank());
  std::vector<Scalar> out(coords_);
  for (int i = 0; i < rank(); ++i) out[i] += o.coords_[i];
  return LatticePoint(std::move(out));
}

LatticePoint LatticePoint::operator-(const LatticePoint& o) const {
  require_same_rank(rank(), o.rank());
  std::vector<Scalar> out(coords_);
  for (int i = 0; i < rank(); ++i) out[i] -= o.coords_[i];
  return LatticePoint(std::move(out));
}

LatticePoint LatticePoint::operator-() const {
  std::vector<Scalar> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(-c);
  return LatticePoint(std::move(out));
}

std::strong_ordering LatticePoint::operator<=>(const LatticePoint& o) const {
  require_same_rank(rank(), o.rank());
  for (int i = 0; i < rank(); ++i) {
    const auto c = coords_[i] <=> o.coords_[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

TorusVector TorusVector::operator+(const TorusVector& o) const {
  require_same_rank(rank(), o.rank());
  std::vector<Scalar> out(coeffs_);
  for (int i = 0; i < rank(); ++i) out[i] += o.coeffs_[i];
  return TorusVector(std::move(out));
}

TorusVector TorusVector::operator-(const TorusVector& o) const {
  require_same_rank(rank(), o.rank());
  std::vector<Scalar> out(coeffs_);
  for (int i = 0; i < rank(); ++i) out[i] -= o.coeffs_[i];
  return TorusVector(std::move(out));
}

TorusVector TorusVector::operator-() const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(-c);
  return TorusVector(std::move(out));
}

std::strong_ordering TorusVector::operator<=>(const TorusVector& o) const {
  require_same_rank(rank(), o.rank());
  for (int i = 0; i < rank(); ++i) {
    const auto c = coeffs_[i] <=> o.coeffs_[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

TorusVector operator*(const Scalar& c, const TorusVector& d) {
  std::vector<Scalar> out;
  out.reserve(d.rank());
  for (int i = 0; i < d.rank(); ++i) out.push_back(c * d[i]);
  return TorusVector(std::move(out));
}

Scalar pairing(const TorusVector& d, const LatticePoint& x) {
  require_same_rank(d.rank(), x.rank());
  Scalar acc;
  for (int i = 0; i < d.rank(); ++i) acc += d[i] * x[i];
  return acc;
}

bool check_spanning(const std::vector<LatticePoint>& points) {
  if (points.empty()) throw DimensionError("check_spanning needs a nonempty list");
  const int n = points.front().rank();
  for (const auto& p : points) require_same_rank(p.rank(), n);

  // Exact row reduction; rank equals the number of pivots.
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back(p.coords());

  int pivots = 0;
  for (int col = 0; col < n && pivots < static_cast<int>(rows.size()); ++col) {
    int pivot_row = -1;
    for (int r = pivots; r < static_cast<int>(rows.size()); ++r) {
      if (!rows[r][col].is_zero()) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    std::swap(rows[pivots], rows[pivot_row]);
    const Scalar inv = rows[pivots][col].inverse();
    for (int c = col; c < n; ++c) rows[pivots][c] *= inv;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == pivots || rows[r][col].is_zero()) continue;
      const Scalar f = rows[r][col];
      for (int c = col; c < n; ++c) rows[r][c] -= f * rows[pivots][c];
    }
    ++pivots;
  }
  return pivots == n;
}

std::strong_ordering compare(const LatticePoint& x, const LatticePoint& y) {
  return x <=> y;
}

}  // namespace witt
