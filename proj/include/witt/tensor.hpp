#pragma once

#include <compare>
#include <map>
#include <tuple>
#include <vector>

#include "witt/element.hpp"

namespace witt {

struct Key2 {
  LatticePoint x, y;
  bool operator==(const Key2& o) const { return x == o.x && y == o.y; }
  std::strong_ordering operator<=>(const Key2& o) const {
    const auto c = x <=> o.x;
    if (c != std::strong_ordering::equal) return c;
    return y <=> o.y;
  }
};

struct Key3 {
  LatticePoint x, y, z;
  bool operator==(const Key3& o) const {
    return x == o.x && y == o.y && z == o.z;
  }
  std::strong_ordering operator<=>(const Key3& o) const {
    auto c = x <=> o.x;
    if (c != std::strong_ordering::equal) return c;
    c = y <=> o.y;
    if (c != std::strong_ordering::equal) return c;
    return z <=> o.z;
  }
};

/// Dense rank x rank coefficient grid for one homogeneous block.
class Grid2 {
 public:
  Grid2() = default;
  explicit Grid2(int rank) : n_(rank), a_(rank * rank) {}
  Scalar& at(int k, int l) { return a_[k * n_ + l]; }
  const Scalar& at(int k, int l) const { return a_[k * n_ + l]; }
  int rank() const { return n_; }
  bool is_zero() const {
    for (const auto& c : a_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool operator==(const Grid2& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  int n_ = 0;
  std::vector<Scalar> a_;
};

class Grid3 {
 public:
  Grid3() = default;
  explicit Grid3(int rank) : n_(rank), a_(rank * rank * rank) {}
  Scalar& at(int k, int l, int m) { return a_[(k * n_ + l) * n_ + m]; }
  const Scalar& at(int k, int l, int m) const { return a_[(k * n_ + l) * n_ + m]; }
  int rank() const { return n_; }
  bool is_zero() const {
    for (const auto& c : a_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool operator==(const Grid3& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  int n_ = 0;
  std::vector<Scalar> a_;
};

/// An element of the twofold tensor module, stored per degree pair: entry
/// (k,l) of block (x,y) is the coefficient of t^x d_k (x) t^y d_l.
/// Zero blocks are never stored, so equality is structural and the grade
/// decomposition groups blocks by key sum.
class Tensor2 {
 public:
  Tensor2() = default;
  explicit Tensor2(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  bool is_zero() const { return blocks_.empty(); }
  const std::map<Key2, Grid2>& blocks() const { return blocks_; }

  void add_entry(const LatticePoint& x, const LatticePoint& y, int k, int l,
                 const Scalar& c);

  Tensor2 operator+(const Tensor2& o) const;
  Tensor2 operator-(const Tensor2& o) const;
  Tensor2 operator-() const;
  Tensor2& operator+=(const Tensor2& o);
  bool operator==(const Tensor2& o) const {
    return rank_ == o.rank_ && blocks_ == o.blocks_;
  }

  /// The tensor as a sum of scaled decomposable basis monomial pairs, in
  /// block/entry order.
  std::vector<std::tuple<Scalar, Monomial, Monomial>> decomposables() const;

 private:
  int rank_ = 0;
  std::map<Key2, Grid2> blocks_;
};

class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  bool is_zero() const { return blocks_.empty(); }
  const std::map<Key3, Grid3>& blocks() const { return blocks_; }

  void add_entry(const LatticePoint& x, const LatticePoint& y,
                 const LatticePoint& z, int k, int l, int m, const Scalar& c);

  Tensor3 operator+(const Tensor3& o) const;
  Tensor3 operator-(const Tensor3& o) const;
  Tensor3 operator-() const;
  Tensor3& operator+=(const Tensor3& o);
  bool operator==(const Tensor3& o) const {
    return rank_ == o.rank_ && blocks_ == o.blocks_;
  }

  std::vector<std::tuple<Scalar, Monomial, Monomial, Monomial>> decomposables() const;

 private:
  int rank_ = 0;
  std::map<Key3, Grid3> blocks_;
};

Tensor2 operator*(const Scalar& c, const Tensor2& t);
Tensor3 operator*(const Scalar& c, const Tensor3& t);

/// Canonical embedding of the outer product u (x) w.
Tensor2 outer(const WittElement& u, const WittElement& w);
Tensor3 outer(const WittElement& u, const WittElement& v, const WittElement& w);

/// The twist a (x) b -> b (x) a.
Tensor2 twist(const Tensor2& t);

/// The cyclic shift a (x) b (x) c -> b (x) c (x) a.
Tensor3 cycle(const Tensor3& t);

/// Diagonal adjoint action: a acts by the bracket in each slot.
Tensor2 act(const WittElement& a, const Tensor2& t);
Tensor3 act(const WittElement& a, const Tensor3& t);

/// Blocks grouped by total degree; values sum to the input.
std::map<LatticePoint, Tensor2> grade2(const Tensor2& t);
std::map<LatticePoint, Tensor3> grade3(const Tensor3& t);

struct SymSplit {
  Tensor2 alternating;  // (t - twist(t)) / 2
  Tensor2 symmetric;    // (t + twist(t)) / 2
};

/// Splits into alternating and symmetric halves; the parts sum back to the
/// input, and the input lies in the image of (1 - twist) iff symmetric == 0.
SymSplit sym_split(const Tensor2& t);

/// w (x) t as a threefold tensor, c-scaled; w enters the first slot.
Tensor3 prepend(const Scalar& c, const Monomial& w, const Tensor2& t);

}  // namespace witt
