#pragma once

#include <random>

#include "witt/tensor.hpp"

namespace witt {

/// Seeded generator for random algebra data. All coordinates are bounded by
/// the config's sample window; identical configs replay identical streams,
/// so every sampled counterexample is reproducible.
class Sampler {
 public:
  explicit Sampler(const AlgebraConfig& cfg);

  const AlgebraConfig& config() const { return cfg_; }

  int int_in(int lo, int hi);  // inclusive bounds
  Scalar scalar();
  Scalar nonzero_scalar();
  LatticePoint point();
  LatticePoint nonzero_point();
  TorusVector torus();
  TorusVector nonzero_torus();
  Monomial monomial();
  WittElement element();          // up to three monomial terms, may be zero
  WittElement nonzero_element();
  Tensor2 tensor2();              // short sum of decomposables, may be zero
  Tensor3 tensor3();
  Tensor2 alternating_tensor2();  // a sum of u (x) w - w (x) u pieces
  Tensor2 non_alternating_tensor2(bool degree_zero_only);
  Tensor3 nonzero_tensor3(bool degree_zero_only);

  /// An eigenpair [a, b] = k b with k != 0 and a, b independent, together
  /// with the eigenvalue.
  struct Eigenpair {
    WittElement a, b;
    Scalar k;
  };
  Eigenpair eigenpair();

 private:
  AlgebraConfig cfg_;
  std::mt19937_64 rng_;
};

}  // namespace witt
