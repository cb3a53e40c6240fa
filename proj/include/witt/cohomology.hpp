#pragma once

#include <map>
#include <optional>
#include <vector>

#include "witt/tensor.hpp"

namespace witt {

/// A linear map into the twofold tensor module, sampled on a finite monomial
/// window and extended by linearity. Every window monomial has a value.
struct DerivationTable {
  int rank = 0;
  std::vector<Monomial> window;
  std::map<Monomial, Tensor2> values;

  const Tensor2& value(const Monomial& m) const;
};

/// The map u -> u . v restricted to the window.
DerivationTable inner_from(const Tensor2& v, const std::vector<Monomial>& window);

/// D([u,w]) - u . D(w) + w . D(u). The bracket of the two window monomials
/// must itself stay inside the window.
Tensor2 derivation_defect(const DerivationTable& D, const Monomial& u,
                          const Monomial& w);

/// Homogeneous components: the component of degree z sends a monomial of
/// degree y to the degree-(y+z) part of its value. Finitely many, summing
/// back to the table.
std::map<LatticePoint, DerivationTable> homog_decompose(const DerivationTable& D);

/// Recovers the inner generator of a map on the torus basis with homogeneous
/// values of the given nonzero degree: w = x_i^{-1} values[i] for the first
/// usable basis direction, cross-checked against every other direction.
/// values[i] is the image of the i-th torus basis vector.
Tensor2 solve_inner(const std::vector<Tensor2>& torus_values,
                    const LatticePoint& degree);

/// An element whose action on the nonzero tensor is nonzero. The returned
/// witness is always verified by direct action before being handed back.
WittElement annihilator_witness(const Tensor3& c, const AlgebraConfig& cfg);

/// The twofold analogue, used by the alternating reduction.
WittElement annihilator_witness(const Tensor2& c, const AlgebraConfig& cfg);

/// Empty when r is alternating; otherwise an element a whose action on r has
/// a nonzero symmetric part, verified before return.
std::optional<WittElement> alternating_witness(const Tensor2& r,
                                               const AlgebraConfig& cfg);

}  // namespace witt
