#pragma once

#include <optional>
#include <string>

#include "witt/tensor.hpp"

namespace witt {

/// Candidate structure tensor for a coboundary cobracket. Nothing is assumed
/// about it: alternating-ness is checked by classify, never taken on trust.
struct RMatrix {
  Tensor2 value;
  int rank() const { return value.rank(); }
};

enum class Verdict {
  kTriangularCoboundary,
  kCoboundaryNotTriangular,
  kNotCoboundaryCandidate,
};

std::string verdict_name(Verdict v);

/// Outcome of one sampled defect family: either every sample was exactly
/// zero, or the first offending input is kept verbatim.
struct SampledDefect {
  int samples = 0;
  bool all_zero = true;
  std::string witness;  // rendered input(s) of the first nonzero defect
};

struct ClassificationReport {
  bool alternating = false;
  Tensor2 symmetric_residue;
  Tensor3 cybe_value;
  Verdict verdict = Verdict::kNotCoboundaryCandidate;
  SampledDefect cocycle_defects;
  SampledDefect cojacobi_defects;
};

/// The cobracket x -> x . r induced by r.
Tensor2 cobracket(const RMatrix& r, const WittElement& x);

/// The Yang-Baxter element c(r) = [r12,r13] + [r12,r23] + [r13,r23],
/// evaluated through the three double sums over the decomposable terms of r.
Tensor3 cybe(const RMatrix& r);

/// x . c(r); zero for all x exactly when the induced cobracket satisfies the
/// co-Jacobi identity.
Tensor3 mybe_defect(const RMatrix& r, const WittElement& x);

/// (1 + cycle + cycle^2)(1 (x) cobracket)(cobracket) applied at x.
Tensor3 cojacobi_defect(const RMatrix& r, const WittElement& x);

/// cojacobi_defect minus mybe_defect; identically zero for alternating r.
/// Rejects non-alternating r, naming the symmetric residue.
Tensor3 ng_taft_defect(const RMatrix& r, const WittElement& x);

/// Cocycle defect of the induced cobracket on the pair (x, y); identically
/// zero for every r.
Tensor2 cocycle_defect(const RMatrix& r, const WittElement& x,
                       const WittElement& y);

/// Builds a (x) b - b (x) a from an eigenpair [a, b] = k b with k != 0 and
/// a, b independent; every premise is verified exactly.
RMatrix michaelis(const WittElement& a, const WittElement& b, const Scalar& k);

/// Full classification: exact alternating and Yang-Baxter checks plus seeded
/// sampling of the cocycle and co-Jacobi defects as corroboration.
ClassificationReport classify(const RMatrix& r, int sample_count,
                              const AlgebraConfig& cfg);

}  // namespace witt
