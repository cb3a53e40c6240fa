#include "witt/bialgebra.hpp"

#include "witt/render.hpp"
#include "witt/sample.hpp"

namespace witt {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kTriangularCoboundary: return "triangular-coboundary";
    case Verdict::kCoboundaryNotTriangular: return "coboundary-not-triangular";
    case Verdict::kNotCoboundaryCandidate: return "not-coboundary-candidate";
  }
  return "unknown";
}

Tensor2 cobracket(const RMatrix& r, const WittElement& x) {
  return act(x, r.value);
}

Tensor3 cybe(const RMatrix& r) {
  const int n = r.rank();
  Tensor3 out(n);
  const auto terms = r.value.decomposables();
  std::vector<WittElement> a_elems, b_elems;
  a_elems.reserve(terms.size());
  b_elems.reserve(terms.size());
  for (const auto& [c, a, b] : terms) {
    a_elems.push_back(WittElement::monomial(a, n));
    b_elems.push_back(WittElement::monomial(b, n));
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = 0; j < terms.size(); ++j) {
      const Scalar c = std::get<0>(terms[i]) * std::get<0>(terms[j]);
      out += c * outer(bracket(a_elems[i], a_elems[j]), b_elems[i], b_elems[j]);
      out += c * outer(a_elems[i], bracket(b_elems[i], a_elems[j]), b_elems[j]);
      out += c * outer(a_elems[i], a_elems[j], bracket(b_elems[i], b_elems[j]));
    }
  }
  return out;
}

Tensor3 mybe_defect(const RMatrix& r, const WittElement& x) {
  return act(x, cybe(r));
}

Tensor3 cojacobi_defect(const RMatrix& r, const WittElement& x) {
  const int n = r.rank();
  // (1 (x) cobracket) applied to cobracket(x), slot by slot; second-slot
  // cobrackets repeat across grid entries, so they are cached per monomial.
  Tensor3 nested(n);
  std::map<Monomial, Tensor2> cache;
  for (const auto& [c, u, v] : cobracket(r, x).decomposables()) {
    auto it = cache.find(v);
    if (it == cache.end())
      it = cache.emplace(v, cobracket(r, WittElement::monomial(v, n))).first;
    nested += prepend(c, u, it->second);
  }
  Tensor3 out = nested;
  out += cycle(nested);
  out += cycle(cycle(nested));
  return out;
}

Tensor3 ng_taft_defect(const RMatrix& r, const WittElement& x) {
  const Tensor2 residue = sym_split(r.value).symmetric;
  if (!residue.is_zero())
    throw PremiseError("r is not alternating; symmetric residue: " +
                       render(residue));
  return cojacobi_defect(r, x) - mybe_defect(r, x);
}

Tensor2 cocycle_defect(const RMatrix& r, const WittElement& x,
                       const WittElement& y) {
  return cobracket(r, bracket(x, y)) - act(x, cobracket(r, y)) +
         act(y, cobracket(r, x));
}

RMatrix michaelis(const WittElement& a, const WittElement& b,
                  const Scalar& k) {
  if (k.is_zero()) throw PremiseError("eigenvalue k must be nonzero");
  if (!linearly_independent(a, b))
    throw PremiseError("a and b must be linearly independent");
  const WittElement lhs = bracket(a, b);
  if (!(lhs == k * b))
    throw PremiseError("bracket(a, b) != k * b; got " + render(lhs) +
                       " but expected " + render(k * b));
  return RMatrix{outer(a, b) - outer(b, a)};
}

ClassificationReport classify(const RMatrix& r, int sample_count,
                              const AlgebraConfig& cfg) {
  if (sample_count < 1) throw Error("sample count must be at least 1");
  ClassificationReport rep;
  rep.symmetric_residue = sym_split(r.value).symmetric;
  rep.alternating = rep.symmetric_residue.is_zero();
  rep.cybe_value = cybe(r);

  rep.cocycle_defects.samples = sample_count;
  rep.cojacobi_defects.samples = sample_count;
  Sampler sampler(cfg);
  for (int s = 0; s < sample_count; ++s) {
    const WittElement x = sampler.element();
    const WittElement y = sampler.element();
    if (rep.cocycle_defects.all_zero && !cocycle_defect(r, x, y).is_zero()) {
      rep.cocycle_defects.all_zero = false;
      rep.cocycle_defects.witness = "x=" + render(x) + ", y=" + render(y);
    }
    if (rep.cojacobi_defects.all_zero && !cojacobi_defect(r, x).is_zero()) {
      rep.cojacobi_defects.all_zero = false;
      rep.cojacobi_defects.witness = "x=" + render(x);
    }
  }

  if (!rep.alternating) {
    rep.verdict = Verdict::kNotCoboundaryCandidate;
  } else if (rep.cybe_value.is_zero()) {
    rep.verdict = Verdict::kTriangularCoboundary;
  } else {
    rep.verdict = Verdict::kCoboundaryNotTriangular;
  }
  return rep;
}

}  // namespace witt
