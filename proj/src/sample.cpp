#include "witt/sample.hpp"

namespace witt {

Sampler::Sampler(const AlgebraConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
  cfg_.validate();
}

// Plain remainder keeps the stream identical across standard libraries;
// the bias at these tiny spans is irrelevant for test sampling.
int Sampler::int_in(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng_() % span);
}

Scalar Sampler::scalar() {
  const int w = cfg_.sample_window;
  const int num = int_in(-w, w);
  const int den = int_in(1, w < 2 ? w : 2);
  return Scalar(num, den);
}

Scalar Sampler::nonzero_scalar() {
  for (;;) {
    Scalar c = scalar();
    if (!c.is_zero()) return c;
  }
}

LatticePoint Sampler::point() {
  std::vector<Scalar> v;
  v.reserve(cfg_.rank);
  for (int i = 0; i < cfg_.rank; ++i) v.push_back(scalar());
  return LatticePoint(std::move(v));
}

LatticePoint Sampler::nonzero_point() {
  for (;;) {
    LatticePoint p = point();
    if (!p.is_zero()) return p;
  }
}

TorusVector Sampler::torus() {
  std::vector<Scalar> v;
  v.reserve(cfg_.rank);
  for (int i = 0; i < cfg_.rank; ++i) v.push_back(scalar());
  return TorusVector(std::move(v));
}

TorusVector Sampler::nonzero_torus() {
  for (;;) {
    TorusVector d = torus();
    if (!d.is_zero()) return d;
  }
}

Monomial Sampler::monomial() {
  return Monomial{point(), int_in(0, cfg_.rank - 1)};
}

WittElement Sampler::element() {
  WittElement u(cfg_.rank);
  const int terms = int_in(1, 3);
  for (int i = 0; i < terms; ++i) u.add_term(point(), nonzero_torus());
  return u;
}

WittElement Sampler::nonzero_element() {
  for (;;) {
    WittElement u = element();
    if (!u.is_zero()) return u;
  }
}

Tensor2 Sampler::tensor2() {
  Tensor2 t(cfg_.rank);
  const int pieces = int_in(1, 2);
  for (int i = 0; i < pieces; ++i) {
    const WittElement u = WittElement::monomial(point(), nonzero_torus());
    const WittElement w = WittElement::monomial(point(), nonzero_torus());
    t += nonzero_scalar() * outer(u, w);
  }
  return t;
}

Tensor3 Sampler::tensor3() {
  Tensor3 t(cfg_.rank);
  const int pieces = int_in(1, 2);
  for (int i = 0; i < pieces; ++i) {
    const WittElement u = WittElement::monomial(point(), nonzero_torus());
    const WittElement v = WittElement::monomial(point(), nonzero_torus());
    const WittElement w = WittElement::monomial(point(), nonzero_torus());
    t += nonzero_scalar() * outer(u, v, w);
  }
  return t;
}

Tensor2 Sampler::alternating_tensor2() {
  for (;;) {
    Tensor2 t(cfg_.rank);
    const int pieces = int_in(1, 2);
    for (int i = 0; i < pieces; ++i) {
      const WittElement u = WittElement::monomial(point(), nonzero_torus());
      const WittElement w = WittElement::monomial(point(), nonzero_torus());
      t += outer(u, w) - outer(w, u);
    }
    if (!t.is_zero()) return t;
  }
}

Tensor2 Sampler::non_alternating_tensor2(bool degree_zero_only) {
  Tensor2 t(cfg_.rank);
  if (degree_zero_only) {
    const LatticePoint x = point();
    const WittElement u = WittElement::monomial(x, nonzero_torus());
    const WittElement w = WittElement::monomial(-x, nonzero_torus());
    t = outer(u, w) + outer(w, u);  // symmetric, degree zero, nonzero
    if (int_in(0, 1)) {
      const LatticePoint y = point();
      const WittElement p = WittElement::monomial(y, nonzero_torus());
      const WittElement q = WittElement::monomial(-y, nonzero_torus());
      t = t + (outer(p, q) - outer(q, p));
    }
  } else {
    const WittElement u = nonzero_element();
    t = outer(u, u);  // symmetric part is u (x) u itself
    if (int_in(0, 1)) t = t + alternating_tensor2();
  }
  return t;
}

Tensor3 Sampler::nonzero_tensor3(bool degree_zero_only) {
  for (;;) {
    Tensor3 t(cfg_.rank);
    const int pieces = int_in(1, 2);
    for (int i = 0; i < pieces; ++i) {
      if (degree_zero_only) {
        const LatticePoint x = point();
        const LatticePoint y = point();
        const WittElement u = WittElement::monomial(x, nonzero_torus());
        const WittElement v = WittElement::monomial(y, nonzero_torus());
        const WittElement w = WittElement::monomial(-(x + y), nonzero_torus());
        t = t + (nonzero_scalar() * outer(u, v, w));
      } else {
        t = t + tensor3();
      }
    }
    if (!t.is_zero()) return t;
  }
}

Sampler::Eigenpair Sampler::eigenpair() {
  for (;;) {
    const TorusVector d = nonzero_torus();
    const LatticePoint x = nonzero_point();
    const Scalar k = pairing(d, x);
    if (k.is_zero()) continue;
    const WittElement b = WittElement::monomial(x, nonzero_torus());
    WittElement a = WittElement::monomial(LatticePoint(cfg_.rank), d);
    // Shifting by a multiple of b keeps the eigenrelation and independence.
    if (int_in(0, 1)) a = a + (scalar() * b);
    return Eigenpair{a, b, k};
  }
}

}  // namespace witt
