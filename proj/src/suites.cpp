#include "witt/suites.hpp"

#include "witt/cohomology.hpp"
#include "witt/render.hpp"
#include "witt/sample.hpp"

namespace witt {

namespace {

constexpr std::size_t kMaxRecordedFailures = 5;

void note_failure(SuiteReport* rep, const std::string& detail) {
  if (rep->failures.size() < kMaxRecordedFailures) rep->failures.push_back(detail);
}

void check(SuiteReport* rep, bool ok, const std::string& detail) {
  ++rep->checks;
  if (!ok) note_failure(rep, detail);
}

SuiteReport suite_jacobi(const AlgebraConfig& cfg, int samples) {
  SuiteReport rep{"jacobi", cfg.rank, cfg.seed, samples, 0, {}};
  Sampler s(cfg);
  for (int i = 0; i < samples; ++i) {
    const WittElement u = s.element();
    const WittElement v = s.element();
    const WittElement w = s.element();
    check(&rep, jacobi_defect(u, v, w).is_zero(),
          "jacobi: u=" + render(u) + ", v=" + render(v) + ", w=" + render(w));
    check(&rep, bracket(u, u).is_zero(), "alternation: u=" + render(u));
    check(&rep, bracket(u, v) == -bracket(v, u),
          "antisymmetry: u=" + render(u) + ", v=" + render(v));
    check(&rep, bracket(u + v, w) == bracket(u, w) + bracket(v, w),
          "bilinearity: u=" + render(u) + ", v=" + render(v) + ", w=" + render(w));

    const TorusVector d = s.torus();
    const LatticePoint x = s.point();
    const TorusVector dp = s.nonzero_torus();
    const WittElement torus_elem = WittElement::monomial(LatticePoint(cfg.rank), d);
    const WittElement mono = WittElement::monomial(x, dp);
    check(&rep, bracket(torus_elem, mono) == pairing(d, x) * mono,
          "torus action: d=" + render(d) + ", x=" + render(x));
  }
  return rep;
}

SuiteReport suite_module_law(const AlgebraConfig& cfg, int samples) {
  SuiteReport rep{"module-law", cfg.rank, cfg.seed, samples, 0, {}};
  Sampler s(cfg);
  for (int i = 0; i < samples; ++i) {
    const WittElement a = s.element();
    const WittElement b = s.element();
    const Tensor2 t2 = s.tensor2();
    const Tensor3 t3 = s.tensor3();
    check(&rep, act(bracket(a, b), t2) == act(a, act(b, t2)) - act(b, act(a, t2)),
          "module law (2): a=" + render(a) + ", b=" + render(b) +
              ", t=" + render(t2));
    check(&rep, act(bracket(a, b), t3) == act(a, act(b, t3)) - act(b, act(a, t3)),
          "module law (3): a=" + render(a) + ", b=" + render(b) +
              ", t=" + render(t3));
    check(&rep, twist(act(a, t2)) == act(a, twist(t2)),
          "twist equivariance: a=" + render(a) + ", t=" + render(t2));
    check(&rep, cycle(act(a, t3)) == act(a, cycle(t3)),
          "cycle equivariance: a=" + render(a) + ", t=" + render(t3));

    // Homogeneous action shifts each graded piece by the actor's degree.
    const Monomial am = s.monomial();
    const WittElement ah = WittElement::monomial(am, cfg.rank);
    const Tensor2 moved = act(ah, t2);
    bool shift_ok = true;
    for (const auto& [deg, part] : grade2(moved)) {
      bool matched = false;
      for (const auto& [src, unused] : grade2(t2))
        if (src + am.point == deg) matched = true;
      if (!matched) shift_ok = false;
    }
    check(&rep, shift_ok, "degree shift: a=" + render(ah) + ", t=" + render(t2));
  }
  return rep;
}

SuiteReport suite_ng_taft(const AlgebraConfig& cfg, int samples) {
  SuiteReport rep{"ng-taft", cfg.rank, cfg.seed, samples, 0, {}};
  Sampler s(cfg);
  for (int i = 0; i < samples; ++i) {
    const RMatrix r{s.alternating_tensor2()};
    const WittElement x = s.element();
    check(&rep, ng_taft_defect(r, x).is_zero(),
          "co-Jacobi vs Yang-Baxter action: r=" + render(r.value) +
              ", x=" + render(x));
    const Tensor2 dx = cobracket(r, x);
    check(&rep, sym_split(dx).symmetric.is_zero(),
          "cobracket image alternating: r=" + render(r.value) + ", x=" + render(x));
    check(&rep, twist(dx) == -dx,
          "anti-cocommutativity: r=" + render(r.value) + ", x=" + render(x));
  }
  return rep;
}

SuiteReport suite_cocycle(const AlgebraConfig& cfg, int samples) {
  SuiteReport rep{"cocycle", cfg.rank, cfg.seed, samples, 0, {}};
  Sampler s(cfg);
  for (int i = 0; i < samples; ++i) {
    // Alternate alternating and unconstrained r; the identity needs neither.
    const RMatrix r{i % 2 == 0 ? s.tensor2() : s.alternating_tensor2()};
    const WittElement x = s.element();
    const WittElement y = s.element();
    check(&rep, cocycle_defect(r, x, y).is_zero(),
          "cocycle: r=" + render(r.value) + ", x=" + render(x) + ", y=" + render(y));
  }
  return rep;
}

SuiteReport suite_michaelis(const AlgebraConfig& cfg, int samples) {
  SuiteReport rep{"michaelis", cfg.rank, cfg.seed, samples, 0, {}};
  Sampler s(cfg);
  for (int i = 0; i < samples; ++i) {
    const auto [a, b, k] = s.eigenpair();
    const std::string inputs =
        "a=" + render(a) + ", b=" + render(b) + ", k=" + render(k);
    RMatrix r;
    try {
      r = michaelis(a, b, k);
    } catch (const PremiseError& e) {
      check(&rep, false, "constructor rejected " + inputs + ": " + e.what());
      continue;
    }
    check(&rep, cybe(r).is_zero(), "cybe: " + inputs);
    check(&rep, cobracket(r, a) == k * r.value, "cobracket at a: " + inputs);
    check(&rep, cobracket(r, b).is_zero(), "cobracket at b: " + inputs);
    const auto verdictv = classify(r, 5, cfg).verdict;
    check(&rep, verdictv == Verdict::kTriangularCoboundary, "verdict: " + inputs);
  }
  return rep;
}

SuiteReport suite_inner_roundtrip(const AlgebraConfig& cfg, int samples) {
  SuiteReport rep{"inner-roundtrip", cfg.rank, cfg.seed, samples, 0, {}};
  Sampler s(cfg);
  const int n = cfg.rank;
  for (int i = 0; i < samples; ++i) {
    // Homogeneous generator of nonzero degree.
    const LatticePoint deg = s.nonzero_point();
    Tensor2 v(n);
    const int pieces = s.int_in(1, 2);
    for (int p = 0; p < pieces; ++p) {
      const LatticePoint x = s.point();
      const WittElement u = WittElement::monomial(x, s.nonzero_torus());
      const WittElement w = WittElement::monomial(deg - x, s.nonzero_torus());
      v = v + outer(u, w);
    }
    std::vector<Tensor2> torus_values;
    for (int j = 0; j < n; ++j) {
      const WittElement dj =
          WittElement::monomial(LatticePoint(n), TorusVector::basis(n, j));
      torus_values.push_back(act(dj, v));
    }
    const std::string inputs = "v=" + render(v) + ", degree=" + render(deg);
    try {
      const Tensor2 w = solve_inner(torus_values, deg);
      check(&rep, w == v, "roundtrip: " + inputs);
      for (int j = 0; j < n; ++j) {
        if (deg[j].is_zero()) continue;
        check(&rep, deg[j].inverse() * torus_values[j] == w,
              "uniqueness at direction " + std::to_string(j + 1) + ": " + inputs);
      }
    } catch (const Error& e) {
      check(&rep, false, "solver rejected " + inputs + ": " + e.what());
    }
  }

  // Inner tables have zero defect on every window-covered pair.
  std::vector<Monomial> window;
  for (int a = -1; a <= 1; ++a) {
    for (int j = 0; j < n; ++j) {
      LatticePoint x(n);
      if (a != 0) {
        x = a > 0 ? LatticePoint::basis(n, 0) : -LatticePoint::basis(n, 0);
      }
      window.push_back(Monomial{x, j});
    }
  }
  const Tensor2 gen = Sampler(cfg).tensor2();
  const DerivationTable table = inner_from(gen, window);
  for (const auto& u : window) {
    for (const auto& w : window) {
      bool covered = true;
      for (const auto& [c, m] :
           monomial_terms(bracket(WittElement::monomial(u, n),
                                  WittElement::monomial(w, n))))
        if (!table.values.count(m)) covered = false;
      if (!covered) continue;
      check(&rep, derivation_defect(table, u, w).is_zero(),
            "inner defect: v=" + render(gen) + ", u=" + render(u, n) +
                ", w=" + render(w, n));
    }
  }
  return rep;
}

SuiteReport suite_witness(const AlgebraConfig& cfg, int samples) {
  SuiteReport rep{"witness", cfg.rank, cfg.seed, samples, 0, {}};
  Sampler s(cfg);
  for (int i = 0; i < samples; ++i) {
    const Tensor3 c = s.nonzero_tensor3(i % 2 == 0);
    try {
      const WittElement a = annihilator_witness(c, cfg);
      check(&rep, !act(a, c).is_zero(), "threefold witness: c=" + render(c));
    } catch (const Error& e) {
      check(&rep, false,
            std::string("threefold witness search failed: c=") + render(c) +
                ": " + e.what());
    }
    const Tensor2 r = s.non_alternating_tensor2(i % 2 == 1);
    try {
      const auto a = alternating_witness(r, cfg);
      check(&rep, a.has_value() && !sym_split(act(*a, r)).symmetric.is_zero(),
            "twofold witness: r=" + render(r));
    } catch (const Error& e) {
      check(&rep, false,
            std::string("twofold witness search failed: r=") + render(r) +
                ": " + e.what());
    }
  }
  // Trivial verdicts.
  check(&rep, !alternating_witness(Sampler(cfg).alternating_tensor2(), cfg).has_value(),
        "alternating verdict");
  try {
    annihilator_witness(Tensor3(cfg.rank), cfg);
    check(&rep, false, "zero tensor must have no witness");
  } catch (const NoWitnessError&) {
    check(&rep, true, "");
  }
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "jacobi",     "module-law",      "ng-taft", "cocycle",
      "michaelis",  "inner-roundtrip", "witness"};
  return names;
}

SuiteReport run_suite(const std::string& name, const AlgebraConfig& cfg,
                      int samples) {
  cfg.validate();
  if (samples < 1) throw Error("sample count must be at least 1");
  if (name == "jacobi") return suite_jacobi(cfg, samples);
  if (name == "module-law") return suite_module_law(cfg, samples);
  if (name == "ng-taft") return suite_ng_taft(cfg, samples);
  if (name == "cocycle") return suite_cocycle(cfg, samples);
  if (name == "michaelis") return suite_michaelis(cfg, samples);
  if (name == "inner-roundtrip") return suite_inner_roundtrip(cfg, samples);
  if (name == "witness") return suite_witness(cfg, samples);
  throw Error("unknown suite '" + name + "'");
}

}  // namespace witt
