// Acceptance suite: one line per criterion, zero tolerance throughout.
// Exit status is the number of failed criteria.

#include <cstdio>
#include <functional>
#include <string>

#include "cli_support.hpp"
#include "witt/cohomology.hpp"
#include "witt/parse.hpp"
#include "witt/render.hpp"
#include "witt/sample.hpp"
#include "witt/suites.hpp"

using namespace witt;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool ok,
            const std::string& detail = "") {
  std::printf("%s  criterion %d: %s%s\n", ok ? "PASS" : "FAIL", number,
              label.c_str(),
              detail.empty() ? "" : ("  [" + detail + "]").c_str());
  if (!ok) ++failures;
}

AlgebraConfig cfg_for(int rank) {
  AlgebraConfig cfg;
  cfg.rank = rank;
  cfg.seed = 1000 + static_cast<std::uint64_t>(rank);
  cfg.sample_window = 3;
  cfg.escalation_cap = 8;
  return cfg;
}

bool criterion_lie_axioms(std::string* detail) {
  for (int rank = 1; rank <= 3; ++rank) {
    Sampler s(cfg_for(rank));
    for (int i = 0; i < 500; ++i) {
      const WittElement u = s.element(), v = s.element(), w = s.element();
      if (!jacobi_defect(u, v, w).is_zero() || !bracket(u, u).is_zero() ||
          !(bracket(u, v) == -bracket(v, u))) {
        *detail = "rank " + std::to_string(rank) + ": u=" + render(u) +
                  ", v=" + render(v) + ", w=" + render(w);
        return false;
      }
    }
    for (int i = 0; i < 200; ++i) {
      const TorusVector d = s.torus();
      const LatticePoint x = s.point();
      const WittElement m = WittElement::monomial(x, s.nonzero_torus());
      const WittElement de = WittElement::monomial(LatticePoint(rank), d);
      if (!(bracket(de, m) == pairing(d, x) * m)) {
        *detail = "torus relation at rank " + std::to_string(rank);
        return false;
      }
    }
  }
  return true;
}

bool criterion_module_law(std::string* detail) {
  for (int rank = 1; rank <= 3; ++rank) {
    Sampler s(cfg_for(rank));
    for (int i = 0; i < 200; ++i) {
      const WittElement a = s.element(), b = s.element();
      const Tensor2 t2 = s.tensor2();
      const Tensor3 t3 = s.tensor3();
      if (!(act(bracket(a, b), t2) == act(a, act(b, t2)) - act(b, act(a, t2))) ||
          !(act(bracket(a, b), t3) == act(a, act(b, t3)) - act(b, act(a, t3)))) {
        *detail = "rank " + std::to_string(rank) + ": a=" + render(a) +
                  ", b=" + render(b);
        return false;
      }
      // action-degree bookkeeping for a homogeneous actor
      const Monomial am = s.monomial();
      const WittElement ah = WittElement::monomial(am, rank);
      const auto before = grade2(t2);
      for (const auto& [deg, part] : grade2(act(ah, t2))) {
        bool matched = false;
        for (const auto& [src, unused] : before)
          if (src + am.point == deg) matched = true;
        if (!matched) {
          *detail = "degree shift at rank " + std::to_string(rank);
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion_ng_taft(std::string* detail) {
  for (int rank = 1; rank <= 3; ++rank) {
    Sampler s(cfg_for(rank));
    for (int i = 0; i < 200; ++i) {
      const RMatrix r{s.alternating_tensor2()};
      const WittElement x = s.element();
      if (!(cojacobi_defect(r, x) - act(x, cybe(r))).is_zero()) {
        *detail = "rank " + std::to_string(rank) + ": r=" + render(r.value) +
                  ", x=" + render(x);
        return false;
      }
    }
  }
  return true;
}

bool criterion_michaelis(std::string* detail) {
  for (int rank = 1; rank <= 3; ++rank) {
    const AlgebraConfig cfg = cfg_for(rank);
    Sampler s(cfg);
    for (int i = 0; i < 50; ++i) {
      const auto [a, b, k] = s.eigenpair();
      const std::string inputs = "rank " + std::to_string(rank) +
                                 ": a=" + render(a) + ", b=" + render(b) +
                                 ", k=" + render(k);
      try {
        const RMatrix r = michaelis(a, b, k);
        if (!cybe(r).is_zero() || !(cobracket(r, a) == k * r.value) ||
            !cobracket(r, b).is_zero() ||
            classify(r, 3, cfg).verdict != Verdict::kTriangularCoboundary) {
          *detail = inputs;
          return false;
        }
      } catch (const Error& e) {
        *detail = inputs + ": " + e.what();
        return false;
      }
    }
  }
  return true;
}

bool criterion_cocycle(std::string* detail) {
  for (int rank = 1; rank <= 3; ++rank) {
    Sampler s(cfg_for(rank));
    for (int i = 0; i < 200; ++i) {
      const RMatrix r{i % 2 == 0 ? s.tensor2() : s.alternating_tensor2()};
      const WittElement x = s.element(), y = s.element();
      if (!cocycle_defect(r, x, y).is_zero()) {
        *detail = "rank " + std::to_string(rank) + ": r=" + render(r.value) +
                  ", x=" + render(x) + ", y=" + render(y);
        return false;
      }
    }
  }
  return true;
}

bool criterion_anticocommutativity(std::string* detail) {
  for (int rank = 1; rank <= 3; ++rank) {
    Sampler s(cfg_for(rank));
    for (int i = 0; i < 200; ++i) {
      const RMatrix r{s.alternating_tensor2()};
      const WittElement x = s.element();
      const Tensor2 dx = cobracket(r, x);
      if (!(twist(dx) == -dx)) {
        *detail = "rank " + std::to_string(rank) + ": r=" + render(r.value) +
                  ", x=" + render(x);
        return false;
      }
    }
  }
  return true;
}

bool criterion_inner_solver(std::string* detail) {
  for (int rank = 1; rank <= 3; ++rank) {
    Sampler s(cfg_for(rank));
    for (int i = 0; i < 100; ++i) {
      const LatticePoint deg = s.nonzero_point();
      Tensor2 v(rank);
      const int pieces = s.int_in(1, 2);
      for (int p = 0; p < pieces; ++p) {
        const LatticePoint x = s.point();
        v = v + outer(WittElement::monomial(x, s.nonzero_torus()),
                      WittElement::monomial(deg - x, s.nonzero_torus()));
      }
      std::vector<Tensor2> values;
      for (int j = 0; j < rank; ++j)
        values.push_back(act(
            WittElement::monomial(LatticePoint(rank), TorusVector::basis(rank, j)),
            v));
      try {
        const Tensor2 w = solve_inner(values, deg);
        if (!(w == v)) {
          *detail = "roundtrip at rank " + std::to_string(rank) +
                    ": v=" + render(v);
          return false;
        }
        for (int j = 0; j < rank; ++j) {
          if (deg[j].is_zero()) continue;
          if (!(deg[j].inverse() * values[j] == w)) {
            *detail = "uniqueness at rank " + std::to_string(rank);
            return false;
          }
        }
        // any usable torus combination solves to the same generator
        const TorusVector probe = s.nonzero_torus();
        const Scalar factor = pairing(probe, deg);
        if (!factor.is_zero()) {
          Tensor2 combined(rank);
          for (int j = 0; j < rank; ++j) combined += probe[j] * values[j];
          if (!(factor.inverse() * combined == w)) {
            *detail = "combination uniqueness at rank " + std::to_string(rank);
            return false;
          }
        }
      } catch (const Error& e) {
        *detail = std::string("solver error: ") + e.what();
        return false;
      }
    }
  }
  return true;
}

bool criterion_witnesses(std::string* detail) {
  for (int rank = 1; rank <= 3; ++rank) {
    const AlgebraConfig cfg = cfg_for(rank);
    Sampler s(cfg);
    for (int i = 0; i < 100; ++i) {
      const Tensor3 c = s.nonzero_tensor3(i % 2 == 0);
      try {
        const WittElement a = annihilator_witness(c, cfg);
        if (act(a, c).is_zero()) {
          *detail = "unverified threefold witness at rank " + std::to_string(rank);
          return false;
        }
      } catch (const Error& e) {
        *detail = "threefold search at rank " + std::to_string(rank) +
                  ": c=" + render(c) + ": " + e.what();
        return false;
      }
      const Tensor2 t = s.non_alternating_tensor2(i % 2 == 1);
      try {
        const auto w = alternating_witness(t, cfg);
        if (!w.has_value() || sym_split(act(*w, t)).symmetric.is_zero()) {
          *detail = "unverified twofold witness at rank " + std::to_string(rank);
          return false;
        }
      } catch (const Error& e) {
        *detail = "twofold search at rank " + std::to_string(rank) +
                  ": r=" + render(t) + ": " + e.what();
        return false;
      }
    }
    // trivial inputs keep their verdicts
    try {
      annihilator_witness(Tensor3(rank), cfg);
      *detail = "zero tensor accepted";
      return false;
    } catch (const NoWitnessError&) {
    }
    if (alternating_witness(Sampler(cfg).alternating_tensor2(), cfg).has_value()) {
      *detail = "alternating tensor misjudged";
      return false;
    }
  }
  return true;
}

bool criterion_cli(std::string* detail) {
  using cli_support::load_golden_corpus;
  using cli_support::quote;
  using cli_support::run_cli;

  const auto corpus = load_golden_corpus();
  if (corpus.size() != 30) {
    *detail = "expected 30 golden files, found " + std::to_string(corpus.size());
    return false;
  }
  for (const auto& g : corpus) {
    const std::string flags = g.kind == "elem" ? "--element " : "";
    const auto r = run_cli("normalize --rank " + std::to_string(g.rank) + " " +
                           flags + "-- " + quote(g.content));
    if (r.exit_code != 0 || r.out != g.content + "\n") {
      *detail = "round-trip failed for " + g.name;
      return false;
    }
  }

  const std::string mich = "'d[1] (*) t[1] d[1] - t[1] d[1] (*) d[1]'";
  if (run_cli("classify --rank 1 --samples 5 " + mich).exit_code != 0) {
    *detail = "classify exit code for a triangular tensor";
    return false;
  }
  if (run_cli("classify --rank 1 --samples 5 'd[1] (*) d[1]'").exit_code != 2) {
    *detail = "classify exit code for a symmetric tensor";
    return false;
  }
  if (run_cli("classify --rank 1 'not a tensor'").exit_code != 1) {
    *detail = "classify exit code for a parse error";
    return false;
  }

  const auto a = run_cli("classify --rank 1 --seed 42 --samples 10 " + mich);
  const auto b = run_cli("classify --rank 1 --seed 42 --samples 10 " + mich);
  if (a.out != b.out || a.out.empty()) {
    *detail = "classify reports are not reproducible";
    return false;
  }
  const auto v1 = run_cli("verify --rank 2 --seed 9 --samples 15 module-law");
  const auto v2 = run_cli("verify --rank 2 --seed 9 --samples 15 module-law");
  if (v1.exit_code != 0 || v1.out != v2.out) {
    *detail = "verify reports are not reproducible";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string label;
    std::function<bool(std::string*)> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "Lie axioms: Jacobi, antisymmetry, torus relation", criterion_lie_axioms},
      {2, "module law and degree bookkeeping", criterion_module_law},
      {3, "co-Jacobi defect equals the acted Yang-Baxter element",
       criterion_ng_taft},
      {4, "eigenpair tensors: closed forms and triangular verdict",
       criterion_michaelis},
      {5, "cocycle defect vanishes for every r", criterion_cocycle},
      {6, "anti-cocommutativity of induced cobrackets",
       criterion_anticocommutativity},
      {7, "inner solver round-trip and uniqueness", criterion_inner_solver},
      {8, "witness engines verify within the default cap", criterion_witnesses},
      {9, "CLI golden corpus, exit codes, reproducibility", criterion_cli},
  };
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.fn(&detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    report(c.number, c.label, ok, detail);
  }
  return failures;
}
