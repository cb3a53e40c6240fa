#include <doctest.h>

#include "witt/cohomology.hpp"
#include "witt/parse.hpp"
#include "witt/render.hpp"
#include "witt/sample.hpp"

using namespace witt;

namespace {

std::vector<Monomial> small_window(int rank) {
  // integer points with coordinates in {-1, 0, 1}, all torus directions
  std::vector<LatticePoint> pts = {LatticePoint(rank)};
  for (int i = 0; i < rank; ++i) {
    std::vector<LatticePoint> next;
    for (const auto& p : pts)
      for (int a = -1; a <= 1; ++a) {
        LatticePoint q = p;
        if (a == 1) q = q + LatticePoint::basis(rank, i);
        if (a == -1) q = q - LatticePoint::basis(rank, i);
        next.push_back(q);
      }
    pts = next;
  }
  std::vector<Monomial> window;
  for (const auto& p : pts)
    for (int j = 0; j < rank; ++j) window.push_back(Monomial{p, j});
  return window;
}

}  // namespace

TEST_CASE("inner tables are derivations on covered pairs") {
  const auto window = small_window(2);
  const DerivationTable zero_table = inner_from(Tensor2(2), window);
  for (const auto& [m, value] : zero_table.values) CHECK(value.is_zero());

  Sampler s(AlgebraConfig{2, 90, 1, 8});
  const Tensor2 v = s.tensor2();
  const DerivationTable table = inner_from(v, window);
  int covered = 0;
  for (const auto& u : window) {
    for (const auto& w : window) {
      bool in_window = true;
      for (const auto& [c, m] :
           monomial_terms(bracket(WittElement::monomial(u, 2),
                                  WittElement::monomial(w, 2))))
        if (!table.values.count(m)) in_window = false;
      if (!in_window) continue;
      ++covered;
      CHECK(derivation_defect(table, u, w).is_zero());
      CHECK(derivation_defect(table, u, u).is_zero());
    }
  }
  CHECK(covered > 0);
}

TEST_CASE("torus-window inner tables scale a homogeneous generator") {
  // generator of degree e_1: the value at d_i is its pairing with e_1 times v
  const LatticePoint deg = LatticePoint::basis(2, 0);
  const Tensor2 v =
      outer(WittElement::monomial(deg, TorusVector::basis(2, 0)),
            WittElement::monomial(LatticePoint(2), TorusVector::basis(2, 1)));
  std::vector<Monomial> torus_window;
  for (int i = 0; i < 2; ++i)
    torus_window.push_back(Monomial{LatticePoint(2), i});
  const DerivationTable table = inner_from(v, torus_window);
  for (int i = 0; i < 2; ++i) {
    const Scalar factor = pairing(TorusVector::basis(2, i), deg);
    CHECK(table.value(torus_window[i]) == factor * v);
  }
}

TEST_CASE("derivation tables serialize and parse back") {
  const auto window = small_window(2);
  Sampler s(AlgebraConfig{2, 96, 1, 8});
  const DerivationTable table = inner_from(s.tensor2(), window);
  const std::string text = render(table);
  const DerivationTable back = parse_derivation_table(text, 2);
  CHECK(back.window == table.window);
  CHECK(back.values == table.values);
  CHECK(render(back) == text);

  CHECK_THROWS_AS(parse_derivation_table("d[1,0] missing-sep", 2), ParseError);
  CHECK_THROWS_AS(parse_derivation_table("d[1,0] + d[0,1] : 0", 2), ParseError);
  CHECK_THROWS_AS(parse_derivation_table("d[1,0] : 0\nd[1,0] : 0", 2),
                  ParseError);
}

TEST_CASE("a perturbed table fails the defect check somewhere") {
  const auto window = small_window(1);
  Sampler s(AlgebraConfig{1, 91, 1, 8});
  DerivationTable table = inner_from(s.tensor2(), window);
  // bump one value by a nonzero tensor
  const Monomial target = window[1];
  table.values[target] =
      table.values[target] +
      outer(WittElement::monomial(LatticePoint(1), TorusVector::basis(1, 0)),
            WittElement::monomial(LatticePoint(1), TorusVector::basis(1, 0)));
  bool broke = false;
  for (const auto& u : window) {
    for (const auto& w : window) {
      bool in_window = true;
      for (const auto& [c, m] :
           monomial_terms(bracket(WittElement::monomial(u, 1),
                                  WittElement::monomial(w, 1))))
        if (!table.values.count(m)) in_window = false;
      if (!in_window) continue;
      if (!derivation_defect(table, u, w).is_zero()) broke = true;
    }
  }
  CHECK(broke);
}

TEST_CASE("defect coverage errors name the missing monomials") {
  // window too small for the bracket of its own members
  std::vector<Monomial> window = {
      Monomial{LatticePoint::basis(1, 0), 0},
      Monomial{LatticePoint::basis(1, 0) + LatticePoint::basis(1, 0), 0}};
  const DerivationTable table = inner_from(Tensor2(1), window);
  CHECK_THROWS_AS(derivation_defect(table, window[0], window[1]),
                  CoverageError);
  try {
    derivation_defect(table, window[0], window[1]);
  } catch (const CoverageError& e) {
    CHECK(std::string(e.what()).find("t[3] d[1]") != std::string::npos);
  }
}

TEST_CASE("homogeneous decomposition of derivation tables") {
  const auto window = small_window(2);
  CHECK(homog_decompose(inner_from(Tensor2(2), window)).empty());

  // homogeneous generator: single component at its degree
  const LatticePoint deg = LatticePoint::basis(2, 0);
  const Tensor2 v =
      outer(WittElement::monomial(deg, TorusVector::basis(2, 0)),
            WittElement::monomial(LatticePoint(2), TorusVector::basis(2, 1)));
  const DerivationTable table = inner_from(v, window);
  const auto parts = homog_decompose(table);
  CHECK(parts.size() == 1);
  CHECK(parts.begin()->first == deg);

  // mixed generator: components sum back to the table and are homogeneous
  Sampler s(AlgebraConfig{2, 92, 1, 8});
  const Tensor2 mixed = s.tensor2() + v;
  const DerivationTable mixed_table = inner_from(mixed, window);
  const auto mixed_parts = homog_decompose(mixed_table);
  for (const auto& m : window) {
    Tensor2 sum(2);
    for (const auto& [shift, part] : mixed_parts) {
      const Tensor2& val = part.value(m);
      sum = sum + val;
      for (const auto& [d, g] : grade2(val)) CHECK(d == m.point + shift);
    }
    CHECK(sum == mixed_table.value(m));
  }

  // components of an inner table are inner for the graded parts
  for (const auto& [shift, part] : homog_decompose(mixed_table)) {
    const auto graded = grade2(mixed);
    const auto it = graded.find(shift);
    const Tensor2 piece = it == graded.end() ? Tensor2(2) : it->second;
    const DerivationTable expect = inner_from(piece, window);
    for (const auto& m : window) CHECK(part.value(m) == expect.value(m));
  }
}

TEST_CASE("inner generator recovery round-trips") {
  // v = t^{e_1} d_1 (x) d_2 at rank 2, degree e_1
  const LatticePoint deg = LatticePoint::basis(2, 0);
  const Tensor2 v =
      outer(WittElement::monomial(deg, TorusVector::basis(2, 0)),
            WittElement::monomial(LatticePoint(2), TorusVector::basis(2, 1)));
  std::vector<Tensor2> values;
  for (int i = 0; i < 2; ++i)
    values.push_back(act(WittElement::monomial(LatticePoint(2),
                                               TorusVector::basis(2, i)),
                         v));
  CHECK(solve_inner(values, deg) == v);

  Sampler s(AlgebraConfig{3, 93, 2, 8});
  for (int i = 0; i < 30; ++i) {
    const LatticePoint d = s.nonzero_point();
    const LatticePoint x = s.point();
    const Tensor2 gen =
        outer(WittElement::monomial(x, s.nonzero_torus()),
              WittElement::monomial(d - x, s.nonzero_torus()));
    std::vector<Tensor2> torus_values;
    for (int j = 0; j < 3; ++j)
      torus_values.push_back(
          act(WittElement::monomial(LatticePoint(3), TorusVector::basis(3, j)),
              gen));
    const Tensor2 w = solve_inner(torus_values, d);
    CHECK(w == gen);
    // uniqueness: every usable direction solves to the same generator
    for (int j = 0; j < 3; ++j) {
      if (d[j].is_zero()) continue;
      CHECK(d[j].inverse() * torus_values[j] == w);
    }
    // and so does any usable torus combination, by linearity
    for (int probe = 0; probe < 3; ++probe) {
      const TorusVector dp = s.nonzero_torus();
      const Scalar factor = pairing(dp, d);
      if (factor.is_zero()) continue;
      Tensor2 combined(3);
      for (int j = 0; j < 3; ++j) combined += dp[j] * torus_values[j];
      CHECK(factor.inverse() * combined == w);
    }
  }
}

TEST_CASE("inner solving rejects bad data") {
  const LatticePoint zero(2);
  CHECK_THROWS_AS(solve_inner({Tensor2(2), Tensor2(2)}, zero), DegreeError);
  CHECK_THROWS_AS(solve_inner({Tensor2(2)}, LatticePoint::basis(2, 0)),
                  DimensionError);

  // inconsistent: D(d_1) nonzero of degree e_1 + e_2 but D(d_2) zero
  const LatticePoint deg = LatticePoint::basis(2, 0) + LatticePoint::basis(2, 1);
  const Tensor2 v =
      outer(WittElement::monomial(deg, TorusVector::basis(2, 0)),
            WittElement::monomial(LatticePoint(2), TorusVector::basis(2, 0)));
  CHECK_THROWS_AS(solve_inner({v, Tensor2(2)}, deg), ConsistencyError);
  try {
    solve_inner({v, Tensor2(2)}, deg);
  } catch (const ConsistencyError& e) {
    CHECK(e.index == 1);
  }

  // non-homogeneous value
  const Tensor2 mixed =
      v + outer(WittElement::monomial(LatticePoint(2), TorusVector::basis(2, 0)),
                WittElement::monomial(LatticePoint(2), TorusVector::basis(2, 0)));
  CHECK_THROWS_AS(solve_inner({mixed, Tensor2(2)}, deg), ConsistencyError);
}

TEST_CASE("annihilator witnesses") {
  AlgebraConfig cfg{1, 0, 3, 8};
  const WittElement d = WittElement::monomial(LatticePoint(1),
                                              TorusVector::basis(1, 0));
  const WittElement td = WittElement::monomial(LatticePoint::basis(1, 0),
                                               TorusVector::basis(1, 0));

  // nonzero degree: a torus witness suffices
  const Tensor3 c1 = outer(td, d, d);
  CHECK(annihilator_witness(c1, cfg) == d);

  // degree zero: the first escalation candidate works
  const Tensor3 c0 = outer(d, d, d);
  const WittElement w = annihilator_witness(c0, cfg);
  CHECK(w == td);
  CHECK_FALSE(act(w, c0).is_zero());

  CHECK_THROWS_AS(annihilator_witness(Tensor3(1), cfg), NoWitnessError);

  // a cap of zero cannot search degree-zero tensors
  AlgebraConfig capped{1, 0, 3, 0};
  CHECK_THROWS_AS(annihilator_witness(c0, capped), WitnessCapError);

  // randomized: every returned witness verifies
  for (int rank = 1; rank <= 3; ++rank) {
    AlgebraConfig rcfg{rank, 94, 2, 8};
    Sampler s(rcfg);
    for (int i = 0; i < 20; ++i) {
      const Tensor3 c = s.nonzero_tensor3(i % 2 == 0);
      const WittElement a = annihilator_witness(c, rcfg);
      CHECK_FALSE(act(a, c).is_zero());
    }
  }
}

TEST_CASE("alternating witnesses") {
  AlgebraConfig cfg{1, 0, 3, 8};
  const WittElement d = WittElement::monomial(LatticePoint(1),
                                              TorusVector::basis(1, 0));
  const WittElement td = WittElement::monomial(LatticePoint::basis(1, 0),
                                               TorusVector::basis(1, 0));

  CHECK_FALSE(alternating_witness(outer(d, td) - outer(td, d), cfg).has_value());

  const auto w = alternating_witness(outer(d, d), cfg);
  REQUIRE(w.has_value());
  CHECK(*w == td);
  CHECK_FALSE(sym_split(act(*w, outer(d, d))).symmetric.is_zero());

  // alternating plus a symmetric remainder of degree zero
  const WittElement tmd = WittElement::monomial(-LatticePoint::basis(1, 0),
                                                TorusVector::basis(1, 0));
  const Tensor2 r = (outer(d, td) - outer(td, d)) + outer(td, tmd);
  const auto w2 = alternating_witness(r, cfg);
  REQUIRE(w2.has_value());
  CHECK_FALSE(sym_split(act(*w2, r)).symmetric.is_zero());

  for (int rank = 1; rank <= 3; ++rank) {
    AlgebraConfig rcfg{rank, 95, 2, 8};
    Sampler s(rcfg);
    for (int i = 0; i < 20; ++i) {
      const Tensor2 t = s.non_alternating_tensor2(i % 2 == 0);
      const auto witness = alternating_witness(t, rcfg);
      REQUIRE(witness.has_value());
      CHECK_FALSE(sym_split(act(*witness, t)).symmetric.is_zero());
    }
  }
}
