#include <doctest.h>

#include "witt/sample.hpp"
#include "witt/scalar.hpp"

using witt::AlgebraConfig;
using witt::Sampler;
using witt::Scalar;

TEST_CASE("scalars are stored canonically") {
  CHECK(Scalar(2, 4) == Scalar(1, 2));
  CHECK(Scalar(2, 4).str() == "1/2");
  CHECK(Scalar(1, -2) == Scalar(-1, 2));
  CHECK(Scalar(1, -2).str() == "-1/2");
  CHECK(Scalar(0, 7).str() == "0");
  CHECK(Scalar(0, 7).denominator() == 1);
  CHECK(Scalar(-4, 2).str() == "-2");
  CHECK_THROWS_AS(Scalar(1, 0), witt::Error);
}

TEST_CASE("literal parsing") {
  CHECK(Scalar::from_string("3/2") == Scalar(3, 2));
  CHECK(Scalar::from_string("-3/9") == Scalar(-1, 3));
  CHECK(Scalar::from_string("+5") == Scalar(5));
  CHECK_THROWS_AS(Scalar::from_string("1/"), witt::Error);
  CHECK_THROWS_AS(Scalar::from_string("1 / 2"), witt::Error);
  CHECK_THROWS_AS(Scalar::from_string("1/0"), witt::Error);
  CHECK_THROWS_AS(Scalar::from_string(""), witt::Error);
  CHECK_THROWS_AS(Scalar::from_string("a"), witt::Error);
}

TEST_CASE("exact ordering") {
  CHECK(Scalar(3, 2) > Scalar(4, 3));
  CHECK(Scalar(-1, 3) > Scalar(-1, 2));
  CHECK(Scalar(7, 7) == Scalar(1));
}

TEST_CASE("field axioms hold exactly on random triples") {
  Sampler s(AlgebraConfig{2, 11, 3, 8});
  for (int i = 0; i < 200; ++i) {
    const Scalar a = s.scalar(), b = s.scalar(), c = s.scalar();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Scalar(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
  }
}

TEST_CASE("division errors") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), witt::Error);
  CHECK_THROWS_AS(Scalar(0).inverse(), witt::Error);
}
