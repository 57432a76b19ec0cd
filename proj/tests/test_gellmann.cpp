#include "doctest.h"

#include "sicsep/gellmann.hpp"

#include "helpers.hpp"

using namespace sicsep;
using namespace test_helpers;

TEST_CASE("d=2 basis is the rescaled Pauli family") {
  auto basis = gellmann_basis(2);
  REQUIRE(basis.elements.size() == 3);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(basis.elements[0], s * pauli_x()) <= 1e-15);
  CHECK(max_abs_diff(basis.elements[1], s * pauli_y()) <= 1e-15);
  CHECK(max_abs_diff(basis.elements[2], s * pauli_z()) <= 1e-15);
}

TEST_CASE("d=3 last diagonal element") {
  auto basis = gellmann_basis(3);
  REQUIRE(basis.elements.size() == 8);
  Matrix expect = Matrix::Zero(3, 3);
  const double s = 1.0 / std::sqrt(6.0);
  expect(0, 0) = s;
  expect(1, 1) = s;
  expect(2, 2) = -2.0 * s;
  CHECK(max_abs_diff(basis.elements[7], expect) <= 1e-15);
}

TEST_CASE("orthonormal and traceless for d in 2..8") {
  for (int d = 2; d <= 8; ++d) {
    auto basis = gellmann_basis(d);
    REQUIRE(static_cast<int>(basis.elements.size()) == d * d - 1);
    for (size_t a = 0; a < basis.elements.size(); ++a) {
      CHECK(std::abs(basis.elements[a].trace()) <= 1e-12);
      for (size_t b = a; b < basis.elements.size(); ++b) {
        Complex ip = hs_inner(basis.elements[a], basis.elements[b]);
        double expect = a == b ? 1.0 : 0.0;
        CHECK(std::abs(ip - Complex(expect, 0.0)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("completeness on random Hermitian matrices") {
  for (int d : {2, 3, 5}) {
    auto basis = gellmann_basis(d);
    Matrix h = random_hermitian(d, 700 + d);
    Matrix rebuilt = (h.trace() / static_cast<double>(d)) * Matrix::Identity(d, d);
    for (const Matrix& f : basis.elements) rebuilt += hs_inner(f, h) * f;
    CHECK(max_abs_diff(rebuilt, h) <= 1e-10);
  }
}

TEST_CASE("construction is deterministic") {
  auto b1 = gellmann_basis(4);
  auto b2 = gellmann_basis(4);
  for (size_t i = 0; i < b1.elements.size(); ++i)
    CHECK(max_abs_diff(b1.elements[i], b2.elements[i]) == 0.0);
  CHECK(max_abs_diff(b1.sum, b2.sum) == 0.0);
}

TEST_CASE("sum field equals the entrywise sum") {
  auto basis = gellmann_basis(3);
  Matrix s = Matrix::Zero(3, 3);
  for (const Matrix& f : basis.elements) s += f;
  CHECK(max_abs_diff(basis.sum, s) == 0.0);
}

TEST_CASE("dimension range") {
  CHECK_THROWS_AS(gellmann_basis(1), Error);
  CHECK_THROWS_AS(gellmann_basis(65), Error);
}
