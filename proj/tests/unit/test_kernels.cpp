#include "pqh/error.hpp"
#include "pqh/generate.hpp"
#include "pqh/kernels.hpp"
#include "pqh/poly.hpp"

#include <doctest.h>

using namespace pqh;

TEST_SUITE("rational") {
  TEST_CASE("literals") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK_FALSE(rational_sqrt(2).has_value());
  }
}

TEST_SUITE("kernels") {
  TEST_CASE("rref, rank, nullspace on a fixed matrix") {
    const Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    const auto e = kernels::rref(m);
    CHECK(e.reduced == Matrix{{1, 0, 1}, {0, 1, 1}});
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    CHECK(kernels::rank(m) == 2);
    CHECK(kernels::nullspace(m) == Matrix{{1, 1, -1}});
    CHECK(kernels::left_nullspace(m) == Matrix{{1, Rational(-1, 2), 0}});
    CHECK(kernels::determinant(m) == 0);
    CHECK_THROWS_AS(kernels::inverse(m), InvariantError);
  }

  TEST_CASE("inertia") {
    // diag(1, -1) rotated by congruence, and a hyperbolic plane.
    CHECK(kernels::inertia(Matrix{{0, 1}, {1, 0}}) == kernels::Inertia{1, 0, 1});
    CHECK(kernels::inertia(Matrix{{2, 0, 0}, {0, 0, 0}, {0, 0, -3}}) == kernels::Inertia{1, 1, 1});
  }

  TEST_CASE("serial and parallel kernels agree exactly") {
    Rng rng(5);
    for (std::size_t n : {3u, 17u, 50u, 70u}) {
      const Matrix a = random_matrix(rng, n, n + 3);
      const Matrix b = random_matrix(rng, n + 3, n);
      const auto s = kernels::rref_serial(a), p = kernels::rref_parallel(a);
      CHECK(s.reduced == p.reduced);
      CHECK(s.pivots == p.pivots);
      CHECK(kernels::matmul_serial(a, b) == kernels::matmul_parallel(a, b));
      const Matrix sym = a * a.transpose() - b.transpose() * b;
      CHECK(kernels::inertia_serial(sym) == kernels::inertia_parallel(sym));
    }
  }

  TEST_CASE("inverse and determinant") {
    Rng rng(9);
    for (int s = 0; s < 20; ++s) {
      const Matrix m = random_invertible(rng, 5);
      CHECK(kernels::matmul(m, kernels::inverse(m)) == Matrix::identity(5));
      CHECK(kernels::determinant(m) * kernels::determinant(kernels::inverse(m)) == 1);
    }
  }
}

TEST_SUITE("poly") {
  TEST_CASE("charpoly, minpoly, factor") {
    const Matrix rot{{0, -1}, {1, 0}};
    CHECK(charpoly(rot) == Poly({1, 0, 1}));
    const Matrix d{{2, 0, 0}, {0, 2, 0}, {0, 0, 3}};
    CHECK(minpoly(d) == Poly::linear_root(2) * Poly::linear_root(3));
    CHECK(charpoly(d) == Poly::linear_root(2) * Poly::linear_root(2) * Poly::linear_root(3));
    // (x^2 - 2)(x - 1)^2: one irreducible quadratic, one repeated root.
    const auto f = factor(Poly({-2, 0, 1}) * Poly::linear_root(1) * Poly::linear_root(1));
    REQUIRE(f.size() == 2);
    CHECK(f[0] == std::pair{Poly::linear_root(1), 2});
    CHECK(f[1] == std::pair{Poly({-2, 0, 1}), 1});
    CHECK(real_root_count(Poly({-2, 0, 1})) == 2);
    CHECK(real_root_count(Poly({1, 0, 1})) == 0);
    CHECK(Poly({Rational(1, 2), -2, 1}).str() == "x^2 - 2*x + 1/2");
  }

  TEST_CASE("Cayley-Hamilton on random matrices") {
    Rng rng(3);
    for (int s = 0; s < 20; ++s) {
      const Matrix m = random_matrix(rng, 4, 4);
      CHECK(eval_matrix(charpoly(m), m).is_zero());
      CHECK(eval_matrix(minpoly(m), m).is_zero());
    }
  }
}
