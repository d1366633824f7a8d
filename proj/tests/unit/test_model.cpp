#include "helpers.hpp"

#include "pqh/error.hpp"
#include "pqh/kernels.hpp"

#include <doctest.h>

using namespace pqh;
using namespace pqh::test;

TEST_SUITE("model") {
  TEST_CASE("model space validation") {
    CHECK_THROWS_AS(ModelSpace(1, Matrix{{0, 0}, {0, 0}}), InvariantError);
    CHECK_THROWS_AS(ModelSpace(1, Matrix{{0, 1}, {1, 0}}), InvariantError);
    CHECK_THROWS_AS(ModelSpace(2, Matrix{{0, 1}, {-1, 0}}), InvariantError);
    CHECK(ModelSpace::standard(2).dim() == 8);
  }

  TEST_CASE("standard structure on decomposables") {
    const auto h1e1 = vec({1, 0, 0, 0}), h2e1 = vec({0, 0, 1, 0});
    CHECK(apply_operator(Operator::I(), h1e1) == h2e1);
    CHECK(apply_operator(Operator::K(), h2e1) == h2e1);
    CHECK(apply_operator(Operator::K(), h1e1) == Rational(-1) * h1e1);
    // I + J kills h2 (x) E.
    CHECK(apply_operator(Operator{1, 1, 0}, h2e1).is_zero());
  }

  TEST_CASE("A^2 = -q(A) Id") {
    Rng rng(21);
    for (int s = 0; s < 200; ++s) {
      const std::size_t n = 1 + rng.below(4);
      const Operator a{rng.rational(), rng.rational(), rng.rational()};
      std::vector<Rational> c(4 * n);
      for (auto& x : c) x = rng.rational();
      const Vector x(c);
      REQUIRE(apply_operator(a, apply_operator(a, x)) == (-a.q()) * x);
    }
  }

  TEST_CASE("metric") {
    const auto sp = ModelSpace::standard(1);
    const auto h1e1 = vec({1, 0, 0, 0}), h1e2 = vec({0, 1, 0, 0}), h2e2 = vec({0, 0, 0, 1});
    CHECK(metric_g(sp, h1e1, h2e2) == 1);
    CHECK(metric_g(sp, h1e1, h1e2) == 0);
    CHECK(metric_g(sp, h1e1, h1e1) == 0);
  }

  TEST_CASE("hermitian product and its invariant") {
    const auto sp = ModelSpace::standard(1);
    const auto x = vec({1, 0, 0, 0}), y = vec({0, 0, 0, 1});
    const ParaQuaternion p = hermitian_product(sp, x, y);
    CHECK(p == ParaQuaternion{1, 0, 0, -1});
    CHECK(hermitian_product(sp, x, x) == ParaQuaternion{});
    CHECK(norm(p.imaginary()) == -1);
    Rng rng(4);
    for (int s = 0; s < 20; ++s) CHECK(norm(hermitian_product(sp, x, y, random_sl2(rng)).imaginary()) == -1);
  }

  TEST_CASE("admissible basis changes") {
    const Operator a{2, Rational(1, 3), -1};
    CHECK(change_admissible_basis(HBasisChange{}, a) == a);
    // (h1, h2) -> (h2, -h1) sends K to -K.
    const HBasisChange swap(Matrix{{0, -1}, {1, 0}});
    CHECK(change_admissible_basis(swap, Operator::K()) == Rational(-1) * Operator::K());
    CHECK_THROWS_AS(HBasisChange(Matrix{{2, 0}, {0, 1}}), InvariantError);
    Rng rng(8);
    for (int s = 0; s < 100; ++s) {
      const Operator b{rng.rational(), rng.rational(), rng.rational()};
      const HBasisChange c = random_sl2(rng);
      REQUIRE(change_admissible_basis(c, b).q() == b.q());
      REQUIRE(change_admissible_basis(c, operator_from_basis(c, b)) == b);
    }
  }

  TEST_CASE("standardize") {
    const std::size_t n = 2;
    const Matrix i = operator_matrix(Operator::I(), n), j = operator_matrix(Operator::J(), n),
                 k = operator_matrix(Operator::K(), n);
    const Standardization st = standardize(i, j, k);
    CHECK(st.m == 2 * n);  // dimension of the +1 eigenspace of J
    auto intertwines = [&](const Matrix& ii, const Matrix& jj, const Matrix& kk, const Matrix& c) {
      const Matrix ci = kernels::inverse(c);
      return ci * ii * c == i && ci * jj * c == j && ci * kk * c == k;
    };
    CHECK(intertwines(i, j, k, st.change));
    Rng rng(12);
    for (int s = 0; s < 10; ++s) {
      const Matrix p = random_invertible(rng, 4 * n), pi = kernels::inverse(p);
      const Matrix ii = p * i * pi, jj = p * j * pi, kk = p * k * pi;
      CHECK(intertwines(ii, jj, kk, standardize(ii, jj, kk).change));
    }
    // J = Id has unequal eigenspaces and no I, K can complete it.
    CHECK_THROWS_AS(standardize(i, Matrix::identity(4 * n), k), InvariantError);
  }

  TEST_CASE("recover omega_E") {
    Rng rng(2);
    const Matrix p = random_invertible(rng, 4);
    const Matrix omega = p.transpose() * ModelSpace::standard(2).omega() * p;
    const ModelSpace sp(2, omega);
    CHECK(recover_omega_e(sp.gram()) == sp.omega());
    CHECK(recover_omega_e(sp.gram(), random_sl2(rng)) == sp.omega());
    Matrix broken = sp.gram();
    broken(0, 5) += 1;
    broken(5, 0) += 1;
    CHECK_THROWS_AS(recover_omega_e(broken), InvariantError);
  }
}
