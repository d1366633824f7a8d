#include "helpers.hpp"

#include <doctest.h>

using namespace pqh;
using namespace pqh::test;

TEST_SUITE("subspace") {
  TEST_CASE("lattice operations") {
    const Subspace a = span_rows({{1, 0, 0, 0}}), b = span_rows({{0, 0, 1, 0}});
    CHECK(sum(a, b) == h_e1());
    CHECK(intersect(h_e1(), h_e1()) == h_e1());
    CHECK(intersect(a, b).is_zero());
    Rng rng(1);
    for (int s = 0; s < 100; ++s) {
      const std::size_t d = 4 * (1 + rng.below(3));
      const Subspace u = Subspace::span(random_matrix(rng, rng.below(d), d));
      const Subspace w = Subspace::span(random_matrix(rng, rng.below(d), d));
      REQUIRE(sum(u, w).dim() + intersect(u, w).dim() == u.dim() + w.dim());
      REQUIRE(contains(u, intersect(u, w)));
      REQUIRE(contains(sum(u, w), w));
    }
  }

  TEST_CASE("images of structures") {
    const Subspace h1 = h1_e();
    CHECK(image(Operator::K(), h1) == h1);
    CHECK(image(Operator::I(), h1) == span_rows({{0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK(image(Operator{0, 0, 0}, h1).is_zero());
  }

  TEST_CASE("projections") {
    const auto pp = p1p2(h_e1());
    CHECK(pp.e1 == span_rows({{1, 0}}));
    CHECK(pp.e2 == span_rows({{1, 0}}));
    const auto q = p1p2(span_rows({{1, 0, 0, 0}}));
    CHECK(q.e1 == span_rows({{1, 0}}));
    CHECK(q.e2.is_zero());
    Rng rng(6);
    const Subspace u = Subspace::span(random_matrix(rng, 3, 8));
    const auto base = p1p2(u);
    for (int s = 0; s < 50; ++s) {
      const auto c = p1p2(u, random_sl2(rng));
      REQUIRE(sum(c.e1, c.e2) == sum(base.e1, base.e2));
    }
  }

  TEST_CASE("signatures of the basic instances") {
    const auto sp1 = ModelSpace::standard(1), sp2 = ModelSpace::standard(2);
    CHECK(signature(sp1, Subspace::whole(4)) == SignatureTriple{2, 0, 2});
    CHECK(signature(sp1, h1_e()) == SignatureTriple{0, 2, 0});
    // H (x) span{e1, e2} with omega(e1, e2) = 1 inside n = 2.
    CHECK(signature(sp2, span_rows({{1, 0, 0, 0, 0, 0, 0, 0},
                                    {0, 1, 0, 0, 0, 0, 0, 0},
                                    {0, 0, 0, 0, 1, 0, 0, 0},
                                    {0, 0, 0, 0, 0, 1, 0, 0}})) == SignatureTriple{2, 0, 2});
    for (std::size_t n = 1; n <= 4; ++n)
      CHECK(signature(ModelSpace::standard(n), Subspace::whole(4 * n)) == SignatureTriple{2 * n, 0, 2 * n});
  }

  TEST_CASE("orthogonal complement") {
    const auto sp = ModelSpace::standard(1);
    CHECK(ortho_complement(sp, Subspace::whole(4)).is_zero());
    const Subspace l = span_rows({{1, 0, 0, 0}});
    CHECK(contains(ortho_complement(sp, l), l));
    Rng rng(10);
    for (int s = 0; s < 100; ++s) {
      const std::size_t n = 1 + rng.below(3);
      const Subspace u = Subspace::span(random_matrix(rng, rng.below(4 * n + 1), 4 * n));
      REQUIRE(ortho_complement(ModelSpace::standard(n), u).dim() == 4 * n - u.dim());
    }
  }

  TEST_CASE("maximal para-quaternionic subspace") {
    CHECK(maximal_pq(h_e1()) == h_e1());
    CHECK(maximal_pq(complex_instance()).is_zero());
    // U0 does not depend on the admissible basis: compute it from a
    // conjugated triple.
    Rng rng(14);
    for (int s = 0; s < 20; ++s) {
      const Subspace u = sum(Subspace::span(random_matrix(rng, 2, 8)), tensor_h(Subspace::span(random_matrix(rng, 1, 4))));
      const HBasisChange c = random_sl2(rng);
      Subspace w = u;
      for (const Operator& a : {Operator::I(), Operator::J(), Operator::K()})
        w = intersect(w, image(operator_from_basis(c, a), u));
      REQUIRE(w == maximal_pq(u));
    }
  }
}
