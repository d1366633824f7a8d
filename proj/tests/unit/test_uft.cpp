#include "helpers.hpp"

#include "pqh/error.hpp"

#include <doctest.h>

using namespace pqh;
using namespace pqh::test;

TEST_SUITE("uft") {
  TEST_CASE("transversal direction") {
    CHECK_FALSE(find_transversal_direction(h_e1()).has_value());
    const auto h = find_transversal_direction(span_rows({{1, 0, 0, 0}}));
    REQUIRE(h.has_value());
    CHECK(*h == HVector{0, 1});
    std::size_t tried = 0;
    CHECK(find_transversal_direction(complex_instance(), &tried) == HVector{0, 1});
    CHECK(tried == 1);
  }

  TEST_CASE("reading off F and T") {
    const UFTForm r = to_uft(real_line(), HBasisChange{});
    CHECK(r.f == span_rows({{1, 0}}));
    CHECK(r.t == Matrix{{0}, {1}});
    const UFTForm d = to_uft(h1_e(), HBasisChange{});
    CHECK(d.f == Subspace::whole(2));
    CHECK(d.t.is_zero());
    CHECK_THROWS_AS(to_uft(span_rows({{0, 0, 1, 0}}), HBasisChange{}), InvariantError);
    // h (x) E' with h = 2 h1 + 3 h2 is the graph of T = (3/2) Id.
    const UFTForm l = to_uft(span_rows({{2, 0, 3, 0}, {0, 2, 0, 3}}), HBasisChange{});
    CHECK(l.t == Rational(3, 2) * Matrix::identity(2));
  }

  TEST_CASE("basis change formula") {
    const UFTForm c = to_uft(complex_instance(), HBasisChange{});
    CHECK(uft_change_basis(c, HBasisChange{}) == c);
    // Swap (h1, h2) -> (h2, -h1) replaces T by -T^{-1}; here T^{-1} = -T.
    const UFTForm s = uft_change_basis(c, HBasisChange(Matrix{{0, -1}, {1, 0}}));
    CHECK(from_uft(s) == complex_instance());
    CHECK(s.t == c.t);
    Rng rng(33);
    int done = 0;
    while (done < 100) {
      const Instance in = generate(InstanceKind::Random, rng.below(1u << 30), 1 + rng.below(3), 2);
      const Subspace u = Subspace::span(in.vectors);
      const auto f = to_uft(u);
      if (!f) continue;
      try {
        const UFTForm g = uft_change_basis(*f, random_sl2(rng));
        REQUIRE(from_uft(g) == u);
        ++done;
      } catch (const InvariantError&) {
        // the new second vector meets U; nothing to compare
      }
    }
  }

  TEST_CASE("injectivize") {
    const UFTForm d = to_uft(h1_e(), HBasisChange{});
    const UFTForm i = injectivize(d);
    CHECK(i.injective());
    CHECK(from_uft(i) == h1_e());
    const UFTForm c = to_uft(complex_instance(), HBasisChange{});
    CHECK(injectivize(c) == c);
    Rng rng(40);
    for (int s = 0; s < 100; ++s) {
      const Instance in = generate(InstanceKind::Random, s, 1 + rng.below(3), 1 + rng.below(4));
      const auto f = to_uft(Subspace::span(in.vectors));
      if (!f) continue;
      const UFTForm g = injectivize(*f);
      REQUIRE(g.injective());
      REQUIRE(from_uft(g) == from_uft(*f));
    }
  }

  TEST_CASE("decomposable spectrum") {
    const PencilSpectrum pc = decomposable_spectrum(para_complex_instance());
    REQUIRE(pc.directions.size() == 2);
    CHECK(pc.directions[0].h == HVector{1, 1});
    CHECK(pc.directions[0].fiber == span_rows({{1, 0}}));
    CHECK(pc.directions[1].h == HVector{1, -1});
    CHECK(pc.directions[1].fiber == span_rows({{0, 1}}));
    const PencilSpectrum cx = decomposable_spectrum(complex_instance());
    CHECK(cx.directions.empty());
    REQUIRE(cx.irrational_factors.size() == 1);
    CHECK(cx.irrational_factors[0] == Poly({1, 0, 1}));
    const PencilSpectrum l = decomposable_spectrum(span_rows({{1, 0, 0, 0}}));
    REQUIRE(l.directions.size() == 1);
    CHECK(l.directions[0].h == HVector{1, 0});
    CHECK(l.directions[0].fiber == span_rows({{1, 0}}));
    CHECK_THROWS_AS(decomposable_spectrum(h_e1()), InvariantError);
  }

  TEST_CASE("induced metric on F") {
    const auto sp = ModelSpace::standard(1);
    CHECK(induced_gF(sp, to_uft(complex_instance(), HBasisChange{})) == Matrix{{2, 0}, {0, 2}});
    CHECK(induced_gF(sp, to_uft(para_complex_instance(), HBasisChange{})) == Matrix{{0, -2}, {-2, 0}});
    CHECK(induced_gF(sp, to_uft(h1_e(), HBasisChange{})).is_zero());
  }

  TEST_CASE("forms 1 and 2") {
    const Form1 f1 = decompose_form1(h_e1());
    REQUIRE(f1.decomposable.has_value());
    CHECK(f1.decomposable->addend.dim() == 1);
    CHECK(f1.remainder.f.dim() == 1);
    CHECK(sum(f1.decomposable->addend, from_uft(f1.remainder)) == h_e1());
    const Form2 f2 = decompose_form2(para_complex_instance());
    CHECK(f2.decomposables.size() == 2);
    CHECK(from_uft(f2.remainder).is_zero());
    Rng rng(50);
    for (int s = 0; s < 50; ++s) {
      const std::size_t n = 1 + rng.below(3);
      const Subspace u = Subspace::span(generate(InstanceKind::Random, s, n, rng.below(4 * n + 1)).vectors);
      const Form2 f = decompose_form2(u);
      Subspace total = from_uft(f.remainder);
      std::size_t dims = total.dim();
      for (const auto& d : f.decomposables) {
        total = sum(total, d.addend);
        dims += d.addend.dim();
      }
      REQUIRE(total == u);
      REQUIRE(dims == u.dim());
    }
  }
}
