#include "helpers.hpp"

#include "pqh/error.hpp"
#include "pqh/io.hpp"

#include <doctest.h>

using namespace pqh;
using namespace pqh::test;

TEST_SUITE("io") {
  TEST_CASE("instance parsing") {
    const auto in = parse_instance_text(R"({"n": 1, "omega_E": [["0","1"],["-1","0"]], "vectors": [["1","0","0","1"]]})");
    CHECK(in.subspace == real_line());
    CHECK(in.warnings.empty());
    CHECK_FALSE(in.h_basis.has_value());
    const auto half = parse_instance_text(R"({"n": 1, "omega_E": [[0, 1], [-1, 0]], "vectors": [["1/2", 0, 0, 1]]})");
    CHECK(half.vectors(0, 0) == Rational(1, 2));
    const auto dup = parse_instance_text(
        R"({"n": 1, "omega_E": [[0, 1], [-1, 0]], "vectors": [[1, 0, 0, 1], [2, 0, 0, 2]], "h_basis": [[1, 1], [0, 1]]})");
    CHECK(dup.subspace.dim() == 1);
    CHECK(dup.warnings.size() == 1);
    CHECK(dup.h_basis->matrix() == Matrix{{1, 1}, {0, 1}});
  }

  TEST_CASE("malformed and invalid instances") {
    const char* omega = R"("omega_E": [[0, 1], [-1, 0]])";
    auto doc = [&](const std::string& rest) { return std::string("{\"n\": 1, ") + omega + ", " + rest + "}"; };
    CHECK_THROWS_AS(parse_instance_text(doc(R"("vectors": [["0.5", 0, 0, 1]])")), ParseError);
    CHECK_THROWS_AS(parse_instance_text(doc(R"("vectors": [[0.5, 0, 0, 1]])")), ParseError);
    CHECK_THROWS_AS(parse_instance_text(doc(R"("vectors": [[1, 0, 0]])")), ParseError);
    CHECK_THROWS_AS(parse_instance_text(R"({"n": 1, "vectors": []})"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("{"), ParseError);
    CHECK_THROWS_AS(parse_instance_text(R"({"n": 1, "omega_E": [[0, 0], [0, 0]], "vectors": []})"), InvariantError);
    CHECK_THROWS_AS(parse_instance_text(doc(R"("vectors": [], "h_basis": [[2, 0], [0, 1]])")), InvariantError);
  }

  TEST_CASE("instance and report round-trips") {
    for (InstanceKind k : all_instance_kinds())
      for (std::uint64_t s = 1; s <= 3; ++s) {
        const Instance inst = generate(k, s, 2);
        const ParsedInstance back = parse_instance(instance_to_json(inst));
        REQUIRE(back.vectors == inst.vectors);
        REQUIRE(back.space == inst.space);
        const ClassificationReport r = classify(back.space, back.subspace);
        const Json j = report_to_json(r);
        REQUIRE(report_from_json(j) == r);
        REQUIRE(report_from_json(Json::parse(j.dump())) == r);
      }
    const ClassificationReport z = classify(ModelSpace::standard(1), Subspace(4));
    CHECK(report_from_json(report_to_json(z)) == z);
  }

  TEST_CASE("text report") {
    const auto r = classify(ModelSpace::standard(1), real_line());
    const std::string t = report_text(r);
    CHECK(t.find("flags: pure real hermitian totally_real") != std::string::npos);
    CHECK(t.find("signature: (1, 0, 0)") != std::string::npos);
  }
}
