#pragma once

#include "pqh/model.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace pqh {

/// Seeded source of small rationals. A 64-bit draw r maps to
/// ((r mod 19) - 9) / (1 + (r >> 8) mod 3): numerators in [-9, 9],
/// denominators in {1, 2, 3}. The mapping is fixed so that output is
/// identical across platforms and standard library versions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  Rational rational();
  Rational nonzero();
  /// Uniform-ish integer in [0, bound) by reduction modulo bound.
  std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }

private:
  std::mt19937_64 eng_;
};

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);
/// Rows linearly independent (rows <= cols).
Matrix random_independent_rows(Rng& rng, std::size_t rows, std::size_t cols);
Matrix random_invertible(Rng& rng, std::size_t n);
/// Product of symplectic transvections x -> x + c omega(v, x) v.
Matrix random_symplectic(Rng& rng, const Matrix& omega);
HBasisChange random_sl2(Rng& rng);

enum class InstanceKind {
  ParaQuaternionic,
  Complex,
  TotallyComplex,
  ParaComplex,
  TotallyParaComplex,
  Nilpotent,
  Decomposable,
  Real,
  TotallyReal,
  Random,
};

std::string to_string(InstanceKind k);
/// Throws ParseError for unknown names.
InstanceKind instance_kind_from_string(const std::string& s);
std::vector<InstanceKind> all_instance_kinds();

/// Default subspace dimension used when none is requested.
std::size_t default_dim(InstanceKind k);

struct Instance {
  ModelSpace space;
  Matrix vectors;  // spanning rows, 4n columns
  std::optional<HBasisChange> h_basis;
};

/// Builds an instance of the requested kind from the structure theorems,
/// then moves it by a random element of SL(H) x Sp(E, omega). Throws
/// InvariantError when dim is not admissible for the kind and n.
Instance generate(InstanceKind kind, std::uint64_t seed, std::size_t n, std::optional<std::size_t> dim = std::nullopt);

} // namespace pqh
