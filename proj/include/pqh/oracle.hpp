#pragma once

// Brute-force cross-validation of a ClassificationReport against the raw
// definitions, sharing as little code with classify as practical.

#include "pqh/classify.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pqh {

struct OracleResult {
  std::size_t confirmations = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// `samples` random operators and basis changes are drawn from `seed` on
/// top of a fixed grid of small operators.
OracleResult oracle_check(const ModelSpace& space, const Subspace& u, const ClassificationReport& report,
                          std::uint64_t seed = 0, std::size_t samples = 20);

/// Inertia from Descartes' rule of signs on the characteristic polynomial;
/// exact for symmetric matrices since their spectrum is real.
SignatureTriple descartes_inertia(const Matrix& symmetric);

/// Addends recompose to U as a direct sum and each re-classifies as its
/// declared kind.
OracleResult oracle_decomposition(const ModelSpace& space, const Subspace& u, const std::vector<Addend>& addends);

} // namespace pqh
