#pragma once

// U^{F,T} presentations: U = {h1' (x) f + h2' (x) Tf : f in F} relative to a
// symplectic basis (h1', h2') of H, with F in E and T : F -> E.

#include "pqh/poly.hpp"
#include "pqh/subspace.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace pqh {

using HVector = std::array<Rational, 2>;

struct UFTForm {
  HBasisChange h_basis;
  Subspace f;  // in E
  Matrix t;    // 2n x dim F, column j = T(row j of f.basis())

  std::size_t dim_e() const { return f.ambient(); }
  std::vector<Rational> apply(std::span<const Rational> v) const;  // v in F
  bool injective() const { return kernels::rank(t) == f.dim(); }
  friend bool operator==(const UFTForm&, const UFTForm&) = default;
};

Subspace from_uft(const UFTForm& u);

/// Candidates h2 + t h1 for t = 0..dim U, then h1; the first h with
/// (h (x) E) cap U = 0, or nullopt. `tried` receives the number of
/// candidates examined.
std::optional<HVector> find_transversal_direction(const Subspace& u, std::size_t* tried = nullptr);

/// Throws InvariantError unless (h2' (x) E) cap U = 0 in `basis`.
UFTForm to_uft(const Subspace& u, const HBasisChange& basis);

/// Presentation relative to the first transversal candidate, if any.
std::optional<UFTForm> to_uft(const Subspace& u);

/// Re-express u relative to the symplectic basis s (given in the fixed
/// basis): with (alpha, beta; gamma, delta) the old basis in new
/// coordinates, F' = (alpha + gamma T)F and T'(alpha f + gamma Tf) =
/// beta f + delta Tf. Throws InvariantError when alpha + gamma T is not
/// injective on F.
UFTForm uft_change_basis(const UFTForm& u, const HBasisChange& s);

/// Equivalent presentation with injective T, through the change
/// h1' -> h1' + t h2' (T -> T - t) for the least t >= 0 that works.
UFTForm injectivize(const UFTForm& u);

/// Largest T-invariant subspace inside F cap TF and the matrix of T on it
/// (acting on coordinates relative to w.basis()).
struct InvariantCore {
  Subspace w;
  Matrix t;
};
InvariantCore invariant_core(const UFTForm& u);

/// Projective representative with first nonzero coordinate 1.
HVector normalize_direction(const HVector& h);

struct DecomposableDirection {
  HVector h;       // fixed basis, normalized
  Subspace fiber;  // {e : h (x) e in U}
};

struct PencilSpectrum {
  UFTForm presentation;  // injectivized
  std::vector<DecomposableDirection> directions;
  std::vector<Poly> irrational_factors;  // irreducible, degree >= 2
};

/// Throws InvariantError unless u is pure.
PencilSpectrum decomposable_spectrum(const Subspace& u);

/// g_F(f, f') = -[omega(Tf, f') + omega(Tf', f)] on the basis of F.
Matrix induced_gF(const ModelSpace& space, const UFTForm& u);

struct DecomposableAddend {
  HVector h;
  Subspace fiber;
  Subspace addend;  // h (x) fiber
};

struct Form1 {
  std::optional<DecomposableAddend> decomposable;
  UFTForm remainder;
};

struct Form2 {
  std::vector<DecomposableAddend> decomposables;
  UFTForm remainder;  // contains no rational decomposable vector
};

Form1 decompose_form1(const Subspace& u);
Form2 decompose_form2(const Subspace& u);

} // namespace pqh
