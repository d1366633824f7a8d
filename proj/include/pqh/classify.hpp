#pragma once

#include "pqh/uft.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pqh {

/// {A in Q~ : AU in U}, rows in (alpha, beta, gamma) coordinates, RREF.
struct Stabilizer {
  Matrix basis;

  std::size_t dim() const { return basis.rows(); }
  Operator element(std::size_t i) const { return {basis(i, 0), basis(i, 1), basis(i, 2)}; }
  bool contains(const Operator& a) const;
};

Stabilizer stabilizer(const Subspace& u);

/// True iff A U is contained in U.
bool preserves(const Operator& a, const Subspace& u);

struct KindWitnesses {
  std::optional<Operator> complex;       // q > 0
  std::optional<Operator> para_complex;  // q < 0
  std::optional<Operator> nilpotent;     // q = 0, A != 0
};

KindWitnesses kind_witnesses(const Stabilizer& s);

struct ParaQuaternionicCheck {
  bool para_quaternionic = false;
  bool hermitian = false;
  Subspace e_prime;  // p1(U)
  bool gram_matches_block = false;
};

ParaQuaternionicCheck is_para_quaternionic(const ModelSpace& space, const Subspace& u);

/// A-invariant complement of U0 in U, from the averaged projection
/// (P + A^{-1} P A) / 2 where P projects onto the echelon complement.
Subspace invariant_complement(const Operator& a, const Subspace& u, const Subspace& u0);

/// Presentation of an A-invariant pure subspace adapted to A (q(A) != 0):
/// basis (v, Av/c) with c = omega^H(v, Av), in which U = U^{F,T} with
/// F T-invariant and T^2 = -kappa Id, kappa = c^2 / q(A).
struct ScaledPresentation {
  Operator witness;
  Rational c;
  Rational kappa;
  UFTForm uft;
};

ScaledPresentation scaled_presentation(const Operator& a, const Subspace& part);

/// Partners of A: the polar-orthogonal plane A^perp in Q~.
std::vector<Operator> partners(const Operator& a);

/// True iff g(BX, Y) = 0 for all X, Y in U and all listed B.
bool orthogonal_under(const ModelSpace& space, const Subspace& u, const std::vector<Operator>& bs);

struct ComplexFragment {
  Operator witness;
  Subspace part;  // A-invariant complement of U0
  ScaledPresentation presentation;
  Matrix g_f;
  Matrix kahler;  // g(A X, Y) on the basis of F
  SignatureTriple signature;
  bool hermitian = false;
  bool f_symplectic = false;
  bool t_preserves_omega = false;  // omega(Tf, Tf') = kappa omega(f, f')
  bool gram_test = false;          // A^perp U orthogonal to U
  bool totally_complex = false;
};

ComplexFragment check_complex(const ModelSpace& space, const Subspace& u, const Operator& a);

struct EigenPresentation {
  HVector plus;
  HVector minus;
  Subspace e_plus;
  Subspace e_minus;
};

struct ParaComplexFragment {
  Operator witness;
  Subspace part;
  ScaledPresentation presentation;
  std::size_t d_plus = 0;
  std::size_t d_minus = 0;
  bool para_complex = false;  // d_plus == d_minus
  std::size_t m = 0;          // rank of g on U+ x U-
  SignatureTriple signature;
  bool hermitian = false;
  bool f_symplectic = false;
  bool omega_condition = false;  // omega(Tf, Tf') = kappa omega(f, f')
  bool gram_test = false;
  bool totally_para_complex = false;
  std::optional<EigenPresentation> eigen;  // when -q(A) is a rational square
  Matrix witness_family;                   // stabilizer basis when it is 2-dimensional
};

ParaComplexFragment check_para_complex(const ModelSpace& space, const Subspace& u, const Operator& a);

struct NilpotentFragment {
  Operator witness;
  int degree = 0;
  HVector kernel_direction;  // ker A = h (x) E
  bool criterion = false;    // h (x) p2(U) in U, p2 relative to a basis with h1' = h
  Subspace e0;
  Subspace e1pp;
  Subspace pq_part;    // H (x) E0
  Subspace dec_part;   // h (x) E1''
  Subspace real_part;  // echelon complement
  bool p2_symplectic = false;
};

NilpotentFragment check_nilpotent(const ModelSpace& space, const Subspace& u, const Operator& a);

/// U real iff U is pure with a presentation having injective T and
/// trivial invariant core.
bool is_real(const Subspace& u);

struct TotallyRealCheck {
  bool e1_isotropic = false;
  bool e2_isotropic = false;
  bool t_skew = false;
  bool gram_test = false;  // IU, JU, KU orthogonal to U
  bool e1_e2_disjoint = false;
  bool gram_formula = false;  // g = 2 omega(f, T f')
  bool totally_real = false;
};

/// Throws InvariantError unless U is real and Hermitian.
TotallyRealCheck check_totally_real(const ModelSpace& space, const Subspace& u);

struct ClassificationReport {
  std::size_t dim = 0;
  bool para_quaternionic = false;
  bool pure = false;
  bool complex = false;
  bool weakly_para_complex = false;
  bool para_complex = false;
  bool nilpotent = false;
  int nilpotent_degree = 0;
  bool real = false;
  bool hermitian = false;
  bool totally_complex = false;
  bool totally_para_complex = false;
  bool totally_real = false;
  std::optional<Operator> complex_witness;
  std::optional<Operator> para_complex_witness;
  std::optional<Operator> nilpotent_witness;
  Matrix stabilizer;  // rows (alpha, beta, gamma)
  SignatureTriple signature;
  Subspace u0;
  std::optional<UFTForm> uft;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Throws CrossCheckError when two independent computations of a flag
/// disagree.
ClassificationReport classify(const ModelSpace& space, const Subspace& u);

enum class AddendKind { ParaQuaternionic, Decomposable, Complex, WeaklyParaComplex, Algebraic, Real };

std::string to_string(AddendKind k);
AddendKind addend_kind_from_string(const std::string& s);

struct Addend {
  AddendKind kind;
  Subspace space;
  std::optional<Operator> witness;
  std::optional<Poly> factor;  // minimal polynomial factor behind the addend
};

/// U = U0 + decomposables + complex + weakly para-complex + algebraic
/// blocks + real addend; zero addends are omitted.
std::vector<Addend> generic_decompose(const Subspace& u);

/// Oracle for the invariance identity: for each basis f of the socle of p,
/// A = (1-q, -1-q, -p) maps h1' (x) f + h2' (x) Tf into the span of the
/// graph vectors of f and Tf. Used as an independent check in tests.
Operator quadratic_witness(const Poly& monic_quadratic);

} // namespace pqh
