#include "pqh/uft.hpp"

#include "pqh/error.hpp"

#include <algorithm>

namespace pqh {

std::vector<Rational> UFTForm::apply(std::span<const Rational> v) const {
  const std::vector<Rational> c = f.coordinates(v);
  return t * c;
}

namespace {

// Presentation from graph rows (a_i, b_i) in basis coordinates.
UFTForm from_graph_rows(const HBasisChange& basis, const Matrix& a, const Matrix& b) {
  const std::size_t d = a.cols();
  const auto ech = kernels::rref(hstack(a, b));
  for (auto p : ech.pivots)
    if (p >= d) throw InvariantError("uft: subspace meets h2' (x) E");
  Matrix fa(0, d);
  Matrix t(d, ech.reduced.rows());
  for (std::size_t r = 0; r < ech.reduced.rows(); ++r) {
    const auto row = ech.reduced.row(r);
    fa.append_row(row.subspan(0, d));
    for (std::size_t i = 0; i < d; ++i) t(i, r) = row[d + i];
  }
  UFTForm u{basis, Subspace::span(std::move(fa)), std::move(t)};
  if (u.f.dim() != u.t.cols()) throw InvariantError("uft: inconsistent presentation");
  return u;
}

std::vector<HVector> transversal_candidates(std::size_t dim) {
  std::vector<HVector> c;
  for (std::size_t t = 0; t <= dim; ++t) c.push_back({Rational(static_cast<long>(t)), 1});
  c.push_back({1, 0});
  return c;
}

HVector mat2_apply(const Matrix& s, const HVector& h) {
  return {s(0, 0) * h[0] + s(0, 1) * h[1], s(1, 0) * h[0] + s(1, 1) * h[1]};
}

} // namespace

Subspace from_uft(const UFTForm& u) {
  const std::size_t d = u.dim_e();
  Matrix rows(0, 2 * d);
  for (std::size_t j = 0; j < u.f.dim(); ++j) {
    const std::vector<Rational> tf = u.t.col_vector(j);
    rows.append_row(from_basis(u.h_basis, Vector(u.f.basis().row(j), tf)).coords());
  }
  return Subspace::span(std::move(rows));
}

std::optional<HVector> find_transversal_direction(const Subspace& u, std::size_t* tried) {
  std::size_t count = 0;
  for (const auto& h : transversal_candidates(u.dim())) {
    ++count;
    if (fiber(u, h).is_zero()) {
      if (tried) *tried = count;
      return h;
    }
  }
  if (tried) *tried = count;
  return std::nullopt;
}

UFTForm to_uft(const Subspace& u, const HBasisChange& basis) {
  const std::size_t d = u.ambient() / 2;
  Matrix a(0, d), b(0, d);
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const Vector x = to_basis(basis, u.vector(i));
    a.append_row(x.h1_part());
    b.append_row(x.h2_part());
  }
  return from_graph_rows(basis, a, b);
}

std::optional<UFTForm> to_uft(const Subspace& u) {
  const auto h = find_transversal_direction(u);
  if (!h) return std::nullopt;
  return to_uft(u, HBasisChange::with_second(*h));
}

UFTForm uft_change_basis(const UFTForm& u, const HBasisChange& s) {
  const Matrix r = s.inverse_matrix() * u.h_basis.matrix();
  const Rational &alpha = r(0, 0), &gamma = r(0, 1), &beta = r(1, 0), &delta = r(1, 1);
  const std::size_t d = u.dim_e();
  Matrix a(0, d), b(0, d);
  for (std::size_t j = 0; j < u.f.dim(); ++j) {
    const auto f = u.f.basis().row(j);
    const std::vector<Rational> tf = u.t.col_vector(j);
    std::vector<Rational> ra(d), rb(d);
    for (std::size_t i = 0; i < d; ++i) {
      ra[i] = alpha * f[i] + gamma * tf[i];
      rb[i] = beta * f[i] + delta * tf[i];
    }
    a.append_row(ra);
    b.append_row(rb);
  }
  if (kernels::rank(a) != u.f.dim()) throw InvariantError("uft_change_basis: alpha + gamma T is not injective on F");
  return from_graph_rows(s, a, b);
}

UFTForm injectivize(const UFTForm& u) {
  if (u.injective()) return u;
  for (std::size_t t = 1; t <= u.f.dim() + 1; ++t) {
    const Matrix shear{{1, 0}, {Rational(static_cast<long>(t)), 1}};
    const UFTForm v = uft_change_basis(u, HBasisChange(u.h_basis.matrix() * shear));
    if (v.injective()) return v;
  }
  throw InvariantError("injectivize: no injective presentation found");
}

InvariantCore invariant_core(const UFTForm& u) {
  const std::size_t d = u.dim_e();
  if (u.f.is_zero()) return {Subspace(d), Matrix(0, 0)};
  const Matrix f_cols = u.f.basis().transpose();  // coordinates -> E
  Subspace w = intersect(u.f, Subspace::span(u.t.transpose()));
  for (;;) {
    // {f in W : Tf in W}, through coordinates relative to F.
    const Subspace coords = preimage(u.t, w);
    const Subspace next = intersect(w, image(f_cols, coords));
    if (next.dim() == w.dim()) break;
    w = next;
  }
  Matrix tw(w.dim(), w.dim());
  for (std::size_t j = 0; j < w.dim(); ++j) {
    const std::vector<Rational> img = u.apply(w.basis().row(j));
    if (!w.contains(img)) throw InvariantError("invariant_core: core is not T-invariant");
    const std::vector<Rational> c = w.coordinates(img);
    for (std::size_t i = 0; i < w.dim(); ++i) tw(i, j) = c[i];
  }
  return {std::move(w), std::move(tw)};
}

HVector normalize_direction(const HVector& h) {
  if (sgn(h[0]) != 0) return {1, h[1] / h[0]};
  if (sgn(h[1]) != 0) return {0, 1};
  throw InvariantError("direction: zero vector");
}

PencilSpectrum decomposable_spectrum(const Subspace& u) {
  if (!maximal_pq(u).is_zero()) throw InvariantError("decomposable_spectrum: subspace is not pure");
  const auto pres = to_uft(u);
  if (!pres) throw InvariantError("decomposable_spectrum: no transversal direction");
  PencilSpectrum out{injectivize(*pres), {}, {}};
  const InvariantCore core = invariant_core(out.presentation);
  if (core.w.is_zero()) return out;
  const Matrix& s = out.presentation.h_basis.matrix();
  for (const auto& [p, mult] : factor(charpoly(core.t))) {
    (void)mult;
    if (p.degree() >= 2) {
      out.irrational_factors.push_back(p);
      continue;
    }
    const Rational lambda = -p.coeff(0);
    const Matrix ker = kernels::nullspace(core.t - lambda * Matrix::identity(core.t.rows()));
    Matrix fib(0, u.ambient() / 2);
    for (std::size_t r = 0; r < ker.rows(); ++r) fib.append_row(row_times(ker.row(r), core.w.basis()));
    out.directions.push_back({normalize_direction(mat2_apply(s, {1, lambda})), Subspace::span(std::move(fib))});
  }
  return out;
}

Matrix induced_gF(const ModelSpace& space, const UFTForm& u) {
  const std::size_t k = u.f.dim();
  Matrix g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const std::vector<Rational> ti = u.t.col_vector(i);
      const std::vector<Rational> tj = u.t.col_vector(j);
      g(i, j) = -(space.omega_e(ti, u.f.basis().row(j)) + space.omega_e(tj, u.f.basis().row(i)));
    }
  return g;
}

Form1 decompose_form1(const Subspace& u) {
  std::vector<HVector> candidates{{1, 0}};
  for (std::size_t t = 0; t <= u.dim(); ++t) candidates.push_back({Rational(static_cast<long>(t)), 1});

  std::size_t best = 0;
  std::vector<Subspace> fibers;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    fibers.push_back(fiber(u, candidates[i]));
    if (fibers[i].dim() < fibers[best].dim()) best = i;
  }
  const HVector& h = candidates[best];
  const HBasisChange basis = HBasisChange::with_second(h);
  if (fibers[best].is_zero()) return {std::nullopt, to_uft(u, basis)};

  Subspace dec = tensor(h, fibers[best]);
  const Subspace rest = echelon_complement(u, dec);
  return {DecomposableAddend{normalize_direction(h), fibers[best], std::move(dec)}, to_uft(rest, basis)};
}

Form2 decompose_form2(const Subspace& u) {
  Form1 f1 = decompose_form1(u);
  Form2 out{{}, f1.remainder};
  if (f1.decomposable) out.decomposables.push_back(*f1.decomposable);

  const Subspace w = from_uft(f1.remainder);
  if (w.is_zero()) return out;
  const PencilSpectrum pencil = decomposable_spectrum(w);
  Subspace peeled(u.ambient());
  for (const auto& dir : pencil.directions) {
    Subspace add = tensor(dir.h, dir.fiber);
    peeled = sum(peeled, add);
    auto same = std::find_if(out.decomposables.begin(), out.decomposables.end(),
                             [&](const DecomposableAddend& a) { return a.h == dir.h; });
    if (same != out.decomposables.end()) {
      same->fiber = sum(same->fiber, dir.fiber);
      same->addend = sum(same->addend, add);
    } else {
      out.decomposables.push_back({dir.h, dir.fiber, std::move(add)});
    }
  }
  out.remainder = to_uft(echelon_complement(w, peeled), f1.remainder.h_basis);
  return out;
}

} // namespace pqh
