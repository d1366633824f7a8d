#include "pqh/poly.hpp"

#include "pqh/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace pqh {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

Poly Poly::constant(const Rational& c) { return Poly({c}); }
Poly Poly::x() { return Poly({Rational(0), Rational(1)}); }
Poly Poly::linear_root(const Rational& r) { return Poly({-r, Rational(1)}); }

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return (1 / lead()) * (*this);
}

Poly Poly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return Poly(d);
}

Rational Poly::eval(const Rational& t) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  return v;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return Poly(c);
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rational(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(c);
}

Poly operator*(const Rational& s, const Poly& a) {
  std::vector<Rational> c = a.c_;
  for (auto& x : c) x *= s;
  return Poly(c);
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational a = c_[static_cast<std::size_t>(k)];
    if (sgn(a) == 0) continue;
    if (first) {
      if (sgn(a) < 0) os << "-";
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    Rational mag = abs(a);
    bool unit = mag == 1;
    if (k == 0) {
      os << to_string(mag);
    } else {
      if (!unit) os << to_string(mag) << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  const Rational lb = b.lead();
  std::vector<Rational> q(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
  for (int k = a.degree(); k >= db; --k) {
    Rational f = r[static_cast<std::size_t>(k)] / lb;
    q[static_cast<std::size_t>(k - db)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Poly(q), Poly(r)};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    Rational x = a.coeff(k), y = b.coeff(k);
    if (x != y) return x < y;
  }
  return false;
}

Matrix eval_matrix(const Poly& p, const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  for (int k = p.degree(); k >= 0; --k) {
    acc = kernels::matmul(acc, m);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += p.coeff(k);
  }
  return acc;
}

Poly charpoly(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("charpoly: matrix not square");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = kernels::matmul(a, mk);
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = -trace(kernels::matmul(a, mk)) / static_cast<long>(k);
  }
  return Poly(c);
}

Poly minpoly(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("minpoly: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return Poly::constant(1);
  // Columns of `krylov` are vec(A^j); find the first dependent power.
  std::vector<Matrix> powers{Matrix::identity(n)};
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(kernels::matmul(powers.back(), a));
    Matrix krylov(n * n, k + 1);
    for (std::size_t j = 0; j <= k; ++j)
      for (std::size_t e = 0; e < n * n; ++e) krylov(e, j) = powers[j].raw()[e];
    Matrix ker = kernels::nullspace(krylov);
    if (ker.rows() == 0) continue;
    // Dependencies among the first k powers were excluded at step k-1, so
    // the kernel is one-dimensional with nonzero last entry.
    std::vector<Rational> c = ker.row_vector(0);
    return Poly(c).monic();
  }
  throw std::logic_error("minpoly: Cayley-Hamilton violated");
}

namespace {

// ---- integer polynomials ---------------------------------------------------

using ZPoly = std::vector<Integer>;  // low degree first

// Primitive integer polynomial with positive leading coefficient.
ZPoly primitive_integer(const Poly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  for (const auto& c : p.coeffs()) z.push_back(Integer(c * l));
  Integer g = 0;
  for (const auto& v : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (sgn(z.back()) < 0) g = -g;
  for (auto& v : z) v /= g;
  return z;
}

Poly to_poly(const ZPoly& z) { return Poly(std::vector<Rational>(z.begin(), z.end())); }

// ---- square-free decomposition (Yun) ---------------------------------------

std::vector<std::pair<Poly, int>> squarefree(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  Poly a = f.monic();
  Poly b = a.derivative();
  Poly c = gcd(a, b);
  Poly w = divmod(a, c).quotient;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly z = divmod(w, y).quotient;
    if (z.degree() > 0) out.emplace_back(z.monic(), i);
    w = y;
    c = divmod(c, y).quotient;
    ++i;
  }
  return out;
}

// ---- arithmetic in F_p[x], p < 2^31 ----------------------------------------

using PPoly = std::vector<std::int64_t>;  // low degree first, trimmed

struct Fp {
  std::int64_t p;

  std::int64_t norm(std::int64_t v) const { return ((v % p) + p) % p; }
  std::int64_t inv(std::int64_t a) const {
    std::int64_t r = 1, b = norm(a), e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  static void trim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  PPoly reduce(const ZPoly& z) const {
    PPoly a;
    for (const auto& c : z) {
      Integer r = c % p;
      a.push_back(norm(r.get_si()));
    }
    trim(a);
    return a;
  }
  PPoly sub(PPoly a, const PPoly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = norm(a[i] - b[i]);
    trim(a);
    return a;
  }
  PPoly mul(const PPoly& a, const PPoly& b) const {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
  }
  // Quotient and remainder; b nonzero.
  std::pair<PPoly, PPoly> divmod(PPoly a, const PPoly& b) const {
    if (a.size() < b.size()) return {{}, a};
    PPoly q(a.size() - b.size() + 1, 0);
    const std::int64_t li = inv(b.back());
    for (std::size_t k = a.size(); k-- >= b.size();) {
      const std::int64_t c = a[k] * li % p;
      q[k - (b.size() - 1)] = c;
      for (std::size_t j = 0; j < b.size(); ++j) {
        const std::size_t idx = k - (b.size() - 1) + j;
        a[idx] = norm(a[idx] - c * b[j]);
      }
      if (k == b.size() - 1) break;
    }
    trim(a);
    trim(q);
    return {q, a};
  }
  PPoly rem(const PPoly& a, const PPoly& b) const { return divmod(a, b).second; }
  PPoly monic(PPoly a) const {
    const std::int64_t li = inv(a.back());
    for (auto& c : a) c = c * li % p;
    return a;
  }
  PPoly gcd(PPoly a, PPoly b) const {
    while (!b.empty()) {
      PPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return a.empty() ? a : monic(a);
  }
  // s, t with s a + t b = 1 for coprime a, b.
  std::pair<PPoly, PPoly> bezout(const PPoly& a, const PPoly& b) const {
    PPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      PPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const std::int64_t li = inv(r0.back());
    for (auto& c : s0) c = c * li % p;
    for (auto& c : t0) c = c * li % p;
    return {s0, t0};
  }
  PPoly powmod(PPoly base, Integer e, const PPoly& m) const {
    PPoly r{1};
    base = rem(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = rem(mul(r, base), m);
      base = rem(mul(base, base), m);
      e >>= 1;
    }
    return r;
  }
  PPoly derivative(const PPoly& a) const {
    PPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<std::int64_t>(i) % p);
    trim(d);
    return d;
  }
};

// Equal-degree splitting (Cantor-Zassenhaus) of a monic product of
// irreducibles of degree d; p odd.
void split_equal_degree(const Fp& F, const PPoly& f, std::size_t d, std::mt19937_64& rng, std::vector<PPoly>& out) {
  if (f.size() - 1 == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(F.p), d);
  e = (e - 1) / 2;
  for (;;) {
    PPoly a(f.size() - 1);
    for (auto& c : a) c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(F.p));
    Fp::trim(a);
    if (a.empty()) continue;
    const PPoly g = F.gcd(F.sub(F.powmod(a, e, f), PPoly{1}), f);
    if (g.size() > 1 && g.size() < f.size()) {
      split_equal_degree(F, g, d, rng, out);
      split_equal_degree(F, F.divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic square-free f over F_p.
std::vector<PPoly> factor_mod_p(const Fp& F, PPoly f) {
  std::vector<PPoly> out;
  std::mt19937_64 rng(0x5eed);
  const PPoly x{0, 1};
  PPoly h = x;
  for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d) {
    h = F.powmod(h, Integer(static_cast<long>(F.p)), f);
    const PPoly g = F.gcd(F.sub(h, x), f);
    if (g.size() > 1) {
      split_equal_degree(F, g, d, rng, out);
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
  }
  if (f.size() > 1) out.push_back(F.monic(f));
  return out;
}

// ---- Hensel lifting and recombination --------------------------------------

ZPoly zmod(ZPoly a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

ZPoly lift_pp(const PPoly& a) { return ZPoly(a.begin(), a.end()); }

// Lifts f = g h (mod p), g monic, gcd(g, h) = 1 mod p, to f = g h (mod p^k)
// one power of p at a time.
std::pair<ZPoly, ZPoly> hensel(const Fp& F, const ZPoly& f, PPoly g0, PPoly h0, std::size_t k) {
  const auto [s, t] = F.bezout(g0, h0);  // s g + t h = 1
  ZPoly g = lift_pp(g0), h = lift_pp(h0);
  Integer pj = F.p;
  for (std::size_t j = 1; j < k; ++j) {
    ZPoly e = zmul(g, h);
    e.resize(std::max(e.size(), f.size()), Integer(0));
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = (i < f.size() ? f[i] : Integer(0)) - e[i];
    for (auto& c : e) c /= pj;  // exact: f = g h mod p^j
    const PPoly ep = F.reduce(e);
    const PPoly a = F.rem(F.mul(t, ep), g0);                    // h a = e mod g
    const PPoly b = F.divmod(F.sub(ep, F.mul(h0, a)), g0).first;  // g b + h a = e
    const ZPoly az = lift_pp(a), bz = lift_pp(b);
    if (g.size() < az.size()) g.resize(az.size(), Integer(0));
    if (h.size() < bz.size()) h.resize(bz.size(), Integer(0));
    for (std::size_t i = 0; i < az.size(); ++i) g[i] += pj * az[i];
    for (std::size_t i = 0; i < bz.size(); ++i) h[i] += pj * bz[i];
    pj *= F.p;
    g = zmod(g, pj);
    h = zmod(h, pj);
  }
  return {g, h};
}

bool is_prime_small(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Irreducible factors (primitive, positive leading coefficient) of a
// primitive square-free integer polynomial of degree >= 1.
std::vector<ZPoly> zassenhaus(ZPoly f) {
  const std::size_t n = f.size() - 1;
  if (n == 1) return {f};

  // Prime with f square-free mod p and p not dividing lc(f); among the
  // first few such primes keep the one with the fewest modular factors.
  std::optional<Fp> best;
  std::vector<PPoly> best_factors;
  int good = 0;
  for (std::int64_t p = 3; good < 5; p += 2) {
    if (!is_prime_small(p)) continue;
    const Fp F{p};
    const PPoly fp = F.reduce(f);
    if (fp.size() != f.size()) continue;
    if (F.gcd(fp, F.derivative(fp)).size() != 1) continue;
    ++good;
    auto fac = factor_mod_p(F, F.monic(fp));
    if (!best || fac.size() < best_factors.size()) {
      best = F;
      best_factors = std::move(fac);
    }
    if (best_factors.size() == 1) return {f};
  }
  const Fp F = *best;

  // Any factor's coefficients are bounded by 2^n |lc| ||f||_1 (Mignotte).
  Integer norm1 = 0;
  for (const auto& c : f) norm1 += abs(c);
  Integer bound = 2 * abs(f.back()) * norm1;
  bound <<= n;
  std::size_t k = 1;
  Integer pk = F.p;
  while (pk <= bound) {
    pk *= F.p;
    ++k;
  }

  // Lift the modular factors one at a time against the remaining cofactor.
  std::vector<ZPoly> lifted;
  ZPoly rest = f;
  const Integer lc_inv_seed = f.back();
  std::vector<PPoly> todo = best_factors;
  while (todo.size() > 1) {
    const PPoly g0 = todo.back();
    todo.pop_back();
    PPoly h0{F.norm(Integer(lc_inv_seed % F.p).get_si())};
    for (const auto& u : todo) h0 = F.mul(h0, u);
    auto [g, h] = hensel(F, zmod(rest, pk), g0, h0, k);
    lifted.push_back(std::move(g));
    rest = std::move(h);
  }
  // The last factor is the cofactor divided by the leading coefficient.
  {
    Integer inv_lc;
    mpz_invert(inv_lc.get_mpz_t(), Integer(f.back() % pk).get_mpz_t(), pk.get_mpz_t());
    for (auto& c : rest) c *= inv_lc;
    lifted.push_back(zmod(rest, pk));
  }

  // Recombine subsets, smallest first.
  std::vector<ZPoly> out;
  std::vector<ZPoly> pool = lifted;
  ZPoly cur = f;
  auto symmetric = [&](ZPoly a) {
    const Integer half = pk / 2;
    for (auto& c : a)
      if (c > half) c -= pk;
    return a;
  };
  for (std::size_t size = 1; 2 * size <= pool.size();) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      ZPoly g{Integer(cur.back())};
      for (std::size_t i : idx) g = zmod(zmul(g, pool[i]), pk);
      const Poly gq = to_poly(symmetric(g));
      if (gq.degree() > 0) {
        const DivMod dm = pqh::divmod(to_poly(cur), gq);
        if (dm.remainder.is_zero()) {
          const ZPoly prim = primitive_integer(gq);
          out.push_back(prim);
          cur = primitive_integer(pqh::divmod(to_poly(cur), to_poly(prim)).quotient);
          for (std::size_t i = size; i-- > 0;) pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx[i]));
          found = true;
          break;
        }
      }
      // next combination
      std::size_t i = size;
      while (i-- > 0 && idx[i] == pool.size() - size + i) {
      }
      if (i == static_cast<std::size_t>(-1)) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (cur.size() > 1) out.push_back(cur);
  return out;
}

} // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  for (auto [part, mult] : squarefree(p))
    for (const auto& z : zassenhaus(primitive_integer(part))) out.emplace_back(to_poly(z).monic(), mult);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (poly_less(a.first, b.first)) return true;
    if (poly_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

std::vector<Rational> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  for (const auto& [q, mult] : factor(p))
    if (q.degree() == 1) roots.push_back(-q.coeff(0));
  std::sort(roots.begin(), roots.end());
  return roots;
}

int real_root_count(const Poly& p) {
  if (p.degree() <= 0) return 0;
  Poly sqf = divmod(p, gcd(p, p.derivative())).quotient;
  std::vector<Poly> seq{sqf, sqf.derivative()};
  while (seq.back().degree() > 0) {
    Poly r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(Rational(-1) * r);
  }
  auto changes = [&](bool at_plus_inf) {
    int count = 0, prev = 0;
    for (const auto& s : seq) {
      int v = sgn(s.lead());
      if (!at_plus_inf && s.degree() % 2 == 1) v = -v;
      if (v == 0) continue;
      if (prev != 0 && v != prev) ++count;
      prev = v;
    }
    return count;
  };
  return changes(false) - changes(true);
}

} // namespace pqh
