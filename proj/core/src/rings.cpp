// Copyright 2026 The hyperorbits Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hyperorbits/rings.hpp"

#include <utility>

#include "hyperorbits/error.hpp"
#include "hyperorbits/fp_poly.hpp"
#include "hyperorbits/sturm.hpp"

namespace hyperorbits {

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(const BinaryForm& f) : form_(f) {
  if (f[0] == 0) throw ValidationError("K_f needs a nonzero leading coefficient f0");
  const int n = f.degree();
  reduction_.resize(n);
  for (int i = 0; i < n; ++i) reduction_[i] = Rational(-f[n - i], f[0]);
  for (auto& r : reduction_) r.canonicalize();
}

std::shared_ptr<const Algebra> Algebra::create(const BinaryForm& f) {
  return std::shared_ptr<const Algebra>(new Algebra(f));
}

std::vector<Rational> Algebra::multiply(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
  const int n = degree();
  std::vector<Rational> prod(2 * n - 1, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (v[j] != 0) prod[i + j] += u[i] * v[j];
  }
  for (int k = 2 * n - 2; k >= n; --k) {
    if (prod[k] == 0) continue;
    Rational c = prod[k];
    prod[k] = 0;
    for (int i = 0; i < n; ++i) prod[k - n + i] += c * reduction_[i];
  }
  prod.resize(n);
  return prod;
}

AlgebraElement Algebra::element(std::vector<Rational> coords) const {
  if (static_cast<int>(coords.size()) != degree())
    throw ValidationError("algebra element needs exactly n coordinates");
  return AlgebraElement(shared_from_this(), std::move(coords));
}

AlgebraElement Algebra::one() const {
  std::vector<Rational> c(degree(), Rational(0));
  c[0] = 1;
  return element(std::move(c));
}

AlgebraElement Algebra::theta() const {
  std::vector<Rational> c(degree(), Rational(0));
  c[1 % degree()] = 1;
  return element(std::move(c));
}

AlgebraElement Algebra::linear(const Integer& a, const Integer& b) const {
  std::vector<Rational> c(degree(), Rational(0));
  c[0] = b;
  c[1] = a;
  return element(std::move(c));
}

AlgebraElement Algebra::zeta(int k) const {
  const int n = degree();
  if (k < 0 || k > n) throw ValidationError("zeta index out of range");
  std::vector<Rational> c(n, Rational(0));
  if (k == 0) {
    c[0] = 1;
  } else if (k == n) {
    c[0] = -form_[n];
  } else {
    for (int i = 0; i < k; ++i) c[k - i] = form_[i];
  }
  return element(std::move(c));
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(std::shared_ptr<const Algebra> algebra, std::vector<Rational> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (!algebra_ || static_cast<int>(coords_.size()) != algebra_->degree())
    throw ValidationError("algebra element needs exactly n coordinates");
}

namespace {

const Algebra& common(const AlgebraElement& u, const AlgebraElement& v) {
  if (u.algebra_ptr() != v.algebra_ptr() && !(u.algebra().form() == v.algebra().form()))
    throw ValidationError("elements belong to different algebras");
  return u.algebra();
}

}  // namespace

bool AlgebraElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v) {
  common(u, v);
  std::vector<Rational> c = u.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += v.coords_[i];
  return AlgebraElement(u.algebra_, std::move(c));
}

AlgebraElement operator-(const AlgebraElement& u, const AlgebraElement& v) {
  common(u, v);
  std::vector<Rational> c = u.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= v.coords_[i];
  return AlgebraElement(u.algebra_, std::move(c));
}

AlgebraElement operator*(const AlgebraElement& u, const AlgebraElement& v) {
  return AlgebraElement(u.algebra_, common(u, v).multiply(u.coords_, v.coords_));
}

AlgebraElement operator*(const Rational& s, const AlgebraElement& u) {
  std::vector<Rational> c = u.coords_;
  for (auto& x : c) x *= s;
  return AlgebraElement(u.algebra_, std::move(c));
}

AlgebraElement operator/(const AlgebraElement& u, const AlgebraElement& v) { return u * v.inverse(); }

AlgebraElement AlgebraElement::operator-() const { return Rational(-1) * *this; }

bool operator==(const AlgebraElement& u, const AlgebraElement& v) {
  common(u, v);
  return u.coords_ == v.coords_;
}

RatMatrix AlgebraElement::multiplication_matrix() const {
  const int n = algebra_->degree();
  RatMatrix m(n, n, Rational(0));
  std::vector<Rational> col = coords_;
  const std::vector<Rational> th = algebra_->theta().coords();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m(i, j) = col[i];
    if (j + 1 < n) col = algebra_->multiply(col, th);
  }
  return m;
}

AlgebraElement AlgebraElement::inverse() const {
  const int n = algebra_->degree();
  std::vector<Rational> e(n, Rational(0));
  e[0] = 1;
  auto x = solve(multiplication_matrix(), e);
  if (!x) throw ValidationError("element is not invertible in K_f");
  return AlgebraElement(algebra_, std::move(*x));
}

AlgebraElement AlgebraElement::pow(long e) const {
  AlgebraElement base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  AlgebraElement result = algebra_->one();
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Rational AlgebraElement::norm() const { return determinant(multiplication_matrix()); }

Rational AlgebraElement::trace() const {
  RatMatrix m = multiplication_matrix();
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

IntPoly AlgebraElement::numerator(Integer* denominator) const {
  Integer d = 1;
  for (const auto& c : coords_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  IntPoly p(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) p[i] = coords_[i].get_num() * (d / coords_[i].get_den());
  trim(p);
  if (denominator) *denominator = d;
  return p;
}

AlgebraElement algebra_mul(const AlgebraElement& u, const AlgebraElement& v) { return u * v; }

// ---------------------------------------------------------------------------
// RankNRing

RankNRing::RankNRing(const BinaryForm& f) {
  auto data = std::make_shared<Data>();
  data->algebra = Algebra::create(f);
  const int n = f.degree();
  data->table.assign(n * n, std::vector<Integer>(n, Integer(0)));
  for (int j = 0; j < n; ++j) {
    data->table[j][j] = 1;        // 1 * b_j
    data->table[j * n][j] = 1;    // b_j * 1
  }
  for (int i = 1; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      std::vector<Integer> c(n, Integer(0));
      for (int k = j + 1; k <= std::min(i + j, n); ++k) {
        if (k == n)
          c[0] -= f[i + j - k] * f[n];
        else
          c[k] += f[i + j - k];
      }
      for (int k = std::max(i + j - n, 1); k <= i; ++k) c[k] -= f[i + j - k];
      data->table[i * n + j] = c;
      data->table[j * n + i] = c;
    }
  }
  data->zeta = IntMatrix(n, n, Integer(0));
  data->zeta(0, 0) = 1;
  for (int k = 1; k < n; ++k)
    for (int i = 0; i < k; ++i) data->zeta(k, k - i) = f[i];
  data_ = std::move(data);
}

const std::vector<Integer>& RankNRing::structure(int i, int j) const {
  const int n = rank();
  if (i < 0 || j < 0 || i >= n || j >= n) throw ValidationError("basis index out of range");
  return data_->table[i * n + j];
}

std::vector<Integer> RankNRing::multiply(const std::vector<Integer>& u, const std::vector<Integer>& v) const {
  const int n = rank();
  std::vector<Integer> out(n, Integer(0));
  for (int i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      Integer s = u[i] * v[j];
      const auto& c = data_->table[i * n + j];
      for (int k = 0; k < n; ++k)
        if (c[k] != 0) out[k] += s * c[k];
    }
  }
  return out;
}

AlgebraElement RankNRing::basis_element(int k) const {
  if (k < 0 || k >= rank()) throw ValidationError("basis index out of range");
  return algebra()->zeta(k);
}

std::vector<Rational> RankNRing::to_ring_coords(const AlgebraElement& x) const {
  const int n = rank();
  const auto& z = data_->zeta;
  std::vector<Rational> rest = x.coords();
  std::vector<Rational> c(n, Rational(0));
  // zeta is lower triangular with diagonal (1, f0, ..., f0).
  for (int k = n - 1; k >= 0; --k) {
    c[k] = rest[k] / Rational(z(k, k));
    if (c[k] == 0) continue;
    for (int i = 0; i <= k; ++i)
      if (z(k, i) != 0) rest[i] -= c[k] * z(k, i);
  }
  return c;
}

AlgebraElement RankNRing::from_ring_coords(const std::vector<Rational>& c) const {
  const int n = rank();
  if (static_cast<int>(c.size()) != n) throw ValidationError("ring coordinates need n entries");
  std::vector<Rational> x(n, Rational(0));
  for (int k = 0; k < n; ++k) {
    if (c[k] == 0) continue;
    for (int i = 0; i <= k; ++i) x[i] += c[k] * data_->zeta(k, i);
  }
  return algebra()->element(std::move(x));
}

RankNRing ring_from_form(const BinaryForm& f) { return RankNRing(f); }

Integer ring_discriminant(const RankNRing& R) {
  const BinaryForm& f = R.form();
  const int n = R.rank();
  // Power sums of the roots of f(x,1) by Newton's identities.
  std::vector<Rational> s(n, Rational(0));
  s[0] = n;
  for (int j = 1; j < n; ++j) {
    Rational acc = Rational(j) * f[j];
    for (int i = 1; i < j; ++i) acc += f[i] * s[j - i];
    s[j] = -acc / f[0];
  }
  std::vector<Rational> tr(n, Rational(0));
  tr[0] = n;
  for (int k = 1; k < n; ++k)
    for (int i = 0; i < k; ++i) tr[k] += f[i] * s[k - i];
  IntMatrix pairing(n, n, Integer(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational t = 0;
      const auto& c = R.structure(i, j);
      for (int k = 0; k < n; ++k) t += c[k] * tr[k];
      if (t.get_den() != 1) throw ValidationError("trace pairing is not integral");
      pairing(i, j) = t.get_num();
    }
  return determinant(std::move(pairing));
}

// ---------------------------------------------------------------------------
// BasedIdeal

BasedIdeal::BasedIdeal(RankNRing ring, std::vector<AlgebraElement> basis)
    : ring_(std::move(ring)), basis_(std::move(basis)) {
  const int n = ring_.rank();
  if (static_cast<int>(basis_.size()) != n) throw ValidationError("based ideal needs n basis elements");
  transition_ = RatMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    auto c = ring_.to_ring_coords(basis_[i]);
    for (int j = 0; j < n; ++j) transition_(i, j) = c[j];
  }
  signed_norm_ = determinant(transition_);
  if (signed_norm_ == 0) throw ValidationError("ideal basis is linearly dependent");
  norm_ = abs(signed_norm_);
  inverse_ = *inverse(transition_);
}

std::vector<Rational> BasedIdeal::coordinates(const AlgebraElement& x) const {
  auto y = ring_.to_ring_coords(x);
  const int n = rank();
  std::vector<Rational> c(n, Rational(0));
  for (int j = 0; j < n; ++j) {
    if (y[j] == 0) continue;
    for (int i = 0; i < n; ++i) c[i] += y[j] * inverse_(j, i);
  }
  return c;
}

bool BasedIdeal::contains(const AlgebraElement& x) const {
  for (const auto& c : coordinates(x))
    if (c.get_den() != 1) return false;
  return true;
}

BasedIdeal BasedIdeal::scaled(const AlgebraElement& kappa) const {
  std::vector<AlgebraElement> b;
  b.reserve(basis_.size());
  for (const auto& e : basis_) b.push_back(kappa * e);
  return BasedIdeal(ring_, std::move(b));
}

BasedIdeal ideal_power_basis(const RankNRing& R, int k) {
  const int n = R.rank();
  if (k < -1 || k > n - 1) throw ValidationError("ideal power index out of range");
  const auto& K = *R.algebra();
  std::vector<AlgebraElement> basis;
  if (k == -1) {
    const BinaryForm& f = R.form();
    for (int j = 1; j <= n; ++j) {
      std::vector<Rational> c(n, Rational(0));
      for (int i = 0; i < j; ++i) c[j - 1 - i] = f[i];
      basis.push_back(K.element(std::move(c)));
    }
  } else {
    AlgebraElement power = K.one();
    for (int i = 0; i <= k; ++i) {
      basis.push_back(power);
      power = power * K.theta();
    }
    for (int j = k + 1; j < n; ++j) basis.push_back(K.zeta(j));
  }
  return BasedIdeal(R, std::move(basis));
}

BasedIdeal ideal_power_basis(const BinaryForm& f, int k) { return ideal_power_basis(RankNRing(f), k); }

Rational ideal_norm(const BasedIdeal& I) { return I.norm(); }

namespace {

// HNF of the lattice spanned by `rows` (ring coordinates), returned as a
// basis of algebra elements.
BasedIdeal lattice_from_rows(const RankNRing& R, const std::vector<std::vector<Rational>>& rows) {
  const int n = R.rank();
  Integer d = 1;
  for (const auto& r : rows)
    for (const auto& c : r) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  IntMatrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < n; ++j) {
      Rational scaled = rows[i][j] * d;
      m(i, j) = scaled.get_num();
    }
  IntMatrix h = hermite_normal_form(m);
  if (static_cast<int>(h.rows()) != n) throw ValidationError("lattice is not of full rank");
  std::vector<AlgebraElement> basis;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> c(n);
    for (int j = 0; j < n; ++j) {
      c[j] = Rational(h(i, j), d);
      c[j].canonicalize();
    }
    basis.push_back(R.from_ring_coords(c));
  }
  return BasedIdeal(R, std::move(basis));
}

}  // namespace

BasedIdeal ideal_product(const BasedIdeal& I, const BasedIdeal& J) {
  const RankNRing& R = I.ring();
  std::vector<std::vector<Rational>> rows;
  for (const auto& a : I.basis())
    for (const auto& b : J.basis()) rows.push_back(R.to_ring_coords(a * b));
  return lattice_from_rows(R, rows);
}

bool same_lattice(const BasedIdeal& I, const BasedIdeal& J) {
  for (const auto& b : J.basis())
    if (!I.contains(b)) return false;
  for (const auto& b : I.basis())
    if (!J.contains(b)) return false;
  return true;
}

Rational norm_linear(const BinaryForm& f, const Integer& a, const Integer& b) {
  if (f[0] == 0) throw ValidationError("norm_linear needs f0 != 0");
  Integer v = evaluate(f, -b, a);
  if (v == 0) throw ValidationError("a*theta + b is not invertible: f has the rational root (-b : a)");
  Rational out(v, f[0]);
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------
// Square classes

std::string to_string(SquareClassVerdict v) {
  switch (v) {
    case SquareClassVerdict::Equal:
      return "equal";
    case SquareClassVerdict::Distinct:
      return "distinct";
    case SquareClassVerdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

// Sign of h(r) at the real root of `chain` isolated by `iv`; h(r) != 0.
int sign_at_root(const SturmSequence& chain, RootInterval iv, const IntPoly& h) {
  if (degree(h) <= 0) return degree(h) < 0 ? 0 : sgn(h[0]);
  SturmSequence hchain(h);
  for (;;) {
    if (iv.lo == iv.hi) return sign_at(h, iv.lo);
    if (sign_at(h, iv.lo) != 0 && sign_at(h, iv.hi) != 0 && hchain.count(iv.lo, iv.hi) == 0)
      return sign_at(h, iv.hi);
    iv = bisect(chain, iv);
  }
}

constexpr std::uint64_t kSquareClassPrimeLimit = 200000;

}  // namespace

SquareClassResult same_square_class(const AlgebraElement& alpha, const AlgebraElement& beta, int trials,
                                    std::uint64_t seed) {
  const Algebra& K = common(alpha, beta);
  const BinaryForm& f = K.form();
  if (alpha.norm() == 0 || beta.norm() == 0) throw ValidationError("square classes need invertible elements");
  Integer disc = discriminant(f);
  if (disc == 0) throw ValidationError("square classes need a nonzero discriminant");
  SquareClassResult out;
  AlgebraElement h = alpha * beta;
  Integer den;
  IntPoly hnum = h.numerator(&den);

  IntPoly fx = f.dehomogenized();
  SturmSequence chain(fx);
  auto roots = isolate_real_roots(fx);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    ++out.real_places;
    if (sign_at_root(chain, roots[k], hnum) < 0) {
      out.verdict = SquareClassVerdict::Distinct;
      out.witness = "real root " + std::to_string(k);
      return out;
    }
  }

  Integer bad = f[0] * disc * den;
  for (std::uint64_t p = 3; p < kSquareClassPrimeLimit && out.primes_used < trials; p += 2) {
    if (!is_prime(p) || mpz_fdiv_ui(bad.get_mpz_t(), p) == 0) continue;
    PrimeField F{p};
    FpPoly hp = fp_mul(F, fp_reduce(F, hnum), FpPoly{mod_u64(den, p)});
    bool usable = true;
    std::string witness;
    for (const auto& [g, mult] : fp_factor(F, fp_reduce(F, fx), seed)) {
      FpPoly u = fp_mod(F, hp, g);
      if (u.empty()) {
        usable = false;
        break;
      }
      int d = fp_degree(g);
      Integer e = (ipow(Integer(static_cast<unsigned long>(p)), d) - 1) / 2;
      FpPoly r = fp_powmod(F, u, e, g);
      if (!(r.size() == 1 && r[0] == 1) && witness.empty())
        witness = "p=" + std::to_string(p) + ", factor degree " + std::to_string(d);
    }
    if (!usable) continue;
    if (!witness.empty()) {
      out.verdict = SquareClassVerdict::Distinct;
      out.witness = witness;
      return out;
    }
    ++out.primes_used;
  }
  if (out.primes_used == 0) throw ValidationError("no primes of good reduction below the search limit");
  out.verdict = out.primes_used >= trials ? SquareClassVerdict::Equal : SquareClassVerdict::Inconclusive;
  return out;
}

}  // namespace hyperorbits
