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

#ifndef HYPERORBITS_RINGS_HPP
#define HYPERORBITS_RINGS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hyperorbits/forms.hpp"
#include "hyperorbits/integer.hpp"
#include "hyperorbits/matrix.hpp"

namespace hyperorbits {

class AlgebraElement;

/// K_f = Q[x]/(f(x,1)) with theta the image of x. Requires f0 != 0.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  static std::shared_ptr<const Algebra> create(const BinaryForm& f);

  const BinaryForm& form() const { return form_; }
  int degree() const { return form_.degree(); }

  AlgebraElement element(std::vector<Rational> coords) const;
  AlgebraElement one() const;
  AlgebraElement theta() const;
  /// a*theta + b.
  AlgebraElement linear(const Integer& a, const Integer& b) const;
  /// zeta_k for 0 <= k <= n, with zeta_0 = 1 and zeta_n = -f_n.
  AlgebraElement zeta(int k) const;

  /// Power-basis product.
  std::vector<Rational> multiply(const std::vector<Rational>& u, const std::vector<Rational>& v) const;

 private:
  explicit Algebra(const BinaryForm& f);
  BinaryForm form_;
  // theta^n = sum_i reduction_[i] theta^i
  std::vector<Rational> reduction_;
};

/// Element of K_f in power-basis coordinates (1, theta, ..., theta^(n-1)).
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(std::shared_ptr<const Algebra> algebra, std::vector<Rational> coords);

  const Algebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const Algebra>& algebra_ptr() const { return algebra_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;

  friend AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v);
  friend AlgebraElement operator-(const AlgebraElement& u, const AlgebraElement& v);
  friend AlgebraElement operator*(const AlgebraElement& u, const AlgebraElement& v);
  friend AlgebraElement operator*(const Rational& s, const AlgebraElement& u);
  friend AlgebraElement operator/(const AlgebraElement& u, const AlgebraElement& v);
  AlgebraElement operator-() const;
  friend bool operator==(const AlgebraElement& u, const AlgebraElement& v);

  /// Throws ValidationError when the element is a zero divisor.
  AlgebraElement inverse() const;
  AlgebraElement pow(long e) const;

  /// Column j holds the coordinates of this * theta^j.
  RatMatrix multiplication_matrix() const;
  Rational norm() const;
  Rational trace() const;

  /// Coefficients as a polynomial in theta with positive integer scaling
  /// removed: returns (numerator polynomial, denominator > 0).
  IntPoly numerator(Integer* denominator = nullptr) const;

 private:
  std::shared_ptr<const Algebra> algebra_;
  std::vector<Rational> coords_;
};

AlgebraElement algebra_mul(const AlgebraElement& u, const AlgebraElement& v);

/// The rank-n ring R_f with basis (1, zeta_1, ..., zeta_{n-1}). Cheap to copy.
class RankNRing {
 public:
  explicit RankNRing(const BinaryForm& f);

  const BinaryForm& form() const { return data_->algebra->form(); }
  int rank() const { return form().degree(); }
  const std::shared_ptr<const Algebra>& algebra() const { return data_->algebra; }

  /// Coordinates of b_i b_j in the ring basis, where b_0 = 1, b_k = zeta_k.
  const std::vector<Integer>& structure(int i, int j) const;
  std::vector<Integer> multiply(const std::vector<Integer>& u, const std::vector<Integer>& v) const;

  AlgebraElement basis_element(int k) const;
  /// Row k: power-basis coordinates of b_k (integers).
  const IntMatrix& zeta_matrix() const { return data_->zeta; }
  std::vector<Rational> to_ring_coords(const AlgebraElement& x) const;
  AlgebraElement from_ring_coords(const std::vector<Rational>& c) const;

 private:
  struct Data {
    std::shared_ptr<const Algebra> algebra;
    std::vector<std::vector<Integer>> table;  // n*n entries
    IntMatrix zeta;
  };
  std::shared_ptr<const Data> data_;
};

RankNRing ring_from_form(const BinaryForm& f);

/// det of the trace pairing on the ring basis.
Integer ring_discriminant(const RankNRing& R);

/// Z-lattice of full rank in K_f with an ordered basis.
class BasedIdeal {
 public:
  BasedIdeal(RankNRing ring, std::vector<AlgebraElement> basis);

  const RankNRing& ring() const { return ring_; }
  const std::vector<AlgebraElement>& basis() const { return basis_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  /// Row i: ring-basis coordinates of basis element i.
  const RatMatrix& transition() const { return transition_; }
  /// Positive norm |det transition|.
  const Rational& norm() const { return norm_; }
  const Rational& signed_norm() const { return signed_norm_; }

  /// Coordinates of x in this basis.
  std::vector<Rational> coordinates(const AlgebraElement& x) const;
  bool contains(const AlgebraElement& x) const;
  BasedIdeal scaled(const AlgebraElement& kappa) const;

 private:
  RankNRing ring_;
  std::vector<AlgebraElement> basis_;
  RatMatrix transition_;
  RatMatrix inverse_;
  Rational norm_;
  Rational signed_norm_;
};

/// I_f(k) = <1, theta, ..., theta^k, zeta_{k+1}, ..., zeta_{n-1}> for
/// 0 <= k <= n-1; k = -1 gives the inverse ideal with basis
/// (zeta_1/theta, ..., zeta_n/theta).
BasedIdeal ideal_power_basis(const RankNRing& R, int k);
BasedIdeal ideal_power_basis(const BinaryForm& f, int k);

Rational ideal_norm(const BasedIdeal& I);

/// Lattice spanned by all pairwise products, in Hermite normal form.
BasedIdeal ideal_product(const BasedIdeal& I, const BasedIdeal& J);
/// Same Z-lattice (bases may differ).
bool same_lattice(const BasedIdeal& I, const BasedIdeal& J);

/// N(a*theta + b) = f(-b, a) / f0.
Rational norm_linear(const BinaryForm& f, const Integer& a, const Integer& b);

enum class SquareClassVerdict { Equal, Distinct, Inconclusive };
std::string to_string(SquareClassVerdict v);

struct SquareClassResult {
  SquareClassVerdict verdict = SquareClassVerdict::Inconclusive;
  int real_places = 0;
  int primes_used = 0;
  /// Empty unless Distinct: "real root k" or "p=..., factor degree d".
  std::string witness;
};

/// Tests whether alpha/beta is a square using real signs and residue
/// algebras at primes of good reduction. Distinct is certain; Equal means
/// `trials` primes found no obstruction.
SquareClassResult same_square_class(const AlgebraElement& alpha, const AlgebraElement& beta,
                                    int trials = 50, std::uint64_t seed = 0);

}  // namespace hyperorbits

#endif  // HYPERORBITS_RINGS_HPP
