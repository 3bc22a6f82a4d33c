#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace monideal {

using Exponent = std::uint64_t;

/// A monomial x1^e1 * ... * xd^ed stored as its exponent vector.
///
/// Variable indices are 0-based here; the text forms use x1..xd. The all-zero
/// vector is the monomial 1. Values are immutable once built.
class Monomial {
 public:
  /// The monomial 1 in `dim` variables. Throws DomainError when dim == 0.
  explicit Monomial(std::size_t dim);
  explicit Monomial(std::vector<Exponent> exponents);

  /// x_{index}^{exponent} in `dim` variables.
  static Monomial variable(std::size_t dim, std::size_t index, Exponent exponent = 1);

  std::size_t dim() const noexcept { return exps_.size(); }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }

  /// Sum of exponents, overflow-checked.
  Exponent degree() const;
  Exponent max_exponent() const noexcept;
  std::size_t support_size() const noexcept;

  bool is_one() const noexcept { return support_size() == 0; }
  /// True for x_j^e with e >= 1 (a single variable in the support).
  bool is_pure_power() const noexcept { return support_size() == 1; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Plain lexicographic order on exponent vectors; usable as a map key.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<Exponent> exps_;
};

Monomial mul(const Monomial& u, const Monomial& v);
Monomial mpow(const Monomial& u, std::uint64_t k);
/// True when u | v, i.e. u <= v componentwise.
bool divides(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);
Monomial lcm(const Monomial& u, const Monomial& v);
bool coprime(const Monomial& u, const Monomial& v);
/// 0-based indices of the variables with positive exponent, ascending.
std::vector<std::size_t> support(const Monomial& m);
Monomial rad_monomial(const Monomial& m);
bool is_squarefree_monomial(const Monomial& m);

/// Canonical generator order: total degree first, then graded reverse
/// lexicographic (smaller exponent in the last differing variable first).
bool canonical_less(const Monomial& a, const Monomial& b);

/// `x1^2*x3`, `x2`, or `1`.
std::string to_string(const Monomial& m);

namespace detail {
void require_same_dim(std::size_t a, std::size_t b, const char* op);
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);
}  // namespace detail

}  // namespace monideal
