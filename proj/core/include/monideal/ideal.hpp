#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monideal/monomial.hpp"

namespace monideal {

/// A monomial prime (x_{i1}, ..., x_{ik}), stored as its sorted 0-based
/// index set. Ordered by cardinality, then lexicographically.
class PrimeSupport {
 public:
  PrimeSupport(std::size_t dim, std::vector<std::size_t> indices);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool contains(std::size_t index) const;
  /// Set inclusion of index sets.
  bool is_subset_of(const PrimeSupport& other) const;

  friend bool operator==(const PrimeSupport&, const PrimeSupport&) = default;
  friend std::strong_ordering operator<=>(const PrimeSupport& a, const PrimeSupport& b);

 private:
  std::size_t dim_;
  std::vector<std::size_t> indices_;
};

/// `{1,3}` with 1-based indices.
std::string to_string(const PrimeSupport& p);

/// A monomial ideal held as its unique minimal generating set.
///
/// Generators form an antichain under divisibility and are kept in
/// canonical_less order, so two ideals are equal exactly when their
/// generator sequences are. An empty generator list is the zero ideal; the
/// unit ideal is not representable.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(std::size_t dim);
  /// Minimalizes and sorts `raw`. Rejects the monomial 1 and mixed dimensions.
  static MonomialIdeal from_generators(std::size_t dim, std::vector<Monomial> raw);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  /// Largest exponent over all generators; 0 for the zero ideal.
  Exponent max_exponent() const noexcept;
  /// Coordinatewise maximum of the generators (the lcm of all of them).
  Monomial generator_lcm() const;

  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(std::size_t dim, std::vector<Monomial> gens);

  std::size_t dim_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(std::size_t dim, std::vector<Monomial> raw_gens);
bool contains_monomial(const MonomialIdeal& ideal, const Monomial& m);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// I^k via degree-k multisets of generators. Throws DomainError for k == 0.
MonomialIdeal power(const MonomialIdeal& ideal, std::uint64_t k);
MonomialIdeal radical(const MonomialIdeal& ideal);
bool is_squarefree_ideal(const MonomialIdeal& ideal);
/// The variable set when the ideal is generated by distinct variables.
std::optional<PrimeSupport> is_monomial_prime(const MonomialIdeal& ideal);
/// Checks dimensions, then compares canonical generator lists.
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);
/// Ideal containment, tested generator by generator.
bool is_subideal(const MonomialIdeal& a, const MonomialIdeal& b);

/// The prime ideal (x_i : i in support).
MonomialIdeal prime_ideal(const PrimeSupport& support);

/// `(x1^2, x1*x2, x2^3)`; the zero ideal prints as `(0)`.
std::string to_string(const MonomialIdeal& ideal);

}  // namespace monideal
