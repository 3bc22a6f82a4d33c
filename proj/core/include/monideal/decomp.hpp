#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "monideal/ideal.hpp"
#include "monideal/monomial.hpp"

namespace monideal {

/// An ideal (x_{i1}^{e1}, ..., x_{ik}^{ek}) generated by pure powers of
/// distinct variables. These are exactly the irreducible monomial ideals.
class ParametricIdeal {
 public:
  struct Assignment {
    std::size_t index;  // 0-based variable
    Exponent exponent;  // >= 1

    friend bool operator==(const Assignment&, const Assignment&) = default;
  };

  /// Sorts by index; rejects duplicates, zero exponents and an empty list.
  ParametricIdeal(std::size_t dim, std::vector<Assignment> assignments);

  /// Succeeds when every minimal generator is a pure power.
  static ParametricIdeal from_ideal(const MonomialIdeal& ideal);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Assignment>& assignments() const noexcept { return assignments_; }
  std::vector<std::size_t> indices() const;
  std::vector<Exponent> exponents() const;
  /// The radical (x_{i1}, ..., x_{ik}).
  PrimeSupport support() const;

  bool contains(const Monomial& m) const;
  /// Ideal inclusion: `other` is contained in `*this`.
  bool contains(const ParametricIdeal& other) const;
  MonomialIdeal to_ideal() const;

  friend bool operator==(const ParametricIdeal&, const ParametricIdeal&) = default;
  /// Canonical order: index set (cardinality, then lexicographic), then exponents.
  friend std::strong_ordering operator<=>(const ParametricIdeal& a, const ParametricIdeal& b);

 private:
  std::size_t dim_;
  std::vector<Assignment> assignments_;
};

/// An irredundant intersection of parametric ideals in canonical order.
struct Decomposition {
  std::size_t dim = 0;
  std::vector<ParametricIdeal> components;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Which variable is peeled off a mixed generator u = v * w with v = x_j^{e_j}.
enum class SplitRule { SmallestVariable, LargestVariable };

/// One splitting step on generator `index`: the two generator lists obtained
/// by replacing u with v and with w. The intersection of the two ideals they
/// generate equals the ideal generated by `gens`.
/// Throws DomainError when gens[index] is a pure power.
std::pair<std::vector<Monomial>, std::vector<Monomial>> split(
    const std::vector<Monomial>& gens, std::size_t index,
    SplitRule rule = SplitRule::SmallestVariable);

/// The unique irredundant decomposition of a nonzero ideal into parametric
/// ideals. The split rule only changes the search, never the result.
/// Throws DomainError on the zero ideal.
Decomposition decompose(const MonomialIdeal& ideal, SplitRule rule = SplitRule::SmallestVariable);

/// Same result as decompose(), but splitting follows the order of `gens`
/// (which need not be minimal) instead of the canonical order: each branch
/// keeps the positions of its surviving generators.
Decomposition decompose_generators(std::size_t dim, std::vector<Monomial> gens,
                                   SplitRule rule = SplitRule::SmallestVariable);

/// Intersection of all components.
MonomialIdeal intersection(const Decomposition& decomposition);
MonomialIdeal intersection(const std::vector<ParametricIdeal>& components, std::size_t dim);

bool is_irreducible(const MonomialIdeal& ideal);

/// Associated primes: the distinct supports of the decomposition, canonical order.
std::vector<PrimeSupport> ass(const MonomialIdeal& ideal);
std::vector<PrimeSupport> ass(const Decomposition& decomposition);
/// Inclusion-minimal associated primes.
std::vector<PrimeSupport> min_ass(const MonomialIdeal& ideal);
std::vector<PrimeSupport> minimal_supports(const std::vector<PrimeSupport>& supports);

struct PrimaryComponent {
  PrimeSupport support;
  MonomialIdeal ideal;
};

/// Groups components by support and intersects each group, giving an
/// irredundant primary decomposition.
std::vector<PrimaryComponent> primary_merge(const Decomposition& decomposition);

}  // namespace monideal
