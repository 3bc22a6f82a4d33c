#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monideal/decomp.hpp"
#include "monideal/ideal.hpp"

namespace monideal {

/// I^(k) by definition: decompose I^k, merge components by radical, keep the
/// ones whose radical is a minimal prime of I, intersect them. Works for any
/// nonzero ideal.
MonomialIdeal symbolic_power_general(const MonomialIdeal& ideal, std::uint64_t k);

/// I^(k) for squarefree I as the intersection of p^k over the minimal primes.
/// Throws DomainError when I is not squarefree.
MonomialIdeal symbolic_power_squarefree(const MonomialIdeal& ideal, std::uint64_t k);

/// Dispatches to the squarefree route when it applies.
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, std::uint64_t k);

/// Ordinary versus symbolic k-th power of one ideal.
struct PowerReport {
  std::uint64_t k = 0;
  MonomialIdeal ordinary;
  MonomialIdeal symbolic;
  bool equal = false;                      // ordinary == symbolic
  std::vector<PrimeSupport> ass_ordinary;  // Ass(R/I^k)
  std::vector<PrimeSupport> min_ass_base;  // mAss(R/I)
  bool ass_condition = false;              // ass_ordinary is a subset of min_ass_base
};

/// `equal` and `ass_condition` come from separate computations: the symbolic
/// side uses symbolic_power() while the associated primes come from
/// decomposing I^k.
PowerReport powers_equal(const MonomialIdeal& ideal, std::uint64_t k);

/// The monomial ideal generated by the lattice points of the Newton
/// polyhedron. Only points inside the generators' coordinatewise bounding box
/// are enumerated; every minimal lattice point lies there.
MonomialIdeal integral_closure(const MonomialIdeal& ideal);

bool is_integrally_closed(const MonomialIdeal& ideal);

/// Bounded normality certificate: closure(I^k) == I^k for k = 1..checked_up_to.
/// `normal` says nothing about k beyond that bound.
struct NormalityReport {
  bool normal = true;
  std::optional<std::uint64_t> first_failure;
  std::uint64_t checked_up_to = 0;
};

NormalityReport is_normal_up_to(const MonomialIdeal& ideal, std::uint64_t max_k);

/// One row of the squarefree power-equality check.
struct EquivalenceRow {
  std::uint64_t k = 0;
  bool powers_equal = false;  // I^(k) == I^k
  bool ass_condition = false;  // Ass(R/I^k) within mAss(R/I)
  /// closure(I^k) == I^k; filled only when every row satisfies the condition.
  std::optional<bool> closed;
  /// I^k == intersection of p^k over mAss(R/I); filled under the same rule.
  std::optional<bool> matches_prime_powers;

  bool agrees() const { return powers_equal == ass_condition; }
};

/// For squarefree I and k = 1..max_k: I^(k) == I^k holds exactly when
/// Ass(R/I^k) lies inside mAss(R/I), and when it holds for every k the powers
/// are integrally closed and equal to the intersection of the prime powers.
struct EquivalenceReport {
  MonomialIdeal ideal;
  std::vector<EquivalenceRow> rows;
  bool equivalence_holds = true;  // every row agrees
  bool condition_holds = true;    // every row satisfies ass_condition
  /// Set when condition_holds: all closure and prime-power sub-checks passed.
  std::optional<bool> normality_holds;

  /// True when every assertion that was checked passed.
  bool passed() const { return equivalence_holds && normality_holds.value_or(true); }
};

/// Throws DomainError for non-squarefree or zero input, or max_k == 0.
EquivalenceReport check_power_equivalence(const MonomialIdeal& ideal, std::uint64_t max_k);

}  // namespace monideal
