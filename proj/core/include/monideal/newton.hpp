#pragma once

#include <span>

#include "monideal/monomial.hpp"

namespace monideal {

/// Decides whether the exponent vector of `m` lies in the Newton polyhedron
/// conv(gens) + R^d_{>=0}, i.e. whether some lambda >= 0 with sum 1 satisfies
/// sum_i lambda_i * g_i <= m componentwise.
///
/// The answer is exact. Instead of searching for lambda, the routine runs
/// Fourier-Motzkin elimination in integer arithmetic on the separating system
///
///     a >= 0,   a . (g_i - m) > 0  for every generator g_i,
///
/// which has a solution iff `m` is outside the polyhedron (the polyhedron is
/// closed and recedes along the orthant, so the separating normal can be
/// taken nonnegative). Elimination runs over the d coordinates of `a`, so the
/// cost depends on the dimension rather than on the number of generators.
///
/// Throws DimensionMismatch, DomainError for an empty generator list, and
/// OverflowError if intermediate coefficients leave int64.
bool in_newton_polyhedron(std::span<const Monomial> gens, const Monomial& m);

}  // namespace monideal
