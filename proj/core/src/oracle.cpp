#include "monideal/oracle.hpp"

#include <algorithm>
#include <vector>

#include "monideal/errors.hpp"

namespace monideal::oracle {

namespace {

Exponent component_bound(const Decomposition& d) {
  Exponent best = 0;
  for (const ParametricIdeal& q : d.components) {
    for (const auto& a : q.assignments()) best = std::max(best, a.exponent);
  }
  return best;
}

// Some multiset of `left` generators, drawn from index `start` on, divides
// `budget` (already reduced by the generators chosen so far).
bool multiset_fits(const std::vector<Monomial>& gens, std::size_t start, std::uint64_t left,
                   std::vector<Exponent>& budget) {
  if (left == 0) return true;
  for (std::size_t i = start; i < gens.size(); ++i) {
    const Monomial& g = gens[i];
    bool fits = true;
    for (std::size_t j = 0; j < budget.size() && fits; ++j) fits = g[j] <= budget[j];
    if (!fits) continue;
    for (std::size_t j = 0; j < budget.size(); ++j) budget[j] -= g[j];
    const bool found = multiset_fits(gens, i, left - 1, budget);
    for (std::size_t j = 0; j < budget.size(); ++j) budget[j] += g[j];
    if (found) return true;
  }
  return false;
}

}  // namespace

GridBox adequate_box(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_dim(a.dim(), b.dim(), "adequate_box");
  return GridBox{a.dim(), std::max(a.max_exponent(), b.max_exponent())};
}

void for_each_point(const GridBox& box, const std::function<void(const Monomial&)>& visit) {
  std::vector<Exponent> point(box.dim, 0);
  for (;;) {
    visit(Monomial(point));
    std::size_t i = box.dim;
    while (true) {
      if (i == 0) return;
      --i;
      if (point[i] < box.bound) {
        ++point[i];
        break;
      }
      point[i] = 0;
    }
  }
}

bool grid_equal(const MonomialIdeal& a, const MonomialIdeal& b, const GridBox& box) {
  detail::require_same_dim(a.dim(), b.dim(), "grid_equal");
  detail::require_same_dim(a.dim(), box.dim, "grid_equal");
  if (box.bound < a.max_exponent() || box.bound < b.max_exponent()) {
    throw DomainError("grid_equal: box bound does not cover the generators");
  }
  bool same = true;
  for_each_point(box, [&](const Monomial& m) {
    if (same && a.contains(m) != b.contains(m)) same = false;
  });
  return same;
}

bool grid_equal(const MonomialIdeal& a, const MonomialIdeal& b) {
  return grid_equal(a, b, adequate_box(a, b));
}

std::optional<std::uint64_t> closure_witness(const MonomialIdeal& ideal, const Monomial& m,
                                             std::uint64_t max_l) {
  detail::require_same_dim(ideal.dim(), m.dim(), "closure_witness");
  if (ideal.is_zero()) return std::nullopt;
  for (std::uint64_t l = 1; l <= max_l; ++l) {
    std::vector<Exponent> budget(m.dim());
    for (std::size_t j = 0; j < budget.size(); ++j) budget[j] = detail::checked_mul(m[j], l);
    if (multiset_fits(ideal.generators(), 0, l, budget)) return l;
  }
  return std::nullopt;
}

bool power_contains(const MonomialIdeal& ideal, const Monomial& m, std::uint64_t k) {
  detail::require_same_dim(ideal.dim(), m.dim(), "power_contains");
  std::vector<Exponent> budget(m.exponents().begin(), m.exponents().end());
  return !ideal.is_zero() && multiset_fits(ideal.generators(), 0, k, budget);
}

bool verify_decomposition(const MonomialIdeal& ideal, const Decomposition& decomposition) {
  detail::require_same_dim(ideal.dim(), decomposition.dim, "verify_decomposition");
  if (decomposition.components.empty()) return false;
  const GridBox box{ideal.dim(), std::max(ideal.max_exponent(), component_bound(decomposition))};
  bool ok = true;
  for_each_point(box, [&](const Monomial& m) {
    if (!ok) return;
    const bool in_all = std::all_of(decomposition.components.begin(), decomposition.components.end(),
                                    [&](const ParametricIdeal& q) { return q.contains(m); });
    ok = in_all == ideal.contains(m);
  });
  return ok;
}

bool verify_irredundant(const Decomposition& decomposition) {
  const auto& comps = decomposition.components;
  const GridBox box{decomposition.dim, component_bound(decomposition)};
  for (std::size_t skip = 0; skip < comps.size(); ++skip) {
    bool enlarged = false;
    for_each_point(box, [&](const Monomial& m) {
      if (enlarged || comps[skip].contains(m)) return;
      bool in_rest = true;
      for (std::size_t i = 0; i < comps.size() && in_rest; ++i) {
        in_rest = i == skip || comps[i].contains(m);
      }
      enlarged = in_rest;
    });
    if (!enlarged) return false;
  }
  return true;
}

MonomialIdeal grid_radical(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return ideal;
  const GridBox box{ideal.dim(), ideal.max_exponent()};
  const std::uint64_t max_t = detail::checked_mul(box.bound, ideal.dim());
  std::vector<Monomial> found;
  for_each_point(box, [&](const Monomial& m) {
    if (m.is_one()) return;
    for (std::uint64_t t = 1; t <= max_t; ++t) {
      if (ideal.contains(mpow(m, t))) {
        found.push_back(m);
        return;
      }
    }
  });
  return MonomialIdeal::from_generators(ideal.dim(), std::move(found));
}

}  // namespace monideal::oracle
