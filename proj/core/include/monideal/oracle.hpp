#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "monideal/decomp.hpp"
#include "monideal/ideal.hpp"

namespace monideal::oracle {

// Brute-force checks over bounded exponent boxes. They share no code path
// with the production algorithms beyond monomial divisibility, and they are
// exponential in the dimension.

/// The box {0..bound}^dim.
struct GridBox {
  std::size_t dim = 0;
  Exponent bound = 0;
};

/// Smallest box covering every generator of both ideals.
GridBox adequate_box(const MonomialIdeal& a, const MonomialIdeal& b);

/// Calls `visit` on every point of the box in lexicographic order.
void for_each_point(const GridBox& box, const std::function<void(const Monomial&)>& visit);

/// Two monomial ideals whose generators fit in {0..E}^d are equal iff their
/// membership functions agree on that box: a generator g of one ideal lies in
/// the box, so the other ideal contains g iff it agrees at g.
/// Throws DomainError if the box does not cover both ideals.
bool grid_equal(const MonomialIdeal& a, const MonomialIdeal& b, const GridBox& box);
bool grid_equal(const MonomialIdeal& a, const MonomialIdeal& b);

/// Smallest l <= max_l with m^l in I^l, searched over multisets of l
/// generators directly rather than through power(). An empty result means no
/// witness up to max_l, which is inconclusive on its own.
std::optional<std::uint64_t> closure_witness(const MonomialIdeal& ideal, const Monomial& m,
                                             std::uint64_t max_l);

/// m lies in I^k: some multiset of k generators divides m.
bool power_contains(const MonomialIdeal& ideal, const Monomial& m, std::uint64_t k);

/// Grid check that the components intersect to `ideal`: at every box point,
/// membership in `ideal` equals membership in all components.
bool verify_decomposition(const MonomialIdeal& ideal, const Decomposition& decomposition);

/// Grid check that `components` is irredundant: removing any one of them
/// adds a box point to the intersection.
bool verify_irredundant(const Decomposition& decomposition);

/// Radical by search: box points m with m^t in I for some t <= bound * dim,
/// minimalized. The box is the one covering I.
MonomialIdeal grid_radical(const MonomialIdeal& ideal);

}  // namespace monideal::oracle
