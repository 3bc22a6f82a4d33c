#include "monideal/newton.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "monideal/errors.hpp"

namespace monideal {

namespace {

using Coef = std::int64_t;

// c . a > 0 (strict) or c . a >= 0, over the orthant a >= 0.
struct Row {
  std::vector<Coef> c;
  bool strict;

  friend bool operator==(const Row&, const Row&) = default;
  friend auto operator<=>(const Row&, const Row&) = default;
};

Coef checked_mul(Coef a, Coef b) {
  Coef out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("Newton test: coefficient overflow");
  return out;
}

Coef checked_add(Coef a, Coef b) {
  Coef out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("Newton test: coefficient overflow");
  return out;
}

Coef to_coef(Exponent e) {
  if (e > static_cast<Exponent>(std::numeric_limits<Coef>::max())) {
    throw OverflowError("Newton test: exponent exceeds int64");
  }
  return static_cast<Coef>(e);
}

void normalize(Row& row) {
  Coef g = 0;
  for (Coef x : row.c) g = std::gcd(g, x);
  if (g > 1) {
    for (Coef& x : row.c) x /= g;
  }
}

bool all_nonpositive(const Row& r) {
  return std::all_of(r.c.begin(), r.c.end(), [](Coef x) { return x <= 0; });
}

bool all_nonnegative(const Row& r) {
  return std::all_of(r.c.begin(), r.c.end(), [](Coef x) { return x >= 0; });
}

// `a` implies `b` on the orthant when a.c <= b.c componentwise and `a` is at
// least as strict.
bool implies(const Row& a, const Row& b) {
  if (b.strict && !a.strict) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] > b.c[i]) return false;
  }
  return true;
}

enum class Verdict { Infeasible, Feasible, Undecided };

// Normalizes, drops trivial and implied rows, and detects a contradiction.
Verdict simplify(std::vector<Row>& rows) {
  std::vector<Row> next;
  next.reserve(rows.size());
  for (Row& r : rows) {
    normalize(r);
    if (r.strict && all_nonpositive(r)) return Verdict::Infeasible;
    if (!r.strict && all_nonnegative(r)) continue;
    next.push_back(std::move(r));
  }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());

  std::vector<bool> redundant(next.size(), false);
  for (std::size_t i = 0; i < next.size(); ++i) {
    for (std::size_t j = 0; j < next.size() && !redundant[i]; ++j) {
      if (j == i || redundant[j]) continue;
      redundant[i] = implies(next[j], next[i]);
    }
  }
  rows.clear();
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (!redundant[i]) rows.push_back(std::move(next[i]));
  }
  return rows.empty() ? Verdict::Feasible : Verdict::Undecided;
}

// True when the system has a solution a >= 0.
bool separating_system_feasible(std::vector<Row> rows, std::size_t dim) {
  std::vector<bool> alive(dim, true);
  for (;;) {
    switch (simplify(rows)) {
      case Verdict::Infeasible: return false;
      case Verdict::Feasible: return true;
      case Verdict::Undecided: break;
    }

    std::size_t best = dim;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t j = 0; j < dim; ++j) {
      if (!alive[j]) continue;
      std::size_t pos = 0, neg = 0;
      for (const Row& r : rows) {
        pos += r.c[j] > 0;
        neg += r.c[j] < 0;
      }
      if (pos + neg == 0) continue;
      if (pos * neg < best_cost) {
        best_cost = pos * neg;
        best = j;
      }
    }
    // simplify() leaves only rows with some nonzero coefficient.
    if (best == dim) throw Error("Newton test: elimination stalled");
    alive[best] = false;

    std::vector<Row> next;
    std::vector<const Row*> lower, upper;
    for (const Row& r : rows) {
      if (r.c[best] > 0) {
        lower.push_back(&r);
      } else if (r.c[best] < 0) {
        upper.push_back(&r);
        Row dropped = r;  // paired with the bound a_best >= 0
        dropped.c[best] = 0;
        next.push_back(std::move(dropped));
      } else {
        next.push_back(r);
      }
    }
    for (const Row* p : lower) {
      for (const Row* n : upper) {
        const Coef wp = -n->c[best];
        const Coef wn = p->c[best];
        Row combo{std::vector<Coef>(dim), p->strict || n->strict};
        for (std::size_t i = 0; i < dim; ++i) {
          combo.c[i] = checked_add(checked_mul(wp, p->c[i]), checked_mul(wn, n->c[i]));
        }
        combo.c[best] = 0;
        next.push_back(std::move(combo));
      }
    }
    rows = std::move(next);
  }
}

}  // namespace

bool in_newton_polyhedron(std::span<const Monomial> gens, const Monomial& m) {
  if (gens.empty()) throw DomainError("Newton polyhedron of the zero ideal is empty");
  const std::size_t dim = m.dim();
  std::vector<Row> rows;
  rows.reserve(gens.size());
  for (const Monomial& g : gens) {
    detail::require_same_dim(g.dim(), dim, "in_newton_polyhedron");
    Row r{std::vector<Coef>(dim), true};
    for (std::size_t i = 0; i < dim; ++i) r.c[i] = to_coef(g[i]) - to_coef(m[i]);
    rows.push_back(std::move(r));
  }
  return !separating_system_feasible(std::move(rows), dim);
}

}  // namespace monideal
