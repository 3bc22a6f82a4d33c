#include "monideal/powers.hpp"

#include <algorithm>

#include "monideal/errors.hpp"
#include "monideal/newton.hpp"

namespace monideal {

namespace {

void require_nonzero(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero()) throw DomainError(std::string(op) + ": zero ideal rejected");
}

void require_positive(std::uint64_t k, const char* op) {
  if (k == 0) throw DomainError(std::string(op) + ": power must be at least 1");
}

bool is_subset(const std::vector<PrimeSupport>& small, const std::vector<PrimeSupport>& big) {
  return std::all_of(small.begin(), small.end(), [&](const PrimeSupport& p) {
    return std::find(big.begin(), big.end(), p) != big.end();
  });
}

MonomialIdeal intersect_prime_powers(const std::vector<PrimeSupport>& primes, std::uint64_t k) {
  MonomialIdeal acc = power(prime_ideal(primes.front()), k);
  for (std::size_t i = 1; i < primes.size(); ++i) acc = intersect(acc, power(prime_ideal(primes[i]), k));
  return acc;
}

}  // namespace

MonomialIdeal symbolic_power_general(const MonomialIdeal& ideal, std::uint64_t k) {
  require_nonzero(ideal, "symbolic_power");
  require_positive(k, "symbolic_power");
  const std::vector<PrimeSupport> minimal = min_ass(ideal);
  const std::vector<PrimaryComponent> primary = primary_merge(decompose(power(ideal, k)));

  std::optional<MonomialIdeal> acc;
  for (const PrimaryComponent& c : primary) {
    if (std::find(minimal.begin(), minimal.end(), c.support) == minimal.end()) continue;
    acc = acc ? intersect(*acc, c.ideal) : c.ideal;
  }
  // I and I^k share their minimal primes, so at least one component is kept.
  if (!acc) throw Error("symbolic_power: no primary component at a minimal prime");
  return *acc;
}

MonomialIdeal symbolic_power_squarefree(const MonomialIdeal& ideal, std::uint64_t k) {
  require_nonzero(ideal, "symbolic_power");
  require_positive(k, "symbolic_power");
  if (!is_squarefree_ideal(ideal)) throw DomainError("symbolic_power: ideal is not squarefree");
  return intersect_prime_powers(min_ass(ideal), k);
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, std::uint64_t k) {
  if (is_squarefree_ideal(ideal)) return symbolic_power_squarefree(ideal, k);
  return symbolic_power_general(ideal, k);
}

PowerReport powers_equal(const MonomialIdeal& ideal, std::uint64_t k) {
  require_nonzero(ideal, "powers_equal");
  require_positive(k, "powers_equal");
  MonomialIdeal ordinary = power(ideal, k);
  MonomialIdeal symbolic = symbolic_power(ideal, k);
  std::vector<PrimeSupport> ass_ordinary = ass(ordinary);
  std::vector<PrimeSupport> min_ass_base = min_ass(ideal);
  const bool equal = ordinary == symbolic;
  const bool condition = is_subset(ass_ordinary, min_ass_base);
  return PowerReport{k,
                     std::move(ordinary),
                     std::move(symbolic),
                     equal,
                     std::move(ass_ordinary),
                     std::move(min_ass_base),
                     condition};
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  require_nonzero(ideal, "integral_closure");
  const std::size_t dim = ideal.dim();
  const Monomial box = ideal.generator_lcm();
  const auto& gens = ideal.generators();

  // Odometer over the box in lexicographic order: every divisor of a point is
  // visited before the point itself.
  std::vector<Exponent> point(dim, 0);
  std::vector<Monomial> accepted;
  for (;;) {
    Monomial m(point);
    const bool covered = std::any_of(accepted.begin(), accepted.end(),
                                     [&](const Monomial& a) { return divides(a, m); });
    if (!covered && !m.is_one() && (ideal.contains(m) || in_newton_polyhedron(gens, m))) {
      accepted.push_back(std::move(m));
    }
    std::size_t i = dim;
    while (i > 0) {
      --i;
      if (point[i] < box[i]) {
        ++point[i];
        break;
      }
      point[i] = 0;
      if (i == 0) return MonomialIdeal::from_generators(dim, std::move(accepted));
    }
  }
}

bool is_integrally_closed(const MonomialIdeal& ideal) { return integral_closure(ideal) == ideal; }

NormalityReport is_normal_up_to(const MonomialIdeal& ideal, std::uint64_t max_k) {
  require_nonzero(ideal, "is_normal_up_to");
  require_positive(max_k, "is_normal_up_to");
  NormalityReport out;
  for (std::uint64_t k = 1; k <= max_k; ++k) {
    out.checked_up_to = k;
    if (!is_integrally_closed(power(ideal, k))) {
      out.normal = false;
      out.first_failure = k;
      break;
    }
  }
  return out;
}

EquivalenceReport check_power_equivalence(const MonomialIdeal& ideal, std::uint64_t max_k) {
  require_nonzero(ideal, "check_power_equivalence");
  require_positive(max_k, "check_power_equivalence");
  if (!is_squarefree_ideal(ideal)) {
    throw DomainError("check_power_equivalence: ideal is not squarefree");
  }
  EquivalenceReport report{ideal, {}, true, true, std::nullopt};
  std::vector<MonomialIdeal> ordinary;
  for (std::uint64_t k = 1; k <= max_k; ++k) {
    PowerReport pr = powers_equal(ideal, k);
    EquivalenceRow row;
    row.k = k;
    row.powers_equal = pr.equal;
    row.ass_condition = pr.ass_condition;
    report.equivalence_holds = report.equivalence_holds && row.agrees();
    report.condition_holds = report.condition_holds && row.ass_condition;
    report.rows.push_back(row);
    ordinary.push_back(std::move(pr.ordinary));
  }
  if (report.condition_holds) {
    const std::vector<PrimeSupport> minimal = min_ass(ideal);
    bool ok = true;
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      EquivalenceRow& row = report.rows[i];
      row.closed = is_integrally_closed(ordinary[i]);
      row.matches_prime_powers = ordinary[i] == intersect_prime_powers(minimal, row.k);
      ok = ok && *row.closed && *row.matches_prime_powers;
    }
    report.normality_holds = ok;
  }
  return report;
}

}  // namespace monideal
