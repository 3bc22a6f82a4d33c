#include "monideal/decomp.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "monideal/errors.hpp"

namespace monideal {

ParametricIdeal::ParametricIdeal(std::size_t dim, std::vector<Assignment> assignments)
    : dim_(dim), assignments_(std::move(assignments)) {
  if (assignments_.empty()) throw DomainError("parametric ideal needs at least one generator");
  std::sort(assignments_.begin(), assignments_.end(),
            [](const Assignment& a, const Assignment& b) { return a.index < b.index; });
  for (std::size_t i = 0; i < assignments_.size(); ++i) {
    if (assignments_[i].index >= dim_) throw DomainError("parametric index exceeds dimension");
    if (assignments_[i].exponent == 0) throw DomainError("parametric exponent must be positive");
    if (i > 0 && assignments_[i].index == assignments_[i - 1].index) {
      throw DomainError("parametric indices must be distinct");
    }
  }
}

ParametricIdeal ParametricIdeal::from_ideal(const MonomialIdeal& ideal) {
  std::vector<Assignment> out;
  for (const Monomial& g : ideal.generators()) {
    if (!g.is_pure_power()) {
      throw DomainError("not a parametric ideal: generator " + to_string(g) +
                        " is not a pure power");
    }
    const std::size_t j = monideal::support(g).front();
    out.push_back({j, g[j]});
  }
  return ParametricIdeal(ideal.dim(), std::move(out));
}

std::vector<std::size_t> ParametricIdeal::indices() const {
  std::vector<std::size_t> out;
  for (const Assignment& a : assignments_) out.push_back(a.index);
  return out;
}

std::vector<Exponent> ParametricIdeal::exponents() const {
  std::vector<Exponent> out;
  for (const Assignment& a : assignments_) out.push_back(a.exponent);
  return out;
}

PrimeSupport ParametricIdeal::support() const { return PrimeSupport(dim_, indices()); }

bool ParametricIdeal::contains(const Monomial& m) const {
  detail::require_same_dim(dim_, m.dim(), "ParametricIdeal::contains");
  return std::any_of(assignments_.begin(), assignments_.end(),
                     [&](const Assignment& a) { return m[a.index] >= a.exponent; });
}

bool ParametricIdeal::contains(const ParametricIdeal& other) const {
  detail::require_same_dim(dim_, other.dim_, "ParametricIdeal::contains");
  // Both lists are sorted by index; each generator of `other` must be a
  // multiple of a generator of `this` in the same variable.
  auto it = assignments_.begin();
  for (const Assignment& g : other.assignments_) {
    while (it != assignments_.end() && it->index < g.index) ++it;
    if (it == assignments_.end() || it->index != g.index || it->exponent > g.exponent) {
      return false;
    }
  }
  return true;
}

MonomialIdeal ParametricIdeal::to_ideal() const {
  std::vector<Monomial> gens;
  for (const Assignment& a : assignments_) gens.push_back(Monomial::variable(dim_, a.index, a.exponent));
  return MonomialIdeal::from_generators(dim_, std::move(gens));
}

std::strong_ordering operator<=>(const ParametricIdeal& a, const ParametricIdeal& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  if (auto c = a.assignments_.size() <=> b.assignments_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.assignments_.size(); ++i) {
    if (auto c = a.assignments_[i].index <=> b.assignments_[i].index; c != 0) return c;
  }
  for (std::size_t i = 0; i < a.assignments_.size(); ++i) {
    if (auto c = a.assignments_[i].exponent <=> b.assignments_[i].exponent; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::pair<std::vector<Monomial>, std::vector<Monomial>> split(const std::vector<Monomial>& gens,
                                                              std::size_t index, SplitRule rule) {
  if (index >= gens.size()) throw DomainError("split: generator index out of range");
  const Monomial& u = gens[index];
  const std::vector<std::size_t> supp = support(u);
  if (supp.size() < 2) {
    throw DomainError("split: generator " + to_string(u) + " is a pure power");
  }
  const std::size_t j = rule == SplitRule::SmallestVariable ? supp.front() : supp.back();
  Monomial v = Monomial::variable(u.dim(), j, u[j]);
  std::vector<Exponent> rest(u.exponents().begin(), u.exponents().end());
  rest[j] = 0;
  Monomial w(std::move(rest));

  std::pair<std::vector<Monomial>, std::vector<Monomial>> out{gens, gens};
  out.first[index] = std::move(v);
  out.second[index] = std::move(w);
  return out;
}

namespace {

// Keeps the inclusion-minimal components. For irreducible ideals, a component
// contains the intersection of the others iff it contains one of them.
void prune_redundant(std::vector<ParametricIdeal>& comps) {
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  std::vector<ParametricIdeal> kept;
  kept.reserve(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size() && !redundant; ++j) {
      redundant = j != i && comps[i].contains(comps[j]);
    }
    if (!redundant) kept.push_back(comps[i]);
  }
  comps = std::move(kept);
}

struct GensHash {
  std::size_t operator()(const std::vector<Exponent>& key) const noexcept {
    std::size_t h = key.size();
    for (Exponent e : key) h ^= std::hash<Exponent>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Drops generators divisible by an earlier or smaller one, keeping the
// relative order of the survivors.
std::vector<Monomial> minimal_in_order(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (j == i || !divides(gens[j], gens[i])) continue;
      redundant = gens[j] != gens[i] || j < i;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

class Decomposer {
 public:
  Decomposer(std::size_t dim, SplitRule rule, bool keep_order)
      : dim_(dim), rule_(rule), keep_order_(keep_order) {}

  // `gens` is minimal; in canonical order unless keep_order_ is set.
  std::vector<ParametricIdeal> run(std::vector<Monomial> gens) {
    std::vector<Monomial> sorted = gens;
    std::sort(sorted.begin(), sorted.end(), canonical_less);
    std::vector<Exponent> key;
    key.reserve(sorted.size() * dim_);
    for (const Monomial& g : sorted) key.insert(key.end(), g.exponents().begin(), g.exponents().end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const auto mixed = std::find_if(gens.begin(), gens.end(),
                                    [](const Monomial& g) { return !g.is_pure_power(); });
    std::vector<ParametricIdeal> result;
    if (mixed == gens.end()) {
      result.push_back(ParametricIdeal::from_ideal(MonomialIdeal::from_generators(dim_, gens)));
    } else {
      auto [left, right] = split(gens, static_cast<std::size_t>(mixed - gens.begin()), rule_);
      result = run(normalize(std::move(left)));
      std::vector<ParametricIdeal> other = run(normalize(std::move(right)));
      result.insert(result.end(), other.begin(), other.end());
      prune_redundant(result);
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  std::vector<Monomial> normalize(std::vector<Monomial> gens) const {
    if (keep_order_) return minimal_in_order(std::move(gens));
    return MonomialIdeal::from_generators(dim_, std::move(gens)).generators();
  }

 private:
  std::size_t dim_;
  SplitRule rule_;
  bool keep_order_;
  std::unordered_map<std::vector<Exponent>, std::vector<ParametricIdeal>, GensHash> memo_;
};

}  // namespace

Decomposition decompose(const MonomialIdeal& ideal, SplitRule rule) {
  if (ideal.is_zero()) throw DomainError("decompose: the zero ideal has no decomposition");
  Decomposer decomposer(ideal.dim(), rule, false);
  Decomposition out{ideal.dim(), decomposer.run(ideal.generators())};
  prune_redundant(out.components);
  return out;
}

Decomposition decompose_generators(std::size_t dim, std::vector<Monomial> gens, SplitRule rule) {
  // Validates dimensions and properness; the order of `gens` is kept below.
  if (MonomialIdeal::from_generators(dim, gens).is_zero()) {
    throw DomainError("decompose: the zero ideal has no decomposition");
  }
  Decomposer decomposer(dim, rule, true);
  Decomposition out{dim, decomposer.run(decomposer.normalize(std::move(gens)))};
  prune_redundant(out.components);
  return out;
}

MonomialIdeal intersection(const std::vector<ParametricIdeal>& components, std::size_t dim) {
  if (components.empty()) throw DomainError("intersection of no components is the unit ideal");
  MonomialIdeal acc = components.front().to_ideal();
  for (std::size_t i = 1; i < components.size(); ++i) acc = intersect(acc, components[i].to_ideal());
  detail::require_same_dim(acc.dim(), dim, "intersection");
  return acc;
}

MonomialIdeal intersection(const Decomposition& decomposition) {
  return intersection(decomposition.components, decomposition.dim);
}

bool is_irreducible(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("is_irreducible: zero ideal rejected");
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Monomial& g) { return g.is_pure_power(); });
}

std::vector<PrimeSupport> ass(const Decomposition& decomposition) {
  std::vector<PrimeSupport> out;
  for (const ParametricIdeal& q : decomposition.components) out.push_back(q.support());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PrimeSupport> ass(const MonomialIdeal& ideal) { return ass(decompose(ideal)); }

std::vector<PrimeSupport> minimal_supports(const std::vector<PrimeSupport>& supports) {
  std::vector<PrimeSupport> out;
  for (const PrimeSupport& p : supports) {
    const bool minimal = std::none_of(supports.begin(), supports.end(), [&](const PrimeSupport& q) {
      return q != p && q.is_subset_of(p);
    });
    if (minimal && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimeSupport> min_ass(const MonomialIdeal& ideal) { return minimal_supports(ass(ideal)); }

std::vector<PrimaryComponent> primary_merge(const Decomposition& decomposition) {
  std::map<PrimeSupport, MonomialIdeal> groups;
  for (const ParametricIdeal& q : decomposition.components) {
    const PrimeSupport p = q.support();
    auto it = groups.find(p);
    if (it == groups.end()) {
      groups.emplace(p, q.to_ideal());
    } else {
      it->second = intersect(it->second, q.to_ideal());
    }
  }
  std::vector<PrimaryComponent> out;
  out.reserve(groups.size());
  for (auto& [p, ideal] : groups) out.push_back({p, std::move(ideal)});
  return out;
}

}  // namespace monideal
