#include "monideal/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "monideal/errors.hpp"

namespace monideal {

PrimeSupport::PrimeSupport(std::size_t dim, std::vector<std::size_t> indices)
    : dim_(dim), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (indices_.empty()) throw DomainError("prime support must be nonempty");
  if (indices_.back() >= dim_) {
    throw DomainError("prime support index " + std::to_string(indices_.back() + 1) +
                      " exceeds dimension " + std::to_string(dim_));
  }
}

bool PrimeSupport::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

bool PrimeSupport::is_subset_of(const PrimeSupport& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                       indices_.end());
}

std::strong_ordering operator<=>(const PrimeSupport& a, const PrimeSupport& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  if (auto c = a.indices_.size() <=> b.indices_.size(); c != 0) return c;
  return a.indices_ <=> b.indices_;
}

std::string to_string(const PrimeSupport& p) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < p.indices().size(); ++i) {
    if (i) os << ',';
    os << p.indices()[i] + 1;
  }
  os << '}';
  return os.str();
}

MonomialIdeal::MonomialIdeal(std::size_t dim, std::vector<Monomial> gens)
    : dim_(dim), gens_(std::move(gens)) {}

MonomialIdeal MonomialIdeal::zero(std::size_t dim) {
  if (dim == 0) throw DomainError("ideal dimension must be positive");
  return MonomialIdeal(dim, {});
}

MonomialIdeal MonomialIdeal::from_generators(std::size_t dim, std::vector<Monomial> raw) {
  if (dim == 0) throw DomainError("ideal dimension must be positive");
  for (const Monomial& m : raw) {
    detail::require_same_dim(dim, m.dim(), "minimalize");
    if (m.is_one()) throw DomainError("ideal must be proper: generator 1 rejected");
  }
  std::sort(raw.begin(), raw.end(), canonical_less);
  // After the sort any divisor of a candidate precedes it, so one pass suffices.
  std::vector<Monomial> kept;
  kept.reserve(raw.size());
  for (Monomial& cand : raw) {
    const bool redundant = std::any_of(kept.begin(), kept.end(),
                                       [&](const Monomial& g) { return divides(g, cand); });
    if (!redundant) kept.push_back(std::move(cand));
  }
  return MonomialIdeal(dim, std::move(kept));
}

Exponent MonomialIdeal::max_exponent() const noexcept {
  Exponent best = 0;
  for (const Monomial& g : gens_) best = std::max(best, g.max_exponent());
  return best;
}

Monomial MonomialIdeal::generator_lcm() const {
  Monomial out(dim_);
  for (const Monomial& g : gens_) out = lcm(out, g);
  return out;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  detail::require_same_dim(dim_, m.dim(), "contains_monomial");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

MonomialIdeal minimalize(std::size_t dim, std::vector<Monomial> raw_gens) {
  return MonomialIdeal::from_generators(dim, std::move(raw_gens));
}

bool contains_monomial(const MonomialIdeal& ideal, const Monomial& m) { return ideal.contains(m); }

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_dim(a.dim(), b.dim(), "intersect");
  std::vector<Monomial> raw;
  raw.reserve(a.size() * b.size());
  for (const Monomial& u : a.generators()) {
    for (const Monomial& v : b.generators()) raw.push_back(lcm(u, v));
  }
  return MonomialIdeal::from_generators(a.dim(), std::move(raw));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_dim(a.dim(), b.dim(), "sum");
  std::vector<Monomial> raw = a.generators();
  raw.insert(raw.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::from_generators(a.dim(), std::move(raw));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_dim(a.dim(), b.dim(), "product");
  std::vector<Monomial> raw;
  raw.reserve(a.size() * b.size());
  for (const Monomial& u : a.generators()) {
    for (const Monomial& v : b.generators()) raw.push_back(mul(u, v));
  }
  return MonomialIdeal::from_generators(a.dim(), std::move(raw));
}

namespace {

void collect_multisets(const std::vector<Monomial>& gens, std::size_t start, std::uint64_t left,
                       const Monomial& acc, std::vector<Monomial>& out) {
  if (left == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i < gens.size(); ++i) {
    collect_multisets(gens, i, left - 1, mul(acc, gens[i]), out);
  }
}

}  // namespace

MonomialIdeal power(const MonomialIdeal& ideal, std::uint64_t k) {
  if (k == 0) throw DomainError("power exponent must be at least 1");
  if (ideal.is_zero()) return ideal;
  if (ideal.size() == 1) {
    return MonomialIdeal::from_generators(ideal.dim(), {mpow(ideal.generators().front(), k)});
  }
  std::vector<Monomial> raw;
  collect_multisets(ideal.generators(), 0, k, Monomial(ideal.dim()), raw);
  return MonomialIdeal::from_generators(ideal.dim(), std::move(raw));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> raw;
  raw.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) raw.push_back(rad_monomial(g));
  return MonomialIdeal::from_generators(ideal.dim(), std::move(raw));
}

bool is_squarefree_ideal(const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Monomial& g) { return is_squarefree_monomial(g); });
}

std::optional<PrimeSupport> is_monomial_prime(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return std::nullopt;
  std::vector<std::size_t> indices;
  for (const Monomial& g : ideal.generators()) {
    if (g.degree() != 1) return std::nullopt;
    indices.push_back(support(g).front());
  }
  return PrimeSupport(ideal.dim(), std::move(indices));
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_dim(a.dim(), b.dim(), "equals");
  return a.generators() == b.generators();
}

bool is_subideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_dim(a.dim(), b.dim(), "is_subideal");
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Monomial& g) { return b.contains(g); });
}

MonomialIdeal prime_ideal(const PrimeSupport& support) {
  std::vector<Monomial> gens;
  for (std::size_t i : support.indices()) gens.push_back(Monomial::variable(support.dim(), i));
  return MonomialIdeal::from_generators(support.dim(), std::move(gens));
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.generators()[i]);
  }
  out += ')';
  return out;
}

}  // namespace monideal
