#include "monideal/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "monideal/errors.hpp"

namespace monideal {

namespace detail {

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw DimensionMismatch(std::string(op) + ": dimension mismatch (" + std::to_string(a) +
                            " vs " + std::to_string(b) + ")");
  }
}

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("exponent overflow in addition");
  return out;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("exponent overflow in multiplication");
  }
  return out;
}

}  // namespace detail

Monomial::Monomial(std::size_t dim) : exps_(dim, 0) {
  if (dim == 0) throw DomainError("monomial dimension must be positive");
}

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw DomainError("monomial dimension must be positive");
}

Monomial Monomial::variable(std::size_t dim, std::size_t index, Exponent exponent) {
  Monomial m(dim);
  if (index >= dim) {
    throw DomainError("variable index " + std::to_string(index + 1) + " exceeds dimension " +
                      std::to_string(dim));
  }
  m.exps_[index] = exponent;
  return m;
}

Exponent Monomial::degree() const {
  Exponent total = 0;
  for (Exponent e : exps_) total = detail::checked_add(total, e);
  return total;
}

Exponent Monomial::max_exponent() const noexcept {
  return *std::max_element(exps_.begin(), exps_.end());
}

std::size_t Monomial::support_size() const noexcept {
  return static_cast<std::size_t>(std::count_if(exps_.begin(), exps_.end(),
                                                [](Exponent e) { return e != 0; }));
}

Monomial mul(const Monomial& u, const Monomial& v) {
  detail::require_same_dim(u.dim(), v.dim(), "mul");
  std::vector<Exponent> out(u.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = detail::checked_add(u[i], v[i]);
  return Monomial(std::move(out));
}

Monomial mpow(const Monomial& u, std::uint64_t k) {
  std::vector<Exponent> out(u.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = detail::checked_mul(u[i], k);
  return Monomial(std::move(out));
}

bool divides(const Monomial& u, const Monomial& v) {
  detail::require_same_dim(u.dim(), v.dim(), "divides");
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (u[i] > v[i]) return false;
  }
  return true;
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  detail::require_same_dim(u.dim(), v.dim(), "gcd");
  std::vector<Exponent> out(u.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(u[i], v[i]);
  return Monomial(std::move(out));
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  detail::require_same_dim(u.dim(), v.dim(), "lcm");
  std::vector<Exponent> out(u.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(u[i], v[i]);
  return Monomial(std::move(out));
}

bool coprime(const Monomial& u, const Monomial& v) {
  detail::require_same_dim(u.dim(), v.dim(), "coprime");
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (u[i] != 0 && v[i] != 0) return false;
  }
  return true;
}

std::vector<std::size_t> support(const Monomial& m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m[i] != 0) out.push_back(i);
  }
  return out;
}

Monomial rad_monomial(const Monomial& m) {
  std::vector<Exponent> out(m.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = m[i] != 0 ? 1 : 0;
  return Monomial(std::move(out));
}

bool is_squarefree_monomial(const Monomial& m) {
  return std::all_of(m.exponents().begin(), m.exponents().end(),
                     [](Exponent e) { return e <= 1; });
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const Exponent da = a.degree();
  const Exponent db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = a.dim(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (m[i] != 1) os << '^' << m[i];
  }
  return os.str();
}

}  // namespace monideal
