#include "monideal/text.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

#include "monideal/errors.hpp"

namespace monideal {

namespace {

// Factors keyed by 0-based variable; exponents of repeated variables add up.
using RawMonomial = std::map<std::size_t, Exponent>;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<std::pair<std::size_t, RawMonomial>> ideal() {
    std::vector<std::pair<std::size_t, RawMonomial>> gens;
    expect('(');
    skip_ws();
    if (peek() == '0') {
      const std::size_t at = pos_;
      if (integer() != 0) throw ParseError("expected monomial", at);
      expect(')');
      return gens;
    }
    for (;;) {
      const std::size_t at = (skip_ws(), pos_);
      gens.emplace_back(at, monomial());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      return gens;
    }
  }

  RawMonomial monomial() {
    skip_ws();
    RawMonomial out;
    if (peek() == '1') {
      const std::size_t at = pos_;
      if (integer() != 1) throw ParseError("expected monomial", at);
      return out;
    }
    for (;;) {
      factor(out);
      skip_ws();
      if (peek() != '*') return out;
      ++pos_;
    }
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
  }

  std::size_t max_index() const noexcept { return max_index_; }
  std::size_t max_index_position() const noexcept { return max_index_pos_; }

 private:
  void factor(RawMonomial& out) {
    skip_ws();
    if (peek() != 'x') throw ParseError("expected variable 'x<index>'", pos_);
    ++pos_;
    skip_ws();
    const std::size_t index_pos = pos_;
    const Exponent index = integer();
    if (index == 0) throw ParseError("variable index 0 (indices start at 1)", index_pos);
    if (index > std::numeric_limits<std::size_t>::max() / 2) {
      throw ParseError("variable index too large", index_pos);
    }
    Exponent exponent = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t exp_pos = pos_;
      exponent = integer();
      if (exponent == 0) {
        throw ParseError("exponent 0 in factor (omit the factor instead)", exp_pos);
      }
    }
    const std::size_t var = static_cast<std::size_t>(index - 1);
    Exponent& slot = out[var];
    if (__builtin_add_overflow(slot, exponent, &slot)) {
      throw ParseError("exponent overflow", index_pos);
    }
    if (index > max_index_) {
      max_index_ = static_cast<std::size_t>(index);
      max_index_pos_ = index_pos;
    }
  }

  Exponent integer() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected integer", pos_);
    }
    const std::size_t start = pos_;
    Exponent value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const Exponent digit = static_cast<Exponent>(peek() - '0');
      if (__builtin_mul_overflow(value, Exponent{10}, &value) ||
          __builtin_add_overflow(value, digit, &value)) {
        throw ParseError("integer out of range", start);
      }
      ++pos_;
    }
    return value;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t max_index_ = 0;
  std::size_t max_index_pos_ = 0;
};

std::size_t resolve_dim(const Parser& p, std::optional<std::size_t> dim) {
  if (!dim) return std::max<std::size_t>(p.max_index(), 1);
  if (*dim == 0) throw ParseError("dimension must be positive", 0);
  if (*dim < p.max_index()) {
    throw ParseError("variable x" + std::to_string(p.max_index()) + " exceeds dimension " +
                         std::to_string(*dim),
                     p.max_index_position());
  }
  return *dim;
}

Monomial build(const RawMonomial& raw, std::size_t dim) {
  std::vector<Exponent> exps(dim, 0);
  for (const auto& [var, e] : raw) exps[var] = e;
  return Monomial(std::move(exps));
}

}  // namespace

Monomial parse_monomial(std::string_view text, std::optional<std::size_t> dim) {
  Parser p(text);
  RawMonomial raw = p.monomial();
  p.finish();
  return build(raw, resolve_dim(p, dim));
}

MonomialIdeal parse_ideal(std::string_view text, std::optional<std::size_t> dim) {
  Parser p(text);
  auto raw = p.ideal();
  p.finish();
  const std::size_t d = resolve_dim(p, dim);
  std::vector<Monomial> gens;
  gens.reserve(raw.size());
  for (const auto& [at, m] : raw) {
    if (m.empty()) throw ParseError("ideal must be proper: generator 1 rejected", at);
    gens.push_back(build(m, d));
  }
  if (gens.empty()) return MonomialIdeal::zero(d);
  return MonomialIdeal::from_generators(d, std::move(gens));
}

std::string to_string(const ParametricIdeal& q) {
  std::string out = "(";
  for (std::size_t i = 0; i < q.assignments().size(); ++i) {
    const auto& a = q.assignments()[i];
    if (i) out += ", ";
    out += to_string(Monomial::variable(q.dim(), a.index, a.exponent));
  }
  out += ')';
  return out;
}

std::string to_string(const Decomposition& decomposition, Notation notation) {
  const char* sep = notation == Notation::Ascii ? " /\\ " : " ∩ ";
  std::string out;
  for (std::size_t i = 0; i < decomposition.components.size(); ++i) {
    if (i) out += sep;
    out += to_string(decomposition.components[i]);
  }
  return out;
}

std::string to_string(const std::vector<PrimeSupport>& supports) {
  std::string out = "{";
  for (std::size_t i = 0; i < supports.size(); ++i) {
    if (i) out += ", ";
    out += to_string(supports[i]);
  }
  out += '}';
  return out;
}

}  // namespace monideal
