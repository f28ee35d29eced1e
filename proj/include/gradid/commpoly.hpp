#pragma once

// Sparse exact polynomials in the commuting variables y[h;i;k].

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradid/field.hpp"
#include "gradid/groups.hpp"

namespace gradid {

/// y[h;i;k]: degree h, generic-matrix index i, row k.
struct YVariable {
  GroupElement degree;
  std::uint64_t index = 1;
  std::size_t row = 1;

  friend bool operator==(const YVariable&, const YVariable&) = default;
  friend auto operator<=>(const YVariable&, const YVariable&) = default;
};

/// Product of variables with positive exponents, kept sorted by variable.
class CommMonomial {
 public:
  using Factor = std::pair<YVariable, std::uint32_t>;

  CommMonomial() = default;
  explicit CommMonomial(YVariable v) { factors_.emplace_back(std::move(v), 1); }

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  friend CommMonomial operator*(const CommMonomial& a, const CommMonomial& b) {
    CommMonomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
        out.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->first < i->first) {
        out.factors_.push_back(*j++);
      } else {
        out.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend bool operator==(const CommMonomial&, const CommMonomial&) = default;
  friend auto operator<=>(const CommMonomial&, const CommMonomial&) = default;

  std::string format(const GroupDescriptor& group) const {
    if (factors_.empty()) return "1";
    std::string out;
    for (std::size_t n = 0; n < factors_.size(); ++n) {
      const auto& [v, e] = factors_[n];
      if (n) out += '*';
      out += "y[" + group.format_element(v.degree) + ";" + std::to_string(v.index) + ";" + std::to_string(v.row) + "]";
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  std::vector<Factor> factors_;
};

class CommPolynomial {
 public:
  using Terms = std::map<CommMonomial, Rational>;

  explicit CommPolynomial(Field field = Field::rationals()) : field_(std::move(field)) {}

  static CommPolynomial monomial(const Field& field, CommMonomial m, const Rational& c = 1) {
    CommPolynomial p(field);
    Rational value = field.normalize(c);
    if (value != 0) p.terms_.emplace(std::move(m), std::move(value));
    return p;
  }

  static CommPolynomial variable(const Field& field, YVariable v) { return monomial(field, CommMonomial(std::move(v))); }

  const Field& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// The monomial when this is a single term with coefficient 1.
  std::optional<CommMonomial> as_monic_monomial() const {
    if (terms_.size() != 1 || terms_.begin()->second != 1) return std::nullopt;
    return terms_.begin()->first;
  }

  CommPolynomial& operator+=(const CommPolynomial& other) {
    field_.check_same(other.field_);
    for (const auto& [m, c] : other.terms_) accumulate(m, c);
    return *this;
  }

  CommPolynomial& operator-=(const CommPolynomial& other) {
    field_.check_same(other.field_);
    for (const auto& [m, c] : other.terms_) accumulate(m, field_.neg(c));
    return *this;
  }

  friend CommPolynomial operator+(CommPolynomial a, const CommPolynomial& b) { return a += b; }
  friend CommPolynomial operator-(CommPolynomial a, const CommPolynomial& b) { return a -= b; }

  friend CommPolynomial operator*(const CommPolynomial& a, const CommPolynomial& b) {
    a.field_.check_same(b.field_);
    CommPolynomial out(a.field_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.accumulate(ma * mb, a.field_.mul(ca, cb));
    }
    return out;
  }

  CommPolynomial scaled(const Rational& c) const {
    CommPolynomial out(field_);
    const Rational s = field_.normalize(c);
    if (s == 0) return out;
    for (const auto& [m, v] : terms_) {
      Rational prod = field_.mul(v, s);
      if (prod != 0) out.terms_.emplace(m, std::move(prod));
    }
    return out;
  }

  friend bool operator==(const CommPolynomial& a, const CommPolynomial& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  std::string format(const GroupDescriptor& group) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational magnitude = c;
      if (c < 0) {
        out += first ? "-" : " - ";
        magnitude = -c;
      } else if (!first) {
        out += " + ";
      }
      first = false;
      if (m.is_one()) {
        out += field_.format(magnitude);
      } else {
        if (magnitude != 1) out += field_.format(magnitude) + "*";
        out += m.format(group);
      }
    }
    return out;
  }

 private:
  void accumulate(const CommMonomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(m, c);
      return;
    }
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  Field field_;
  Terms terms_;
};

}  // namespace gradid
