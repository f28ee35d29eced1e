#pragma once

// The free G-graded associative algebra: graded variables x[h;i], words,
// polynomials, the degree map and the textual polynomial syntax
//
//   polynomial  := term (('+' | '-') term)*
//   term        := [coefficient '*'] factor ('*' factor)*
//   factor      := 'x' '[' element ';' integer ']'
//   coefficient := integer | integer '/' integer

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gradid/error.hpp"
#include "gradid/field.hpp"
#include "gradid/groups.hpp"

namespace gradid {

/// x[h;i]. Variables of different degree are distinct even with equal index.
struct GradedVariable {
  GroupElement degree;
  std::uint64_t index = 1;

  friend bool operator==(const GradedVariable&, const GradedVariable&) = default;
  friend auto operator<=>(const GradedVariable&, const GradedVariable&) = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<GradedVariable> letters) : letters_(std::move(letters)) {}

  const std::vector<GradedVariable>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const GradedVariable& operator[](std::size_t i) const { return letters_[i]; }

  /// Letters [begin, end), 0-based.
  Word slice(std::size_t begin, std::size_t end) const {
    if (begin > end || end > letters_.size()) throw DomainError("word slice out of range");
    return Word({letters_.begin() + static_cast<std::ptrdiff_t>(begin), letters_.begin() + static_cast<std::ptrdiff_t>(end)});
  }

  friend Word operator*(const Word& a, const Word& b) {
    std::vector<GradedVariable> out = a.letters_;
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
  }

  friend bool operator==(const Word&, const Word&) = default;

  // Degree-lexicographic: shorter words first.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (auto c = a.letters_[i] <=> b.letters_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::vector<GradedVariable> letters_;
};

inline std::vector<GroupElement> degree_sequence(const Word& w) {
  std::vector<GroupElement> out;
  out.reserve(w.size());
  for (const auto& x : w.letters()) out.push_back(x.degree);
  return out;
}

/// Product of the letter degrees in order; the empty word has degree e.
inline GroupElement word_degree(const GroupDescriptor& group, const Word& w) {
  GroupElement acc = group.identity();
  for (const auto& x : w.letters()) acc = group.op(acc, x.degree);
  return acc;
}

using Multidegree = std::map<GradedVariable, std::size_t>;

inline Multidegree multidegree(const Word& w) {
  Multidegree out;
  for (const auto& x : w.letters()) ++out[x];
  return out;
}

class GradedPolynomial {
 public:
  using Terms = std::map<Word, Rational>;

  explicit GradedPolynomial(Field field = Field::rationals()) : field_(std::move(field)) {}

  static GradedPolynomial from_word(const Field& field, Word w, const Rational& c = 1) {
    GradedPolynomial p(field);
    p.add_term(w, c);
    return p;
  }

  const Field& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  void add_term(const Word& w, const Rational& c) {
    const Rational value = field_.normalize(c);
    if (value == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, value);
      return;
    }
    it->second = field_.add(it->second, value);
    if (it->second == 0) terms_.erase(it);
  }

  /// Coefficient of w (zero when absent).
  Rational coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  GradedPolynomial& operator+=(const GradedPolynomial& other) {
    field_.check_same(other.field_);
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
  }

  GradedPolynomial& operator-=(const GradedPolynomial& other) {
    field_.check_same(other.field_);
    for (const auto& [w, c] : other.terms_) add_term(w, field_.neg(c));
    return *this;
  }

  friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
  friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }

  friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
    a.field_.check_same(b.field_);
    GradedPolynomial out(a.field_);
    for (const auto& [wa, ca] : a.terms_) {
      for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, a.field_.mul(ca, cb));
    }
    return out;
  }

  GradedPolynomial scaled(const Rational& c) const {
    GradedPolynomial out(field_);
    for (const auto& [w, v] : terms_) out.add_term(w, field_.mul(v, c));
    return out;
  }

  friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  Field field_;
  Terms terms_;
};

inline std::string format_variable(const GroupDescriptor& group, const GradedVariable& x) {
  return "x[" + group.format_element(x.degree) + ";" + std::to_string(x.index) + "]";
}

inline std::string format_word(const GroupDescriptor& group, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += format_variable(group, w[i]);
  }
  return out;
}

inline std::string format_polynomial(const GroupDescriptor& group, const GradedPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    Rational magnitude = c;
    if (c < 0) {
      out += first ? "-" : " - ";
      magnitude = -c;
    } else if (!first) {
      out += " + ";
    }
    first = false;
    if (magnitude != 1) out += f.field().format(magnitude) + "*";
    out += format_word(group, w);
  }
  return out;
}

namespace detail {

inline void expect_char(std::string_view text, std::size_t& pos, char c) {
  skip_spaces(text, pos);
  if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
  ++pos;
}

inline GradedVariable parse_factor(std::string_view text, std::size_t& pos, const GroupDescriptor& group) {
  expect_char(text, pos, 'x');
  expect_char(text, pos, '[');
  GradedVariable x;
  x.degree = group.parse_element_at(text, pos);
  expect_char(text, pos, ';');
  skip_spaces(text, pos);
  const std::size_t at = pos;
  Integer index = parse_integer_literal(text, pos);
  if (index < 1 || index > Integer(std::numeric_limits<std::uint64_t>::max())) {
    throw ParseError("variable index must be a positive integer", at);
  }
  x.index = static_cast<std::uint64_t>(index);
  expect_char(text, pos, ']');
  return x;
}

}  // namespace detail

inline GradedPolynomial parse_polynomial(std::string_view text, const GroupDescriptor& group, const Field& field) {
  GradedPolynomial f(field);
  std::size_t pos = 0;
  detail::skip_spaces(text, pos);
  if (pos == text.size()) throw ParseError("empty polynomial", pos);
  {
    std::size_t probe = pos;
    if (text[probe] == '0') {
      ++probe;
      detail::skip_spaces(text, probe);
      if (probe == text.size()) return f;
    }
  }

  bool first = true;
  while (true) {
    detail::skip_spaces(text, pos);
    Rational sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      detail::skip_spaces(text, pos);
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", pos);
    }
    first = false;

    Rational coefficient = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coefficient = field.parse_coefficient(text, pos);
      detail::expect_char(text, pos, '*');
    }
    std::vector<GradedVariable> letters;
    letters.push_back(detail::parse_factor(text, pos, group));
    while (true) {
      std::size_t probe = pos;
      detail::skip_spaces(text, probe);
      if (probe < text.size() && text[probe] == '*') {
        pos = probe + 1;
        letters.push_back(detail::parse_factor(text, pos, group));
      } else {
        break;
      }
    }
    f.add_term(Word(std::move(letters)), sign * coefficient);

    detail::skip_spaces(text, pos);
    if (pos == text.size()) break;
  }
  return f;
}

/// A single word written as a product of factors with no coefficient.
inline Word parse_word(std::string_view text, const GroupDescriptor& group) {
  std::size_t pos = 0;
  std::vector<GradedVariable> letters;
  letters.push_back(detail::parse_factor(text, pos, group));
  while (true) {
    detail::skip_spaces(text, pos);
    if (pos == text.size()) break;
    detail::expect_char(text, pos, '*');
    letters.push_back(detail::parse_factor(text, pos, group));
  }
  return Word(std::move(letters));
}

/// Terms grouped by multidegree; components are returned in ascending
/// multidegree order and sum to f.
inline std::vector<GradedPolynomial> multihomogeneous_components(const GradedPolynomial& f) {
  std::map<Multidegree, GradedPolynomial> parts;
  for (const auto& [w, c] : f.terms()) {
    auto [it, inserted] = parts.try_emplace(multidegree(w), f.field());
    it->second.add_term(w, c);
  }
  std::vector<GradedPolynomial> out;
  out.reserve(parts.size());
  for (auto& [md, p] : parts) out.push_back(std::move(p));
  return out;
}

inline bool is_multihomogeneous(const GradedPolynomial& f) {
  if (f.is_zero()) return true;
  const Multidegree first = multidegree(f.terms().begin()->first);
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& term) { return multidegree(term.first) == first; });
}

/// Every variable occurs at most once per term and all terms use the same
/// variables. The zero polynomial counts as multilinear.
inline bool is_multilinear(const GradedPolynomial& f) {
  if (!is_multihomogeneous(f)) return false;
  for (const auto& [w, c] : f.terms()) {
    for (const auto& [x, count] : multidegree(w)) {
      if (count != 1) return false;
    }
  }
  return true;
}

}  // namespace gradid
