#pragma once

// Grading groups: cyclic groups, the integers, direct products and finite
// groups given by a validated multiplication table.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gradid/error.hpp"

namespace gradid {

using Integer = boost::multiprecision::cpp_int;

/// An element of some GroupDescriptor. Elements do not know their group;
/// every operation takes the descriptor as context.
class GroupElement {
 public:
  enum class Kind : std::uint8_t { residue, integer, tuple, label };

  GroupElement() = default;

  static GroupElement residue(std::int64_t value) {
    GroupElement e;
    e.kind_ = Kind::residue;
    e.small_ = value;
    return e;
  }
  static GroupElement integer(Integer value) {
    GroupElement e;
    e.kind_ = Kind::integer;
    e.big_ = std::move(value);
    return e;
  }
  static GroupElement tuple(std::vector<GroupElement> parts) {
    GroupElement e;
    e.kind_ = Kind::tuple;
    e.parts_ = std::move(parts);
    return e;
  }
  static GroupElement label(std::size_t index) {
    GroupElement e;
    e.kind_ = Kind::label;
    e.small_ = static_cast<std::int64_t>(index);
    return e;
  }

  Kind kind() const noexcept { return kind_; }
  std::int64_t residue_value() const noexcept { return small_; }
  std::size_t label_index() const noexcept { return static_cast<std::size_t>(small_); }
  const Integer& integer_value() const noexcept { return big_; }
  const std::vector<GroupElement>& parts() const noexcept { return parts_; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case Kind::residue:
      case Kind::label:
        return a.small_ == b.small_;
      case Kind::integer:
        return a.big_ == b.big_;
      case Kind::tuple:
        return a.parts_ == b.parts_;
    }
    return false;
  }

  // Numeric order for residues and integers, label-index order for table
  // groups, lexicographic order for tuples.
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    switch (a.kind_) {
      case Kind::residue:
      case Kind::label:
        return a.small_ <=> b.small_;
      case Kind::integer:
        if (a.big_ < b.big_) return std::strong_ordering::less;
        if (b.big_ < a.big_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
      case Kind::tuple: {
        const std::size_t common = std::min(a.parts_.size(), b.parts_.size());
        for (std::size_t i = 0; i < common; ++i) {
          if (auto c = a.parts_[i] <=> b.parts_[i]; c != 0) return c;
        }
        return a.parts_.size() <=> b.parts_.size();
      }
    }
    return std::strong_ordering::equal;
  }

 private:
  Kind kind_ = Kind::residue;
  std::int64_t small_ = 0;
  Integer big_;
  std::vector<GroupElement> parts_;
};

/// First failed group axiom of a multiplication table, with the offending
/// label indices.
struct CayleyViolation {
  std::string axiom;  // "range", "latin-square", "identity", "inverse", "associativity"
  std::vector<std::size_t> witnesses;

  std::string message() const {
    std::ostringstream out;
    out << "multiplication table violates " << axiom;
    if (!witnesses.empty()) {
      out << " at (";
      for (std::size_t i = 0; i < witnesses.size(); ++i) out << (i ? "," : "") << witnesses[i];
      out << ")";
    }
    return out.str();
  }
};

namespace detail {

inline bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '^' || c == '.';
}

inline void skip_spaces(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

// Optional sign followed by decimal digits.
inline Integer parse_integer_literal(std::string_view text, std::size_t& pos) {
  skip_spaces(text, pos);
  const std::size_t start = pos;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits) throw ParseError("expected an integer", start);
  Integer value(std::string(text.substr(digits, pos - digits)));
  return negative ? Integer(-value) : value;
}

}  // namespace detail

/// Checks that `table` (entries are label indices, table[a][b] = a*b) is the
/// multiplication table of a group. Throws DomainError on a dimension mismatch.
inline std::optional<CayleyViolation> validate_cayley(const std::vector<std::string>& names,
                                                      const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t size = names.size();
  if (size == 0) throw DomainError("multiplication table must have at least one element");
  if (table.size() != size) throw DomainError("multiplication table row count does not match the name count");
  for (const auto& row : table) {
    if (row.size() != size) throw DomainError("multiplication table is not square");
  }
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (table[a][b] >= size) return CayleyViolation{"range", {a, b}};
    }
  }
  for (std::size_t a = 0; a < size; ++a) {
    std::vector<bool> row_seen(size, false), col_seen(size, false);
    for (std::size_t b = 0; b < size; ++b) {
      if (row_seen[table[a][b]]) return CayleyViolation{"latin-square", {a, b}};
      row_seen[table[a][b]] = true;
      if (col_seen[table[b][a]]) return CayleyViolation{"latin-square", {b, a}};
      col_seen[table[b][a]] = true;
    }
  }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < size && !identity; ++e) {
    bool neutral = true;
    for (std::size_t a = 0; a < size && neutral; ++a) neutral = table[e][a] == a && table[a][e] == a;
    if (neutral) identity = e;
  }
  if (!identity) return CayleyViolation{"identity", {}};
  for (std::size_t a = 0; a < size; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < size && !found; ++b) found = table[a][b] == *identity && table[b][a] == *identity;
    if (!found) return CayleyViolation{"inverse", {a}};
  }
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      for (std::size_t c = 0; c < size; ++c) {
        if (table[a][table[b][c]] != table[table[a][b]][c]) return CayleyViolation{"associativity", {a, b, c}};
      }
    }
  }
  return std::nullopt;
}

class GroupDescriptor {
 public:
  enum class Kind : std::uint8_t { cyclic, integers, product, cayley };

  static GroupDescriptor cyclic(std::int64_t order) {
    if (order < 1) throw DomainError("cyclic group order must be positive");
    if (order > std::numeric_limits<std::int64_t>::max() / 2) throw DomainError("cyclic group order too large");
    GroupDescriptor d;
    d.kind_ = Kind::cyclic;
    d.order_ = order;
    return d;
  }

  static GroupDescriptor integers() {
    GroupDescriptor d;
    d.kind_ = Kind::integers;
    return d;
  }

  static GroupDescriptor product(std::vector<GroupDescriptor> factors) {
    if (factors.empty()) throw DomainError("a direct product needs at least one factor");
    GroupDescriptor d;
    d.kind_ = Kind::product;
    d.factors_ = std::make_shared<const std::vector<GroupDescriptor>>(std::move(factors));
    return d;
  }

  /// Throws DomainError if the names are not distinct labels or the table
  /// fails any group axiom.
  static GroupDescriptor cayley(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].empty() || !std::all_of(names[i].begin(), names[i].end(), detail::is_label_char)) {
        throw DomainError("invalid element label '" + names[i] + "'");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (names[i] == names[j]) throw DomainError("duplicate element label '" + names[i] + "'");
      }
    }
    if (auto violation = validate_cayley(names, table)) throw DomainError(violation->message());
    auto data = std::make_shared<CayleyData>();
    const std::size_t size = names.size();
    for (std::size_t e = 0; e < size; ++e) {
      bool neutral = true;
      for (std::size_t a = 0; a < size && neutral; ++a) neutral = table[e][a] == a;
      if (neutral) {
        data->identity = e;
        break;
      }
    }
    data->inverses.resize(size);
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = 0; b < size; ++b) {
        if (table[a][b] == data->identity) data->inverses[a] = b;
      }
    }
    data->names = std::move(names);
    data->table = std::move(table);
    GroupDescriptor d;
    d.kind_ = Kind::cayley;
    d.cayley_ = std::move(data);
    return d;
  }

  Kind kind() const noexcept { return kind_; }
  std::int64_t cyclic_order() const noexcept { return order_; }
  const std::vector<GroupDescriptor>& factors() const { return *factors_; }
  const std::vector<std::string>& names() const { return cayley_->names; }
  const std::vector<std::vector<std::size_t>>& table() const { return cayley_->table; }

  bool is_finite() const {
    switch (kind_) {
      case Kind::cyclic:
      case Kind::cayley:
        return true;
      case Kind::integers:
        return false;
      case Kind::product:
        return std::all_of(factors_->begin(), factors_->end(), [](const auto& f) { return f.is_finite(); });
    }
    return false;
  }

  /// Group order, absent for infinite groups.
  std::optional<Integer> order() const {
    switch (kind_) {
      case Kind::cyclic:
        return Integer(order_);
      case Kind::cayley:
        return Integer(cayley_->names.size());
      case Kind::integers:
        return std::nullopt;
      case Kind::product: {
        Integer total = 1;
        for (const auto& f : *factors_) {
          auto o = f.order();
          if (!o) return std::nullopt;
          total *= *o;
        }
        return total;
      }
    }
    return std::nullopt;
  }

  bool contains(const GroupElement& e) const {
    switch (kind_) {
      case Kind::cyclic:
        return e.kind() == GroupElement::Kind::residue && e.residue_value() >= 0 && e.residue_value() < order_;
      case Kind::integers:
        return e.kind() == GroupElement::Kind::integer;
      case Kind::cayley:
        return e.kind() == GroupElement::Kind::label && e.label_index() < cayley_->names.size();
      case Kind::product: {
        if (e.kind() != GroupElement::Kind::tuple || e.parts().size() != factors_->size()) return false;
        for (std::size_t i = 0; i < factors_->size(); ++i) {
          if (!(*factors_)[i].contains(e.parts()[i])) return false;
        }
        return true;
      }
    }
    return false;
  }

  void check(const GroupElement& e) const {
    if (!contains(e)) throw DomainError("element does not belong to " + describe());
  }

  GroupElement identity() const {
    switch (kind_) {
      case Kind::cyclic:
        return GroupElement::residue(0);
      case Kind::integers:
        return GroupElement::integer(0);
      case Kind::cayley:
        return GroupElement::label(cayley_->identity);
      case Kind::product: {
        std::vector<GroupElement> parts;
        parts.reserve(factors_->size());
        for (const auto& f : *factors_) parts.push_back(f.identity());
        return GroupElement::tuple(std::move(parts));
      }
    }
    return {};
  }

  GroupElement op(const GroupElement& a, const GroupElement& b) const {
    check(a);
    check(b);
    return op_unchecked(a, b);
  }

  GroupElement inverse(const GroupElement& a) const {
    check(a);
    return inverse_unchecked(a);
  }

  bool is_identity(const GroupElement& a) const { return a == identity(); }

  /// All elements in ascending order. Throws for infinite groups.
  std::vector<GroupElement> elements() const {
    switch (kind_) {
      case Kind::cyclic: {
        if (order_ > (std::int64_t{1} << 24)) throw DomainError("group too large to enumerate");
        std::vector<GroupElement> out;
        out.reserve(static_cast<std::size_t>(order_));
        for (std::int64_t r = 0; r < order_; ++r) out.push_back(GroupElement::residue(r));
        return out;
      }
      case Kind::cayley: {
        std::vector<GroupElement> out;
        for (std::size_t i = 0; i < cayley_->names.size(); ++i) out.push_back(GroupElement::label(i));
        return out;
      }
      case Kind::integers:
        throw DomainError("the integers cannot be enumerated");
      case Kind::product: {
        std::vector<std::vector<GroupElement>> tuples{{}};
        for (const auto& f : *factors_) {
          std::vector<std::vector<GroupElement>> next;
          for (const auto& prefix : tuples) {
            for (const auto& x : f.elements()) {
              next.push_back(prefix);
              next.back().push_back(x);
            }
          }
          tuples = std::move(next);
          if (tuples.size() > (std::size_t{1} << 24)) throw DomainError("group too large to enumerate");
        }
        std::vector<GroupElement> out;
        out.reserve(tuples.size());
        for (auto& t : tuples) out.push_back(GroupElement::tuple(std::move(t)));
        return out;
      }
    }
    return {};
  }

  /// Parses one element literal starting at `pos`, advancing `pos` past it.
  GroupElement parse_element_at(std::string_view text, std::size_t& pos) const {
    detail::skip_spaces(text, pos);
    const std::size_t start = pos;
    switch (kind_) {
      case Kind::cyclic: {
        Integer value = detail::parse_integer_literal(text, pos);
        if (value < 0 || value >= order_) {
          throw ParseError("residue out of range for " + describe(), start);
        }
        return GroupElement::residue(static_cast<std::int64_t>(value));
      }
      case Kind::integers:
        return GroupElement::integer(detail::parse_integer_literal(text, pos));
      case Kind::cayley: {
        while (pos < text.size() && detail::is_label_char(text[pos])) ++pos;
        const std::string_view label = text.substr(start, pos - start);
        if (label.empty()) throw ParseError("expected an element label", start);
        const auto& names = cayley_->names;
        auto it = std::find(names.begin(), names.end(), label);
        if (it == names.end()) throw ParseError("unknown element label '" + std::string(label) + "'", start);
        return GroupElement::label(static_cast<std::size_t>(it - names.begin()));
      }
      case Kind::product: {
        if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '(' to open a tuple", pos);
        ++pos;
        std::vector<GroupElement> parts;
        for (std::size_t i = 0; i < factors_->size(); ++i) {
          if (i > 0) {
            detail::skip_spaces(text, pos);
            if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ',' in tuple", pos);
            ++pos;
          }
          parts.push_back((*factors_)[i].parse_element_at(text, pos));
        }
        detail::skip_spaces(text, pos);
        if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')' to close a tuple", pos);
        ++pos;
        return GroupElement::tuple(std::move(parts));
      }
    }
    throw ParseError("unsupported group", start);
  }

  GroupElement parse_element(std::string_view text) const {
    std::size_t pos = 0;
    GroupElement e = parse_element_at(text, pos);
    detail::skip_spaces(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters after element", pos);
    return e;
  }

  /// Comma-separated element literals, e.g. "1,3" or "(1,0),(0,1)".
  std::vector<GroupElement> parse_sequence(std::string_view text) const {
    std::vector<GroupElement> out;
    std::size_t pos = 0;
    detail::skip_spaces(text, pos);
    if (pos == text.size()) return out;
    while (true) {
      out.push_back(parse_element_at(text, pos));
      detail::skip_spaces(text, pos);
      if (pos == text.size()) break;
      if (text[pos] != ',') throw ParseError("expected ',' between elements", pos);
      ++pos;
    }
    return out;
  }

  std::string format_element(const GroupElement& e) const {
    check(e);
    switch (kind_) {
      case Kind::cyclic:
        return std::to_string(e.residue_value());
      case Kind::integers:
        return e.integer_value().str();
      case Kind::cayley:
        return cayley_->names[e.label_index()];
      case Kind::product: {
        std::string out = "(";
        for (std::size_t i = 0; i < factors_->size(); ++i) {
          if (i) out += ',';
          out += (*factors_)[i].format_element(e.parts()[i]);
        }
        return out + ")";
      }
    }
    return {};
  }

  std::string format_sequence(const std::vector<GroupElement>& seq) const {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i) out += ',';
      out += format_element(seq[i]);
    }
    return out;
  }

  std::string describe() const {
    switch (kind_) {
      case Kind::cyclic:
        return "cyclic(" + std::to_string(order_) + ")";
      case Kind::integers:
        return "integers";
      case Kind::cayley:
        return "cayley(" + std::to_string(cayley_->names.size()) + ")";
      case Kind::product: {
        std::string out = "product(";
        for (std::size_t i = 0; i < factors_->size(); ++i) out += (i ? "," : "") + (*factors_)[i].describe();
        return out + ")";
      }
    }
    return {};
  }

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case Kind::cyclic:
        return a.order_ == b.order_;
      case Kind::integers:
        return true;
      case Kind::product:
        return *a.factors_ == *b.factors_;
      case Kind::cayley:
        return a.cayley_->names == b.cayley_->names && a.cayley_->table == b.cayley_->table;
    }
    return false;
  }

  GroupElement op_unchecked(const GroupElement& a, const GroupElement& b) const {
    switch (kind_) {
      case Kind::cyclic: {
        std::int64_t s = a.residue_value() + b.residue_value();
        if (s >= order_) s -= order_;
        return GroupElement::residue(s);
      }
      case Kind::integers:
        return GroupElement::integer(a.integer_value() + b.integer_value());
      case Kind::cayley:
        return GroupElement::label(cayley_->table[a.label_index()][b.label_index()]);
      case Kind::product: {
        std::vector<GroupElement> parts;
        parts.reserve(factors_->size());
        for (std::size_t i = 0; i < factors_->size(); ++i) {
          parts.push_back((*factors_)[i].op_unchecked(a.parts()[i], b.parts()[i]));
        }
        return GroupElement::tuple(std::move(parts));
      }
    }
    return {};
  }

  GroupElement inverse_unchecked(const GroupElement& a) const {
    switch (kind_) {
      case Kind::cyclic:
        return GroupElement::residue(a.residue_value() == 0 ? 0 : order_ - a.residue_value());
      case Kind::integers:
        return GroupElement::integer(-a.integer_value());
      case Kind::cayley:
        return GroupElement::label(cayley_->inverses[a.label_index()]);
      case Kind::product: {
        std::vector<GroupElement> parts;
        parts.reserve(factors_->size());
        for (std::size_t i = 0; i < factors_->size(); ++i) {
          parts.push_back((*factors_)[i].inverse_unchecked(a.parts()[i]));
        }
        return GroupElement::tuple(std::move(parts));
      }
    }
    return {};
  }

 private:
  struct CayleyData {
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> table;
    std::size_t identity = 0;
    std::vector<std::size_t> inverses;
  };

  Kind kind_ = Kind::cyclic;
  std::int64_t order_ = 1;
  std::shared_ptr<const std::vector<GroupDescriptor>> factors_;
  std::shared_ptr<const CayleyData> cayley_;
};

/// Ordered product of a sequence of elements; the empty product is the identity.
inline GroupElement product_of(const GroupDescriptor& group, const std::vector<GroupElement>& seq) {
  GroupElement acc = group.identity();
  for (const auto& h : seq) acc = group.op(acc, h);
  return acc;
}

}  // namespace gradid
