#pragma once

// Generic matrices over the polynomial ring in the y[h;i;k] and evaluation of
// graded words and polynomials on them.
//
// The generic matrix of degree h and index i is
//   A_i^(h) = sum over k in L_h of y[h;i;k] E_{k, s(k)},  g_{s(k)} = g_k h.
// A product of generic matrices has one entry per surviving row k, at column
// s_{q+1}^k, equal to the monomial y[h_1;i_1;s_1^k] ... y[h_q;i_q;s_q^k].

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradid/commpoly.hpp"
#include "gradid/error.hpp"
#include "gradid/freealg.hpp"
#include "gradid/grading.hpp"

namespace gradid {

using Position = std::pair<std::size_t, std::size_t>;  // 1-based (row, column)

class GenericMatrix {
 public:
  using Entries = std::map<Position, CommPolynomial>;

  GenericMatrix(std::size_t n, Field field) : n_(n), field_(std::move(field)) {}

  std::size_t n() const noexcept { return n_; }
  const Field& field() const noexcept { return field_; }
  const Entries& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }

  /// The entry at (i, j); zero when not stored.
  CommPolynomial at(std::size_t i, std::size_t j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? CommPolynomial(field_) : it->second;
  }

  void add_to(std::size_t i, std::size_t j, const CommPolynomial& value) {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw DomainError("matrix position out of range");
    if (value.is_zero()) return;
    auto it = entries_.find({i, j});
    if (it == entries_.end()) {
      entries_.emplace(Position{i, j}, value);
      return;
    }
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }

  GenericMatrix& operator+=(const GenericMatrix& other) {
    check_compatible(other);
    for (const auto& [pos, v] : other.entries_) add_to(pos.first, pos.second, v);
    return *this;
  }

  GenericMatrix scaled(const Rational& c) const {
    GenericMatrix out(n_, field_);
    for (const auto& [pos, v] : entries_) out.add_to(pos.first, pos.second, v.scaled(c));
    return out;
  }

  friend GenericMatrix operator*(const GenericMatrix& a, const GenericMatrix& b) {
    a.check_compatible(b);
    GenericMatrix out(a.n_, a.field_);
    std::map<std::size_t, std::vector<std::pair<std::size_t, const CommPolynomial*>>> rows_of_b;
    for (const auto& [pos, v] : b.entries_) rows_of_b[pos.first].emplace_back(pos.second, &v);
    for (const auto& [pos, v] : a.entries_) {
      auto it = rows_of_b.find(pos.second);
      if (it == rows_of_b.end()) continue;
      for (const auto& [col, w] : it->second) out.add_to(pos.first, col, v * *w);
    }
    return out;
  }

  friend bool operator==(const GenericMatrix& a, const GenericMatrix& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.entries_ == b.entries_;
  }

  /// "(i,j): polynomial" lines in row-major order, or "0".
  std::string format(const GroupDescriptor& group) const {
    if (entries_.empty()) return "0";
    std::string out;
    for (const auto& [pos, v] : entries_) {
      if (!out.empty()) out += '\n';
      out += "(" + std::to_string(pos.first) + "," + std::to_string(pos.second) + "): " + v.format(group);
    }
    return out;
  }

 private:
  void check_compatible(const GenericMatrix& other) const {
    if (n_ != other.n_) throw DomainError("matrix size mismatch");
    field_.check_same(other.field_);
  }

  std::size_t n_;
  Field field_;
  Entries entries_;
};

inline GenericMatrix generic_matrix(const GradingSpec& spec, const Field& field, const GroupElement& h,
                                    std::uint64_t index) {
  const auto& group = spec.group();
  group.check(h);
  GenericMatrix out(spec.n(), field);
  for (std::size_t k = 1; k <= spec.n(); ++k) {
    if (auto column = spec.index_of(group.op_unchecked(spec.entry(k), h))) {
      out.add_to(k, *column, CommPolynomial::variable(field, YVariable{h, index, k}));
    }
  }
  return out;
}

/// Left-to-right product of the generic matrices of the letters. Kept as an
/// independent reference for word_product_closed.
inline GenericMatrix word_product_direct(const GradingSpec& spec, const Field& field, const Word& m) {
  if (m.empty()) throw PreconditionError("cannot evaluate the empty word");
  GenericMatrix acc = generic_matrix(spec, field, m[0].degree, m[0].index);
  for (std::size_t l = 1; l < m.size(); ++l) acc = acc * generic_matrix(spec, field, m[l].degree, m[l].index);
  return acc;
}

/// Monomial w_k placed by the index chain of row k.
inline CommMonomial chain_monomial(const Word& m, const IndexChain& chain) {
  CommMonomial w;
  for (std::size_t l = 0; l < m.size(); ++l) {
    w = w * CommMonomial(YVariable{m[l].degree, m[l].index, chain.indices[l]});
  }
  return w;
}

inline GenericMatrix word_product_closed(const GradingSpec& spec, const Field& field, const Word& m) {
  if (m.empty()) throw PreconditionError("cannot evaluate the empty word");
  GenericMatrix out(spec.n(), field);
  const LSetResult lset = l_set(spec, degree_sequence(m));
  for (const auto& chain : lset.chains) {
    out.add_to(chain.start, chain.indices.back(), CommPolynomial::monomial(field, chain_monomial(m, chain)));
  }
  return out;
}

inline GenericMatrix evaluate(const GradingSpec& spec, const GradedPolynomial& f) {
  GenericMatrix out(spec.n(), f.field());
  for (const auto& [w, c] : f.terms()) {
    if (w.empty()) throw PreconditionError("polynomial has a constant term");
    out += word_product_closed(spec, f.field(), w).scaled(c);
  }
  return out;
}

/// Membership in the graded identities of the matrix algebra. Requires a
/// tuple with pairwise distinct entries.
inline bool is_graded_identity(const GradingSpec& spec, const GradedPolynomial& f) {
  spec.require_distinct_entries();
  return evaluate(spec, f).is_zero();
}

struct MatchingEntry {
  Position position;
  CommMonomial monomial;

  friend bool operator==(const MatchingEntry&, const MatchingEntry&) = default;
};

/// First position, in row-major order, where both words evaluate to the
/// same nonzero monomial.
inline std::optional<MatchingEntry> matching_entry(const GradingSpec& spec, const Word& m, const Word& n) {
  const Field field;
  const GenericMatrix a = word_product_closed(spec, field, m);
  const GenericMatrix b = word_product_closed(spec, field, n);
  for (const auto& [pos, value] : a.entries()) {
    auto it = b.entries().find(pos);
    if (it != b.entries().end() && it->second == value) {
      if (auto mono = value.as_monic_monomial()) return MatchingEntry{pos, *mono};
    }
  }
  return std::nullopt;
}

struct LetterPermutation {
  // sigma[l] (0-based) is the position in m of the l-th letter of n.
  std::vector<std::size_t> sigma;
  // prefix_degrees_agree[l]: alpha(n[0, l)) == alpha(m[0, sigma[l])).
  std::vector<bool> prefix_degrees_agree;

  bool all_conditions_hold() const {
    for (bool ok : prefix_degrees_agree) {
      if (!ok) return false;
    }
    return true;
  }
};

/// The permutation carrying the letters of m onto those of n that is read off
/// a common nonzero entry: letter l of n is matched with a letter of m equal
/// to it and sitting on the same row of the index chain. Among valid choices
/// the lexicographically least sigma is returned.
inline LetterPermutation corollary_c2_permutation(const GradingSpec& spec, const Word& m, const Word& n,
                                                  const Position& position) {
  if (m.size() != n.size()) throw Error("words of different length share no entry");
  const LSetResult lm = l_set(spec, degree_sequence(m));
  const LSetResult ln = l_set(spec, degree_sequence(n));
  const IndexChain* cm = lm.find(position.first);
  const IndexChain* cn = ln.find(position.first);
  if (!cm || !cn || cm->indices.back() != position.second || cn->indices.back() != position.second) {
    throw Error("no nonzero entry at the given position");
  }

  LetterPermutation result;
  std::vector<bool> used(m.size(), false);
  for (std::size_t l = 0; l < n.size(); ++l) {
    bool found = false;
    for (std::size_t p = 0; p < m.size(); ++p) {
      if (!used[p] && m[p] == n[l] && cm->indices[p] == cn->indices[l]) {
        used[p] = true;
        result.sigma.push_back(p);
        found = true;
        break;
      }
    }
    if (!found) throw Error("entries differ: no letter permutation exists");
  }

  const auto& group = spec.group();
  for (std::size_t l = 0; l < n.size(); ++l) {
    result.prefix_degrees_agree.push_back(word_degree(group, n.slice(0, l)) ==
                                          word_degree(group, m.slice(0, result.sigma[l])));
  }
  return result;
}

}  // namespace gradid
