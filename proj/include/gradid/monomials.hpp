#pragma once

// Monomial graded identities. A word is an identity exactly when its degree
// sequence leaves no surviving row chain, so everything here works on degree
// sequences over the support alphabet.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gradid/error.hpp"
#include "gradid/grading.hpp"

namespace gradid {

using DegreeSequence = std::vector<GroupElement>;

inline bool is_monomial_identity(const GradingSpec& spec, const DegreeSequence& hseq) {
  if (hseq.empty()) throw PreconditionError("the empty word is never an identity");
  return l_set(spec, hseq).empty();
}

/// Subset automaton over the support alphabet. A state is the set of rows
/// currently reached by some chain (bit j-1 for row j); the start state holds
/// every row and the empty set accepts.
class PositionAutomaton {
 public:
  using State = std::uint64_t;

  explicit PositionAutomaton(const GradingSpec& spec) : spec_(&spec), alphabet_(support(spec)) {
    if (spec.n() > 64) throw DomainError("the position automaton supports n <= 64");
    const auto& group = spec.group();
    next_.assign(spec.n(), std::vector<std::size_t>(alphabet_.size(), 0));
    for (std::size_t j = 1; j <= spec.n(); ++j) {
      for (std::size_t a = 0; a < alphabet_.size(); ++a) {
        if (auto target = spec.index_of(group.op_unchecked(spec.entry(j), alphabet_[a]))) next_[j - 1][a] = *target;
      }
    }
    for (std::size_t a = 0; a < alphabet_.size(); ++a) letter_of_.emplace(alphabet_[a], a);
  }

  const GradingSpec& spec() const noexcept { return *spec_; }
  const std::vector<GroupElement>& alphabet() const noexcept { return alphabet_; }

  State initial() const noexcept {
    return spec_->n() == 64 ? ~State{0} : ((State{1} << spec_->n()) - 1);
  }

  State step(State s, std::size_t letter) const {
    State out = 0;
    for (std::size_t j = 0; j < spec_->n(); ++j) {
      if ((s >> j) & 1U) {
        if (std::size_t t = next_[j][letter]) out |= State{1} << (t - 1);
      }
    }
    return out;
  }

  /// Alphabet index of a degree, absent outside the support.
  std::optional<std::size_t> letter(const GroupElement& h) const {
    auto it = letter_of_.find(h);
    if (it == letter_of_.end()) return std::nullopt;
    return it->second;
  }

  State run(const std::vector<std::size_t>& letters) const {
    State s = initial();
    for (auto a : letters) s = step(s, a);
    return s;
  }

  /// Runs an arbitrary degree sequence; non-support degrees kill every row.
  State run(const DegreeSequence& hseq) const {
    State s = initial();
    for (const auto& h : hseq) {
      auto a = letter(h);
      if (!a) return 0;
      s = step(s, *a);
    }
    return s;
  }

 private:
  const GradingSpec* spec_;
  std::vector<GroupElement> alphabet_;
  std::vector<std::vector<std::size_t>> next_;  // 0 = leaves the tuple
  std::map<GroupElement, std::size_t> letter_of_;
};

/// Minimal means: no proper contiguous factor is an identity, and no
/// coarsening into fewer consecutive blocks (each block replaced by its
/// degree product) that stays inside the support is an identity.
inline bool is_minimal_identity(const PositionAutomaton& automaton, const DegreeSequence& hseq) {
  if (automaton.run(hseq) != 0) return false;
  const std::size_t len = hseq.size();
  for (std::size_t begin = 0; begin < len; ++begin) {
    for (std::size_t end = begin + 1; end <= len; ++end) {
      if (end - begin == len) continue;
      if (automaton.run(DegreeSequence(hseq.begin() + static_cast<std::ptrdiff_t>(begin),
                                       hseq.begin() + static_cast<std::ptrdiff_t>(end))) == 0) {
        return false;
      }
    }
  }
  if (len < 2) return true;
  if (len > 24) throw DomainError("coarsening check limited to sequences of length <= 24");
  const auto& group = automaton.spec().group();
  // Bit b of cuts set: a block boundary after position b.
  const std::uint32_t all_cuts = (std::uint32_t{1} << (len - 1)) - 1;
  for (std::uint32_t cuts = 0; cuts < all_cuts; ++cuts) {
    DegreeSequence coarse;
    GroupElement block = group.identity();
    for (std::size_t b = 0; b < len; ++b) {
      block = group.op_unchecked(block, hseq[b]);
      if (b + 1 == len || ((cuts >> b) & 1U)) {
        coarse.push_back(block);
        block = group.identity();
      }
    }
    bool inside = true;
    for (const auto& h : coarse) inside = inside && automaton.letter(h).has_value();
    if (inside && automaton.run(coarse) == 0) return false;
  }
  return true;
}

inline bool is_minimal_identity(const GradingSpec& spec, const DegreeSequence& hseq) {
  return is_minimal_identity(PositionAutomaton(spec), hseq);
}

/// All identity sequences over the support of length <= max_len whose proper
/// prefixes are not identities, in lexicographic depth-first order. With
/// minimal_only the list is filtered by is_minimal_identity.
inline std::vector<DegreeSequence> enumerate_monomial_identities(const GradingSpec& spec, std::size_t max_len,
                                                                 bool minimal_only) {
  if (max_len < 1) throw PreconditionError("max_len must be at least 1");
  const PositionAutomaton automaton(spec);
  const auto& alphabet = automaton.alphabet();
  std::vector<DegreeSequence> found;
  std::vector<std::size_t> path;

  struct Frame {
    PositionAutomaton::State state;
    std::size_t next_letter;
  };
  std::vector<Frame> stack{{automaton.initial(), 0}};
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_letter == alphabet.size() || path.size() == max_len) {
      stack.pop_back();
      if (!path.empty()) path.pop_back();
      continue;
    }
    const std::size_t a = top.next_letter++;
    const auto state = automaton.step(top.state, a);
    path.push_back(a);
    if (state == 0) {
      DegreeSequence seq;
      seq.reserve(path.size());
      for (auto i : path) seq.push_back(alphabet[i]);
      found.push_back(std::move(seq));
      path.pop_back();
      continue;
    }
    stack.push_back({state, 0});
  }

  if (!minimal_only) return found;
  std::vector<DegreeSequence> minimal;
  for (auto& seq : found) {
    if (is_minimal_identity(automaton, seq)) minimal.push_back(std::move(seq));
  }
  return minimal;
}

struct ShortestIdentity {
  std::size_t length = 0;
  DegreeSequence witness;
};

/// Breadth-first search from the full row set to the empty set. Absent means
/// no word over the support is an identity, of any length.
inline std::optional<ShortestIdentity> shortest_monomial_identity(const GradingSpec& spec) {
  const PositionAutomaton automaton(spec);
  using State = PositionAutomaton::State;
  struct Visit {
    State parent;
    std::size_t letter;
  };
  std::unordered_map<State, Visit> visited;
  std::deque<State> queue;
  const State start = automaton.initial();
  visited.emplace(start, Visit{start, 0});
  queue.push_back(start);
  while (!queue.empty()) {
    const State s = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < automaton.alphabet().size(); ++a) {
      const State t = automaton.step(s, a);
      if (visited.count(t)) continue;
      visited.emplace(t, Visit{s, a});
      if (t == 0) {
        std::vector<std::size_t> letters;
        for (State cur = t; cur != start; cur = visited.at(cur).parent) letters.push_back(visited.at(cur).letter);
        ShortestIdentity result;
        result.length = letters.size();
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) result.witness.push_back(automaton.alphabet()[*it]);
        return result;
      }
      queue.push_back(t);
    }
  }
  return std::nullopt;
}

struct TheoreticalBound {
  Integer support_size;
  Integer n0;            // 4 s^(2s+2), s = |support|
  Integer theorem_bound; // 4 n^(4(n^2+1))
};

inline Integer bound_n0(std::uint64_t s) {
  return 4 * boost::multiprecision::pow(Integer(s), static_cast<unsigned>(2 * s + 2));
}

inline Integer bound_theorem(std::uint64_t n) {
  return 4 * boost::multiprecision::pow(Integer(n), static_cast<unsigned>(4 * (n * n + 1)));
}

inline TheoreticalBound theoretical_bound(const GradingSpec& spec) {
  const std::uint64_t s = support(spec).size();
  return {Integer(s), bound_n0(s), bound_theorem(spec.n())};
}

}  // namespace gradid
