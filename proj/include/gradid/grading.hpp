#pragma once

// Elementary gradings of n x n matrices induced by a tuple (g_1, ..., g_n):
// the matrix unit E_ij is homogeneous of degree g_i^{-1} g_j.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gradid/error.hpp"
#include "gradid/groups.hpp"

namespace gradid {

class GradingSpec {
 public:
  GradingSpec(GroupDescriptor group, std::vector<GroupElement> tuple)
      : group_(std::move(group)), tuple_(std::move(tuple)) {
    if (tuple_.empty()) throw DomainError("a grading needs n >= 1");
    for (const auto& g : tuple_) group_.check(g);
    for (std::size_t i = 0; i < tuple_.size(); ++i) {
      // The least index wins when entries repeat.
      positions_.emplace(tuple_[i], i + 1);
    }
  }

  const GroupDescriptor& group() const noexcept { return group_; }
  std::size_t n() const noexcept { return tuple_.size(); }
  const std::vector<GroupElement>& tuple() const noexcept { return tuple_; }

  /// 1-based access to g_i.
  const GroupElement& entry(std::size_t i) const {
    if (i < 1 || i > tuple_.size()) throw DomainError("tuple index out of range");
    return tuple_[i - 1];
  }

  /// Least 1-based index j with g_j = g, if any.
  std::optional<std::size_t> index_of(const GroupElement& g) const {
    auto it = positions_.find(g);
    if (it == positions_.end()) return std::nullopt;
    return it->second;
  }

  bool has_distinct_entries() const noexcept { return positions_.size() == tuple_.size(); }

  void require_distinct_entries() const {
    if (!has_distinct_entries()) {
      throw PreconditionError("operation requires a grading tuple with pairwise distinct entries");
    }
  }

 private:
  GroupDescriptor group_;
  std::vector<GroupElement> tuple_;
  std::map<GroupElement, std::size_t> positions_;
};

inline GroupElement unit_degree(const GradingSpec& spec, std::size_t i, std::size_t j) {
  const auto& group = spec.group();
  return group.op_unchecked(group.inverse_unchecked(spec.entry(i)), spec.entry(j));
}

/// Degrees with a nonzero homogeneous component, ascending.
inline std::vector<GroupElement> support(const GradingSpec& spec) {
  std::set<GroupElement> degrees;
  for (std::size_t i = 1; i <= spec.n(); ++i) {
    for (std::size_t j = 1; j <= spec.n(); ++j) degrees.insert(unit_degree(spec, i, j));
  }
  return {degrees.begin(), degrees.end()};
}

inline std::size_t component_dimension(const GradingSpec& spec, const GroupElement& g) {
  spec.group().check(g);
  std::size_t count = 0;
  for (std::size_t i = 1; i <= spec.n(); ++i) {
    for (std::size_t j = 1; j <= spec.n(); ++j) count += unit_degree(spec, i, j) == g;
  }
  return count;
}

inline bool in_support(const GradingSpec& spec, const GroupElement& g) {
  const auto& group = spec.group();
  for (std::size_t i = 1; i <= spec.n(); ++i) {
    if (spec.index_of(group.op_unchecked(spec.entry(i), g))) return true;
  }
  return false;
}

/// One surviving chain of matrix units for a degree sequence (h_1..h_q):
/// indices[0] = start = k and g_{indices[i+1]} = g_{indices[i]} h_{i+1}.
struct IndexChain {
  std::size_t start = 0;
  std::vector<std::size_t> indices;  // length q + 1

  friend bool operator==(const IndexChain&, const IndexChain&) = default;
};

struct LSetResult {
  std::vector<IndexChain> chains;  // ascending by start

  bool empty() const noexcept { return chains.empty(); }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(chains.size());
    for (const auto& c : chains) out.push_back(c.start);
    return out;
  }

  const IndexChain* find(std::size_t start) const {
    for (const auto& c : chains) {
      if (c.start == start) return &c;
    }
    return nullptr;
  }
};

/// Starting rows k whose forward chain g_k h_1 ... h_i stays inside
/// {g_1, ..., g_n} for every prefix, together with the chain itself.
inline LSetResult l_set(const GradingSpec& spec, const std::vector<GroupElement>& hseq) {
  const auto& group = spec.group();
  for (const auto& h : hseq) group.check(h);
  LSetResult result;
  for (std::size_t k = 1; k <= spec.n(); ++k) {
    IndexChain chain{k, {k}};
    chain.indices.reserve(hseq.size() + 1);
    GroupElement position = spec.entry(k);
    bool alive = true;
    for (const auto& h : hseq) {
      position = group.op_unchecked(position, h);
      auto next = spec.index_of(position);
      if (!next) {
        alive = false;
        break;
      }
      chain.indices.push_back(*next);
    }
    if (alive) result.chains.push_back(std::move(chain));
  }
  return result;
}

struct DiagonalNeutralReport {
  bool distinct = false;
  bool neutral_diagonal = false;
  bool commutator_identity = false;

  friend bool operator==(const DiagonalNeutralReport&, const DiagonalNeutralReport&) = default;
};

/// Evaluates independently: pairwise distinct tuple entries; neutral component
/// equal to the diagonal; x1 x2 - x2 x1 vanishing on all neutral matrix units.
inline DiagonalNeutralReport diagonal_neutral_report(const GradingSpec& spec) {
  DiagonalNeutralReport report;
  report.distinct = spec.has_distinct_entries();

  const std::size_t n = spec.n();
  const GroupElement eps = spec.group().identity();
  std::vector<std::pair<std::size_t, std::size_t>> neutral_units;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (unit_degree(spec, i, j) == eps) neutral_units.emplace_back(i, j);
    }
  }
  // Diagonal units are always neutral, so equality is a count check.
  report.neutral_diagonal = neutral_units.size() == n;

  // E_ab E_cd = [b == c] E_ad. The commutator is bilinear, so matrix units
  // exhaust all substitutions.
  report.commutator_identity = true;
  for (const auto& [a, b] : neutral_units) {
    for (const auto& [c, d] : neutral_units) {
      const bool left = b == c;
      const bool right = d == a;
      const bool same = left == right && (!left || (a == c && d == b));
      if (!same) {
        report.commutator_identity = false;
        break;
      }
    }
    if (!report.commutator_identity) break;
  }
  return report;
}

struct NeutralBlocks {
  std::vector<std::size_t> sizes;  // in order of first occurrence in the tuple
  std::size_t dimension = 0;
};

inline NeutralBlocks neutral_block_structure(const GradingSpec& spec) {
  NeutralBlocks blocks;
  std::map<GroupElement, std::size_t> slot;
  for (const auto& g : spec.tuple()) {
    auto [it, inserted] = slot.emplace(g, blocks.sizes.size());
    if (inserted) blocks.sizes.push_back(0);
    ++blocks.sizes[it->second];
  }
  for (auto m : blocks.sizes) blocks.dimension += m * m;
  return blocks;
}

}  // namespace gradid
