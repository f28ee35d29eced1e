#pragma once

// Shared fixtures for the test suites: the standard grading suite, random
// generators and reference computations that do not go through L-sets.

#include <array>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gradid/gradid.hpp"

namespace gradid::testing {

struct NamedSpec {
  std::string name;
  GradingSpec spec;
};

inline GroupElement r(std::int64_t v) { return GroupElement::residue(v); }

inline GradingSpec cyclic_spec(std::int64_t order, const std::vector<std::int64_t>& tuple) {
  std::vector<GroupElement> entries;
  for (auto v : tuple) entries.push_back(r(v));
  return GradingSpec(GroupDescriptor::cyclic(order), entries);
}

/// Z_n graded by (0, 1, ..., n-1).
inline GradingSpec full_cyclic_spec(std::int64_t n) {
  std::vector<std::int64_t> tuple;
  for (std::int64_t i = 0; i < n; ++i) tuple.push_back(i);
  return cyclic_spec(n, tuple);
}

/// S_3 as permutations of {0,1,2}; table[a][b] = a after b.
inline GroupDescriptor s3_group() {
  using Perm = std::array<int, 3>;
  const std::vector<Perm> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> names = {"e", "a", "b", "c", "r", "s"};
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t x = 0; x < 6; ++x) {
    for (std::size_t y = 0; y < 6; ++y) {
      Perm composed{};
      for (int i = 0; i < 3; ++i) composed[static_cast<std::size_t>(i)] = perms[x][static_cast<std::size_t>(perms[y][static_cast<std::size_t>(i)])];
      for (std::size_t z = 0; z < 6; ++z) {
        if (perms[z] == composed) table[x][y] = z;
      }
    }
  }
  return GroupDescriptor::cayley(names, table);
}

inline GroupDescriptor klein_group() {
  return GroupDescriptor::product({GroupDescriptor::cyclic(2), GroupDescriptor::cyclic(2)});
}

/// The grading suite used across property tests and acceptance.
inline std::vector<NamedSpec> grading_suite() {
  std::vector<NamedSpec> out;
  for (std::int64_t n = 2; n <= 5; ++n) out.push_back({"Z" + std::to_string(n) + " full", full_cyclic_spec(n)});
  out.push_back({"Z4 (0,1)", cyclic_spec(4, {0, 1})});
  {
    const GroupDescriptor k = klein_group();
    out.push_back({"Z2xZ2", GradingSpec(k, k.elements())});
  }
  {
    const GroupDescriptor s3 = s3_group();
    out.push_back({"S3", GradingSpec(s3, s3.elements())});
  }
  return out;
}

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Word random_word(Rng& rng, const std::vector<GroupElement>& degrees, std::size_t min_len, std::size_t max_len,
                        std::uint64_t max_index) {
  const std::size_t len = uniform(rng, min_len, max_len);
  std::vector<GradedVariable> letters;
  for (std::size_t l = 0; l < len; ++l) {
    letters.push_back({degrees[uniform(rng, 0, degrees.size() - 1)], uniform(rng, 1, max_index)});
  }
  return Word(std::move(letters));
}

inline Rational random_coefficient(Rng& rng, const Field& field) {
  std::int64_t v = 0;
  while (v == 0) v = static_cast<std::int64_t>(uniform(rng, 0, 14)) - 7;
  return field.normalize(Rational(v));
}

/// Identity decision by brute force over matrix units: the monomial with this
/// degree sequence vanishes iff no chain E_{i1 j1} E_{i2 j2} ... with
/// E_{il jl} of degree h_l and j_l = i_{l+1} exists.
inline bool brute_force_monomial_identity(const GradingSpec& spec, const std::vector<GroupElement>& hseq) {
  const std::size_t n = spec.n();
  std::function<bool(std::size_t, std::size_t)> extend = [&](std::size_t l, std::size_t row) {
    if (l == hseq.size()) return true;
    for (std::size_t j = 1; j <= n; ++j) {
      if (unit_degree(spec, row, j) == hseq[l] && extend(l + 1, j)) return true;
    }
    return false;
  };
  for (std::size_t i = 1; i <= n; ++i) {
    if (extend(0, i)) return false;
  }
  return true;
}

/// Pure group enumeration of the homogeneous components, for support checks.
inline std::size_t brute_force_dimension(const GradingSpec& spec, const GroupElement& g) {
  const auto& group = spec.group();
  std::size_t count = 0;
  for (const auto& a : spec.tuple()) {
    for (const auto& b : spec.tuple()) count += group.op(group.inverse(a), b) == g;
  }
  return count;
}

/// A word reached from w by `steps` random valid swaps.
inline Word random_rewrite(Rng& rng, const GroupDescriptor& group, Word w, std::size_t steps) {
  for (std::size_t i = 0; i < steps; ++i) {
    const auto options = valid_steps(group, w);
    if (options.empty()) break;
    w = apply_step(group, w, options[uniform(rng, 0, options.size() - 1)]);
  }
  return w;
}

}  // namespace gradid::testing
