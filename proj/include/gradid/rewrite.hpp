#pragma once

// Rewrite certificates modulo the ideal generated by
//   (1) x1 x2 - x2 x1            with x1, x2 neutral,
//   (2) x1 x3 x2 - x2 x3 x1      with h(x1) = h(x2) = h(x3)^{-1} != e,
//   (3) x1                       when the component of h(x1) is zero.
//
// (1) and (2) act on words as block swaps; (3) only ever justifies that a
// term vanishes. Certificates store explicit factorizations so the checker can
// recompute every degree condition on its own.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gradid/error.hpp"
#include "gradid/freealg.hpp"
#include "gradid/generic.hpp"
#include "gradid/grading.hpp"

namespace gradid {

class RewriteError : public Error {
 public:
  using Error::Error;
};

enum class RewriteRule { neutral_swap, conjugate_swap };

inline const char* rule_name(RewriteRule rule) {
  return rule == RewriteRule::neutral_swap ? "neutral-swap" : "conjugate-swap";
}

/// neutral-swap:   cuts {b0,b1,b2},    w = p u v q -> p v u q,   u = [b0,b1), v = [b1,b2)
/// conjugate-swap: cuts {b0,b1,b2,b3}, w = p u t v q -> p v t u q, t = [b1,b2), v = [b2,b3)
struct RewriteStep {
  RewriteRule rule = RewriteRule::neutral_swap;
  std::vector<std::size_t> cuts;

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

/// The step undoing `step` on the word it produces.
inline RewriteStep inverse_step(const RewriteStep& step) {
  const auto& c = step.cuts;
  if (step.rule == RewriteRule::neutral_swap) {
    return {step.rule, {c[0], c[0] + (c[2] - c[1]), c[2]}};
  }
  const std::size_t v_len = c[3] - c[2];
  const std::size_t t_len = c[2] - c[1];
  return {step.rule, {c[0], c[0] + v_len, c[0] + v_len + t_len, c[3]}};
}

inline RewriteStep shifted(RewriteStep step, std::size_t offset) {
  for (auto& c : step.cuts) c += offset;
  return step;
}

/// Applies a swap after re-deriving its side conditions; throws RewriteError
/// naming the failed condition.
inline Word apply_step(const GroupDescriptor& group, const Word& w, const RewriteStep& step) {
  const auto& c = step.cuts;
  const std::size_t expected = step.rule == RewriteRule::neutral_swap ? 3 : 4;
  if (c.size() != expected) throw RewriteError(std::string(rule_name(step.rule)) + " needs " + std::to_string(expected) + " cuts");
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] <= c[i - 1]) throw RewriteError("cuts must be strictly increasing (blocks are nonempty)");
  }
  if (c.back() > w.size()) throw RewriteError("factorization exceeds the word length");

  const GroupElement eps = group.identity();
  const Word prefix = w.slice(0, c.front());
  const Word suffix = w.slice(c.back(), w.size());
  if (step.rule == RewriteRule::neutral_swap) {
    const Word u = w.slice(c[0], c[1]);
    const Word v = w.slice(c[1], c[2]);
    if (word_degree(group, u) != eps) throw RewriteError("neutral-swap: first block is not of neutral degree");
    if (word_degree(group, v) != eps) throw RewriteError("neutral-swap: second block is not of neutral degree");
    return prefix * v * u * suffix;
  }
  const Word u = w.slice(c[0], c[1]);
  const Word t = w.slice(c[1], c[2]);
  const Word v = w.slice(c[2], c[3]);
  const GroupElement du = word_degree(group, u);
  if (du == eps) throw RewriteError("conjugate-swap: outer blocks have neutral degree");
  if (word_degree(group, v) != du) throw RewriteError("conjugate-swap: outer blocks have different degrees");
  if (word_degree(group, t) != group.inverse(du)) {
    throw RewriteError("conjugate-swap: middle block degree is not the inverse of the outer degree");
  }
  return prefix * v * t * u * suffix;
}

/// Every swap whose side conditions hold on w.
inline std::vector<RewriteStep> valid_steps(const GroupDescriptor& group, const Word& w) {
  const std::size_t len = w.size();
  const GroupElement eps = group.identity();
  // degree[i][j] = alpha(w[i, j))
  std::vector<std::vector<GroupElement>> degree(len + 1, std::vector<GroupElement>(len + 1, eps));
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j <= len; ++j) degree[i][j] = group.op(degree[i][j - 1], w[j - 1].degree);
  }
  std::vector<RewriteStep> out;
  for (std::size_t b0 = 0; b0 < len; ++b0) {
    for (std::size_t b1 = b0 + 1; b1 <= len; ++b1) {
      for (std::size_t b2 = b1 + 1; b2 <= len; ++b2) {
        if (degree[b0][b1] == eps && degree[b1][b2] == eps) out.push_back({RewriteRule::neutral_swap, {b0, b1, b2}});
        const GroupElement& du = degree[b0][b1];
        if (du == eps || degree[b1][b2] != group.inverse(du)) continue;
        for (std::size_t b3 = b2 + 1; b3 <= len; ++b3) {
          if (degree[b2][b3] == du) out.push_back({RewriteRule::conjugate_swap, {b0, b1, b2, b3}});
        }
      }
    }
  }
  return out;
}

struct EquivalenceCertificate {
  Word start;
  std::vector<RewriteStep> steps;
  Word end;

  friend bool operator==(const EquivalenceCertificate&, const EquivalenceCertificate&) = default;
};

struct CheckResult {
  bool ok = true;
  std::optional<std::size_t> failed_step;
  std::string reason;

  static CheckResult failure(std::string reason, std::optional<std::size_t> step = std::nullopt) {
    return {false, step, std::move(reason)};
  }
  explicit operator bool() const noexcept { return ok; }
};

/// Replays the steps from scratch: every factorization and degree condition,
/// the final word, and unchanged generic evaluation after every step.
inline CheckResult check_equivalence_certificate(const GradingSpec& spec, const EquivalenceCertificate& cert) {
  const auto& group = spec.group();
  for (const Word* w : {&cert.start, &cert.end}) {
    for (const auto& x : w->letters()) {
      if (!group.contains(x.degree)) return CheckResult::failure("word letter outside the grading group");
    }
  }
  if (cert.start.empty()) return CheckResult::failure("certificate starts from the empty word");
  const Field field;
  const GenericMatrix reference = word_product_closed(spec, field, cert.start);
  Word current = cert.start;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    try {
      current = apply_step(group, current, cert.steps[i]);
    } catch (const RewriteError& e) {
      return CheckResult::failure(e.what(), i);
    }
    if (!(word_product_closed(spec, field, current) == reference)) {
      return CheckResult::failure("step changes the generic evaluation", i);
    }
  }
  if (!(current == cert.end)) return CheckResult::failure("replay does not end at the recorded end word");
  return {};
}

namespace detail {

// Emits u t v -> v t u on w, where alpha(u t) = alpha(t v) = e. A neutral
// outer degree falls back to two neutral swaps: (u)(t v) then (t)(v).
inline std::vector<RewriteStep> triple_rotation(const GroupDescriptor& group, const Word& w,
                                                std::size_t b0, std::size_t b1, std::size_t b2, std::size_t b3) {
  if (b1 == b2) return {{RewriteRule::neutral_swap, {b0, b1, b3}}};
  if (word_degree(group, w.slice(b0, b1)) != group.identity()) {
    return {{RewriteRule::conjugate_swap, {b0, b1, b2, b3}}};
  }
  const std::size_t t_len = b2 - b1;
  const std::size_t v_len = b3 - b2;
  return {{RewriteRule::neutral_swap, {b0, b1, b3}},
          {RewriteRule::neutral_swap, {b0, b0 + t_len, b0 + t_len + v_len}}};
}

inline Word apply_all(const GroupDescriptor& group, Word w, const std::vector<RewriteStep>& steps) {
  for (const auto& s : steps) w = apply_step(group, w, s);
  return w;
}

}  // namespace detail

/// Builds a certificate rewriting `n` into `m`, for words whose generic
/// evaluations share a nonzero entry at the same position.
///
/// Letter by letter: with a the position in n of m's first letter, either
/// some consecutive pair of m's letters straddles a inside n, and a swap on n
/// brings m's first letter to the front; or the letters before a come from a
/// suffix of m, and a swap on m brings n's first letter to the front. Then
/// the common first letter is stripped. Swaps made on m are undone in reverse
/// at the end of the certificate.
inline EquivalenceCertificate derive_equivalence(const GradingSpec& spec, const Word& m, const Word& n) {
  spec.require_distinct_entries();
  if (m.empty() || n.empty()) throw PreconditionError("cannot relate empty words");
  if (!matching_entry(spec, m, n)) {
    throw PreconditionError("the words share no nonzero entry at a common position");
  }
  const auto& group = spec.group();
  const std::size_t q = m.size();
  Word cur_m = m;
  Word cur_n = n;
  std::vector<RewriteStep> on_n;
  std::vector<RewriteStep> on_m;

  for (std::size_t pos = 0; pos < q; ++pos) {
    const Word ms = cur_m.slice(pos, q);
    const Word ns = cur_n.slice(pos, q);
    const auto entry = matching_entry(spec, ms, ns);
    if (!entry) throw Error("internal: stripped words lost their common entry");
    const auto perm = corollary_c2_permutation(spec, ms, ns, entry->position);
    const auto& sigma = perm.sigma;
    const std::size_t len = ms.size();
    std::vector<std::size_t> inv(len);
    for (std::size_t l = 0; l < len; ++l) inv[sigma[l]] = l;
    const std::size_t a = inv[0];
    if (a == 0) continue;

    std::optional<std::size_t> straddle;
    for (std::size_t r = 0; r + 1 < len; ++r) {
      if (inv[r] < a && a < inv[r + 1]) {
        straddle = r;
        break;
      }
    }

    std::vector<RewriteStep> local;
    if (straddle) {
      const std::size_t b1 = inv[*straddle];
      const std::size_t b2 = inv[*straddle + 1];
      local = b1 + 1 == a ? std::vector<RewriteStep>{{RewriteRule::neutral_swap, {0, a, b2}}}
                          : detail::triple_rotation(group, ns, 0, b1 + 1, a, b2);
      for (auto& s : local) s = shifted(s, pos);
      cur_n = detail::apply_all(group, cur_n, local);
      on_n.insert(on_n.end(), local.begin(), local.end());
    } else {
      std::size_t b = len;
      for (std::size_t l = 0; l < a; ++l) b = std::min(b, sigma[l]);
      local = detail::triple_rotation(group, ms, 0, b, sigma[0], len);
      for (auto& s : local) s = shifted(s, pos);
      cur_m = detail::apply_all(group, cur_m, local);
      on_m.insert(on_m.end(), local.begin(), local.end());
    }
    if (!(cur_m[pos] == cur_n[pos])) throw Error("internal: rotation did not align the first letters");
  }
  if (!(cur_m == cur_n)) throw Error("internal: derivation did not reach a common word");

  EquivalenceCertificate cert{n, std::move(on_n), m};
  for (auto it = on_m.rbegin(); it != on_m.rend(); ++it) cert.steps.push_back(inverse_step(*it));
  return cert;
}

enum class Justification { empty_lset, non_support };

inline const char* justification_name(Justification j) {
  return j == Justification::empty_lset ? "empty-lset" : "non-support";
}

/// A term of the fully reduced polynomial together with the reason it
/// vanishes: a letter whose homogeneous component is zero, or an empty set of
/// surviving row chains.
struct ResidualTerm {
  Word word;
  Rational coefficient;
  Justification justification = Justification::empty_lset;
  std::size_t letter = 0;  // 0-based, for non_support

  friend bool operator==(const ResidualTerm&, const ResidualTerm&) = default;
};

/// One cancellation: the term `drop` is rewritten into the term `keep` and
/// its coefficient moves onto `keep`. Indices refer to the term order of the
/// polynomial before this pairing.
struct Pairing {
  std::size_t keep_index = 0;
  std::size_t drop_index = 0;
  Word keep;
  Word drop;
  EquivalenceCertificate certificate;  // from drop to keep

  friend bool operator==(const Pairing&, const Pairing&) = default;
};

struct MembershipCertificate {
  GradedPolynomial input;
  std::vector<Pairing> pairings;
  std::vector<ResidualTerm> residual;

  friend bool operator==(const MembershipCertificate&, const MembershipCertificate&) = default;
};

struct NonIdentityWitness {
  Position position;
  CommPolynomial entry;
};

using MembershipOutcome = std::variant<MembershipCertificate, NonIdentityWitness>;

inline ResidualTerm justify_vanishing(const GradingSpec& spec, const Word& w, const Rational& c) {
  for (std::size_t l = 0; l < w.size(); ++l) {
    if (!in_support(spec, w[l].degree)) return {w, c, Justification::non_support, l};
  }
  if (!l_set(spec, degree_sequence(w)).empty()) throw Error("internal: residual term does not vanish");
  return {w, c, Justification::empty_lset, 0};
}

namespace detail {

inline std::size_t term_index(const GradedPolynomial& f, const Word& w) {
  auto it = f.terms().find(w);
  return static_cast<std::size_t>(std::distance(f.terms().begin(), it));
}

// f <- f - c*drop + c*keep, with c the coefficient of drop.
inline void move_coefficient(GradedPolynomial& f, const Word& keep, const Word& drop) {
  const Rational c = f.coefficient(drop);
  f.add_term(drop, f.field().neg(c));
  f.add_term(keep, c);
}

}  // namespace detail

/// Certifies that a multihomogeneous f is a graded identity, or returns the
/// first nonzero entry of its evaluation.
///
/// While some term evaluates to a nonzero matrix, the first such term is
/// paired with another term carrying the same monomial at the same position
/// (one must exist for the sum to vanish); that term is rewritten into the
/// first and their coefficients merge. Each pairing removes at least one term.
inline MembershipOutcome certify_membership(const GradingSpec& spec, const GradedPolynomial& f) {
  spec.require_distinct_entries();
  if (!is_multihomogeneous(f)) throw PreconditionError("certify_membership needs a multihomogeneous polynomial");
  const GenericMatrix value = evaluate(spec, f);
  if (!value.is_zero()) {
    const auto& [pos, entry] = *value.entries().begin();
    return NonIdentityWitness{pos, entry};
  }

  std::map<Word, GenericMatrix> cache;
  auto eval = [&](const Word& w) -> const GenericMatrix& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, word_product_closed(spec, f.field(), w)).first;
    return it->second;
  };

  MembershipCertificate cert{f, {}, {}};
  GradedPolynomial state = f;
  while (true) {
    const Word* first = nullptr;
    for (const auto& [w, c] : state.terms()) {
      if (!eval(w).is_zero()) {
        first = &w;
        break;
      }
    }
    if (!first) break;
    const Word keep = *first;

    std::optional<Word> partner;
    for (const auto& [pos, mono] : eval(keep).entries()) {
      for (const auto& [w, c] : state.terms()) {
        if (w == keep) continue;
        auto hit = eval(w).entries().find(pos);
        if (hit != eval(w).entries().end() && hit->second == mono) {
          partner = w;
          break;
        }
      }
      if (partner) break;
    }
    if (!partner) throw Error("internal: vanishing polynomial has an unmatched entry");

    Pairing pairing;
    pairing.keep_index = detail::term_index(state, keep);
    pairing.drop_index = detail::term_index(state, *partner);
    pairing.keep = keep;
    pairing.drop = *partner;
    pairing.certificate = derive_equivalence(spec, keep, *partner);
    detail::move_coefficient(state, keep, *partner);
    cert.pairings.push_back(std::move(pairing));
  }
  for (const auto& [w, c] : state.terms()) cert.residual.push_back(justify_vanishing(spec, w, c));
  return cert;
}

inline CheckResult check_membership_certificate(const GradingSpec& spec, const GradedPolynomial& f,
                                                const MembershipCertificate& cert) {
  if (!(cert.input == f)) return CheckResult::failure("certificate input differs from the polynomial");
  if (!is_multihomogeneous(f)) return CheckResult::failure("input is not multihomogeneous");
  GradedPolynomial state = f;
  for (std::size_t i = 0; i < cert.pairings.size(); ++i) {
    const Pairing& p = cert.pairings[i];
    const std::string where = "pairing " + std::to_string(i) + ": ";
    if (p.keep == p.drop) return CheckResult::failure(where + "a term cannot be paired with itself", i);
    if (state.coefficient(p.keep) == 0 || state.coefficient(p.drop) == 0) {
      return CheckResult::failure(where + "paired word is not a current term", i);
    }
    if (detail::term_index(state, p.keep) != p.keep_index || detail::term_index(state, p.drop) != p.drop_index) {
      return CheckResult::failure(where + "term indices do not match the current polynomial", i);
    }
    if (!(p.certificate.start == p.drop) || !(p.certificate.end == p.keep)) {
      return CheckResult::failure(where + "equivalence certificate does not connect the paired terms", i);
    }
    if (auto check = check_equivalence_certificate(spec, p.certificate); !check) {
      return CheckResult::failure(where + check.reason, i);
    }
    const std::size_t before = state.size();
    detail::move_coefficient(state, p.keep, p.drop);
    if (state.size() >= before) return CheckResult::failure(where + "pairing does not reduce the term count", i);
  }

  GradedPolynomial recorded(f.field());
  for (const auto& r : cert.residual) recorded.add_term(r.word, r.coefficient);
  if (!(recorded == state) || recorded.size() != cert.residual.size()) {
    return CheckResult::failure("replayed pairings do not reach the recorded residual");
  }
  for (const auto& r : cert.residual) {
    if (r.justification == Justification::non_support) {
      if (r.letter >= r.word.size() || in_support(spec, r.word[r.letter].degree)) {
        return CheckResult::failure("residual term " + format_word(spec.group(), r.word) +
                                    " cites a letter whose component is nonzero");
      }
    } else if (!l_set(spec, degree_sequence(r.word)).empty()) {
      return CheckResult::failure("residual term " + format_word(spec.group(), r.word) + " has surviving row chains");
    }
  }
  return {};
}

/// Certificates for every multihomogeneous component of a polynomial.
struct MembershipSetCertificate {
  GradedPolynomial input;
  std::vector<MembershipCertificate> components;

  friend bool operator==(const MembershipSetCertificate&, const MembershipSetCertificate&) = default;
};

inline CheckResult check_membership_set(const GradingSpec& spec, const MembershipSetCertificate& set) {
  const auto parts = multihomogeneous_components(set.input);
  if (parts.size() != set.components.size()) {
    return CheckResult::failure("certificate count differs from the number of multihomogeneous components");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (auto check = check_membership_certificate(spec, parts[i], set.components[i]); !check) {
      check.reason = "component " + std::to_string(i) + ": " + check.reason;
      return check;
    }
  }
  return {};
}

}  // namespace gradid
