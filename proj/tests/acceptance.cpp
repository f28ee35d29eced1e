// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include "support.hpp"

namespace {

using namespace gradid;
using testing::cyclic_spec;
using testing::r;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(const std::string& why) { return {false, why}; }

const std::vector<Field>& fields() {
  static const std::vector<Field> f = {Field::rationals(), Field::prime(3)};
  return f;
}

GenericMatrix direct_value(const GradingSpec& spec, const GradedPolynomial& f) {
  GenericMatrix acc(spec.n(), f.field());
  for (const auto& [w, c] : f.terms()) acc += word_product_direct(spec, f.field(), w).scaled(c);
  return acc;
}

// 1. Every instance of the three basis identities with indices <= 3 vanishes.
Outcome basis_identities_vanish() {
  std::size_t instances = 0;
  for (const auto& [name, spec] : testing::grading_suite()) {
    const auto& group = spec.group();
    const auto eps = group.identity();
    for (const Field& field : fields()) {
      auto check = [&](const GradedPolynomial& f) {
        ++instances;
        return is_graded_identity(spec, f) && direct_value(spec, f).is_zero();
      };
      for (std::uint64_t i = 1; i <= 3; ++i) {
        for (std::uint64_t j = 1; j <= 3; ++j) {
          if (i == j) continue;
          // x1 x2 - x2 x1 with both variables neutral.
          const Word a({{eps, i}, {eps, j}});
          const Word b({{eps, j}, {eps, i}});
          if (!check(GradedPolynomial::from_word(field, a) - GradedPolynomial::from_word(field, b))) {
            return fail(name + ": neutral commutator does not vanish");
          }
          // x1 x3 x2 - x2 x3 x1 with h(x1) = h(x2) = h(x3)^-1 != e.
          for (const auto& g : group.elements()) {
            if (g == eps) continue;
            for (std::uint64_t k = 1; k <= 3; ++k) {
              const GradedVariable x1{g, i}, x2{g, j}, x3{group.inverse(g), k};
              const auto f = GradedPolynomial::from_word(field, Word({x1, x3, x2})) -
                             GradedPolynomial::from_word(field, Word({x2, x3, x1}));
              if (!check(f)) return fail(name + ": conjugate identity does not vanish");
            }
          }
        }
      }
      // x1 = 0 for degrees outside the support.
      for (const auto& g : group.elements()) {
        if (testing::brute_force_dimension(spec, g) != 0) continue;
        for (std::uint64_t i = 1; i <= 3; ++i) {
          if (!check(GradedPolynomial::from_word(field, Word({{g, i}})))) return fail(name + ": zero component variable");
        }
      }
    }
  }
  return {true, std::to_string(instances) + " instances"};
}

// 2. Closed-form product equals the direct product.
Outcome closed_equals_direct() {
  testing::Rng rng(1001);
  std::size_t words = 0;
  for (const auto& [name, spec] : testing::grading_suite()) {
    const auto elements = spec.group().elements();
    const Field field;
    for (int i = 0; i < 1000; ++i) {
      const Word m = testing::random_word(rng, elements, 1, 6, 3);
      ++words;
      if (!(word_product_closed(spec, field, m) == word_product_direct(spec, field, m))) {
        return fail(name + ": mismatch on " + format_word(spec.group(), m));
      }
    }
  }
  return {true, std::to_string(words) + " words"};
}

// 3. Full cyclic gradings have no monomial identities.
Outcome no_monomial_identities_for_full_cyclic() {
  for (std::int64_t n = 2; n <= 5; ++n) {
    const auto spec = testing::full_cyclic_spec(n);
    if (!enumerate_monomial_identities(spec, 8, false).empty()) return fail("Z" + std::to_string(n) + ": enumeration nonempty");
    if (shortest_monomial_identity(spec)) return fail("Z" + std::to_string(n) + ": shortest identity found");
  }
  return {true, "Z2..Z5, lengths <= 8"};
}

// 4. Z4 with tuple (0,1).
Outcome partial_support_identities() {
  const auto spec = cyclic_spec(4, {0, 1});
  const auto shortest = shortest_monomial_identity(spec);
  if (!shortest || shortest->length != 2) return fail("shortest length is not 2");
  if (!testing::brute_force_monomial_identity(spec, shortest->witness)) return fail("witness fails brute force");

  const auto minimal = enumerate_monomial_identities(spec, 2, true);
  const std::set<DegreeSequence> expected = {{r(1), r(1)}, {r(3), r(3)}};
  if (std::set<DegreeSequence>(minimal.begin(), minimal.end()) != expected || minimal.size() != 2) {
    return fail("minimal length-2 set differs from {(1,1),(3,3)}");
  }
  // Exhaustive matrix-unit substitution over all support sequences of length <= 2.
  std::set<DegreeSequence> brute;
  const auto degrees = support(spec);
  for (const auto& a : degrees) {
    if (testing::brute_force_monomial_identity(spec, {a})) return fail("a single support letter is an identity");
    for (const auto& b : degrees) {
      if (testing::brute_force_monomial_identity(spec, {a, b})) brute.insert({a, b});
    }
  }
  if (brute != expected) return fail("brute-force length-2 identities differ");
  return {true, "length 2, minimal set {(1,1),(3,3)}"};
}

// 5. Rewrite round trips.
Outcome rewrite_round_trips() {
  testing::Rng rng(1005);
  const auto suite = testing::grading_suite();
  const Field field;
  std::size_t pairs = 0;
  std::size_t attempts = 0;
  while (pairs < 200) {
    if (++attempts > 20000) return fail("could not generate enough pairs");
    const auto& [name, spec] = suite[pairs % suite.size()];
    const auto& group = spec.group();
    const Word m = testing::random_word(rng, support(spec), 2, 7, 4);
    const auto reference = word_product_direct(spec, field, m);
    if (reference.is_zero()) continue;
    const Word n = testing::random_rewrite(rng, group, m, testing::uniform(rng, 1, 8));
    if (!matching_entry(spec, m, n)) return fail(name + ": rewritten word lost its common entry");
    const auto cert = derive_equivalence(spec, m, n);
    if (!check_equivalence_certificate(spec, cert)) return fail(name + ": certificate rejected");
    if (!(cert.start == n) || !(cert.end == m)) return fail(name + ": certificate endpoints differ");
    Word current = cert.start;
    for (const auto& step : cert.steps) {
      current = apply_step(group, current, step);
      if (!(word_product_direct(spec, field, current) == reference)) return fail(name + ": intermediate evaluation changed");
    }
    if (!(current == m)) return fail(name + ": replay does not reach the target");
    ++pairs;
  }
  return {true, "200 pairs"};
}

// A random consequence of the basis identities and of monomial identities,
// all of one multidegree: sums of c * a (uv - vu) b, c * a (utv - vtu) b and
// c * w for words w that evaluate to zero.
GradedPolynomial random_consequence(testing::Rng& rng, const GradingSpec& spec, const Field& field) {
  const auto& group = spec.group();
  const auto elements = group.elements();
  while (true) {
    const Word base = testing::random_word(rng, elements, 2, 6, 3);
    GradedPolynomial f(field);
    for (int t = 0; t < 4; ++t) {
      const Word w = testing::random_rewrite(rng, group, base, testing::uniform(rng, 0, 4));
      const Rational c = testing::random_coefficient(rng, field);
      const auto steps = valid_steps(group, w);
      if (!steps.empty()) {
        f += GradedPolynomial::from_word(field, w, c) -
             GradedPolynomial::from_word(field, apply_step(group, w, steps[testing::uniform(rng, 0, steps.size() - 1)]), c);
      }
      if (word_product_direct(spec, field, w).is_zero()) f.add_term(w, c);
    }
    if (!f.is_zero()) return f;
  }
}

// 6. Certification of identities and witnesses for non-identities.
Outcome membership_procedure() {
  testing::Rng rng(1006);
  std::vector<testing::NamedSpec> specs = testing::grading_suite();
  specs.push_back({"Z6 (0,1,3)", cyclic_spec(6, {0, 1, 3})});
  std::size_t residuals = 0;
  for (int i = 0; i < 100; ++i) {
    const auto& [name, spec] = specs[static_cast<std::size_t>(i) % specs.size()];
    const Field& field = fields()[static_cast<std::size_t>(i) % 2];
    const auto f = random_consequence(rng, spec, field);
    if (!is_multihomogeneous(f)) return fail(name + ": generated polynomial is not multihomogeneous");
    if (!is_graded_identity(spec, f)) return fail(name + ": consequence is not an identity");
    const auto outcome = certify_membership(spec, f);
    const auto* cert = std::get_if<MembershipCertificate>(&outcome);
    if (!cert) return fail(name + ": identity was not certified");
    if (auto check = check_membership_certificate(spec, f, *cert); !check) return fail(name + ": " + check.reason);
    residuals += cert->residual.size();
  }
  for (int i = 0; i < 100; ++i) {
    const auto& [name, spec] = specs[static_cast<std::size_t>(i) % specs.size()];
    const Field& field = fields()[static_cast<std::size_t>(i) % 2];
    const auto& group = spec.group();
    GradedPolynomial f(field);
    while (true) {
      const Word base = testing::random_word(rng, support(spec), 1, 6, 3);
      f = GradedPolynomial(field);
      for (int t = 0; t < 3; ++t) {
        auto letters = base.letters();
        std::shuffle(letters.begin(), letters.end(), rng);
        f.add_term(Word(letters), testing::random_coefficient(rng, field));
      }
      if (!direct_value(spec, f).is_zero()) break;
    }
    const auto outcome = certify_membership(spec, f);
    const auto* witness = std::get_if<NonIdentityWitness>(&outcome);
    if (!witness) return fail(name + ": non-identity was certified: " + format_polynomial(group, f));
    const auto entry = direct_value(spec, f).at(witness->position.first, witness->position.second);
    if (entry.is_zero() || !(entry == witness->entry)) return fail(name + ": witness entry not confirmed");
  }
  return {true, "100 certified, 100 witnesses, " + std::to_string(residuals) + " residual terms"};
}

// 7. Distinct entries, diagonal neutral component and neutral commutativity agree.
Outcome report_booleans_agree() {
  std::vector<GradingSpec> specs = {cyclic_spec(2, {0, 1}),    cyclic_spec(2, {0, 0}),       cyclic_spec(2, {0, 0, 1}),
                                    cyclic_spec(3, {0, 1, 2}), cyclic_spec(3, {1, 1, 2}),    cyclic_spec(4, {0, 1}),
                                    cyclic_spec(4, {0, 2, 2}), cyclic_spec(4, {3, 1, 0, 2}), cyclic_spec(5, {4}),
                                    cyclic_spec(5, {1, 1}),    cyclic_spec(6, {0, 3, 0, 3}), cyclic_spec(6, {0, 1, 3})};
  const auto z = GroupDescriptor::integers();
  auto i = [](int v) { return GroupElement::integer(v); };
  specs.emplace_back(z, std::vector{i(0), i(1), i(2)});
  specs.emplace_back(z, std::vector{i(0), i(5), i(0)});
  const auto klein = testing::klein_group();
  specs.emplace_back(klein, klein.elements());
  specs.emplace_back(klein, std::vector{klein.identity(), klein.identity()});
  const auto s3 = testing::s3_group();
  specs.emplace_back(s3, s3.elements());
  specs.emplace_back(s3, std::vector{s3.parse_element("a"), s3.parse_element("r"), s3.parse_element("a")});
  specs.emplace_back(s3, std::vector{s3.parse_element("b"), s3.parse_element("s")});
  specs.emplace_back(GroupDescriptor::cyclic(7), std::vector{r(3), r(3), r(3), r(3)});

  std::size_t repeated = 0;
  for (const auto& spec : specs) {
    const auto report = diagonal_neutral_report(spec);
    std::set<GroupElement> entries(spec.tuple().begin(), spec.tuple().end());
    const bool distinct = entries.size() == spec.n();
    repeated += !distinct;
    if (report.distinct != distinct) return fail("distinctness misreported");
    if (report.neutral_diagonal != report.distinct || report.commutator_identity != report.distinct) {
      return fail("booleans disagree on " + spec.group().format_sequence(spec.tuple()));
    }
  }
  return {true, std::to_string(specs.size()) + " specs, " + std::to_string(repeated) + " with repeated entries"};
}

// 8. Exact closed-form bounds.
Outcome bounds() {
  if (bound_n0(2) != 256) return fail("n0(2) != 256");
  if (bound_n0(3) != 26244) return fail("n0(3) != 26244");
  if (bound_theorem(2) != 4194304) return fail("theorem bound(2) != 4194304");
  const auto b = theoretical_bound(cyclic_spec(2, {0, 1}));
  if (b.support_size != 2 || b.n0 != 256 || b.theorem_bound != 4194304) return fail("theoretical_bound on Z2");
  if (theoretical_bound(cyclic_spec(4, {0, 1})).n0 != 26244) return fail("theoretical_bound on Z4 (0,1)");
  return {true, "256, 26244, 4194304"};
}

// 9. Multihomogeneous decomposition.
Outcome decomposition() {
  testing::Rng rng(1009);
  const auto suite = testing::grading_suite();
  for (int i = 0; i < 100; ++i) {
    const auto& spec = suite[static_cast<std::size_t>(i) % suite.size()].spec;
    const Field& field = fields()[static_cast<std::size_t>(i) % 2];
    GradedPolynomial f(field);
    for (int t = 0; t < 8; ++t) f.add_term(testing::random_word(rng, spec.group().elements(), 1, 3, 2), testing::random_coefficient(rng, field));
    GradedPolynomial sum(field);
    for (const auto& part : multihomogeneous_components(f)) {
      if (!is_multihomogeneous(part)) return fail("component is not multihomogeneous");
      sum += part;
    }
    if (!(sum == f)) return fail("components do not sum to the input");
  }
  for (int i = 0; i < 50; ++i) {
    const auto& [name, spec] = suite[static_cast<std::size_t>(i) % suite.size()];
    const Field& field = fields()[static_cast<std::size_t>(i) % 2];
    GradedPolynomial f(field);
    for (int t = 0; t < 3; ++t) f += random_consequence(rng, spec, field);
    if (!is_graded_identity(spec, f)) return fail(name + ": sum of consequences is not an identity");
    for (const auto& part : multihomogeneous_components(f)) {
      if (!is_graded_identity(spec, part)) return fail(name + ": component is not an identity");
    }
  }
  return {true, "100 decompositions, 50 identities"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
      {"basis identities vanish", basis_identities_vanish},
      {"closed product equals direct product", closed_equals_direct},
      {"no monomial identities for Z_n with distinct tuple", no_monomial_identities_for_full_cyclic},
      {"monomial identities for Z4 (0,1)", partial_support_identities},
      {"rewrite certificates round-trip", rewrite_round_trips},
      {"membership certification", membership_procedure},
      {"neutral component report agrees", report_booleans_agree},
      {"exact bounds", bounds},
      {"multihomogeneous decomposition", decomposition},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !outcome.ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (outcome.ok ? "PASS" : "FAIL") << " " << (k + 1) << " " << criteria[k].first << ": " << outcome.detail << " ["
         << seconds << "s]";
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
