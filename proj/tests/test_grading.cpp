#include <gtest/gtest.h>

#include "support.hpp"

namespace gradid {
namespace {

using testing::cyclic_spec;
using testing::r;

TEST(Grading, UnitDegree) {
  const auto spec = cyclic_spec(4, {0, 1});
  EXPECT_EQ(unit_degree(spec, 1, 2), r(1));
  EXPECT_EQ(unit_degree(spec, 2, 1), r(3));
  EXPECT_EQ(unit_degree(spec, 1, 1), r(0));
  EXPECT_EQ(unit_degree(spec, 2, 2), r(0));
  EXPECT_THROW(unit_degree(spec, 3, 1), DomainError);
  EXPECT_THROW(unit_degree(spec, 0, 1), DomainError);
}

TEST(Grading, SupportMatchesPairEnumeration) {
  EXPECT_EQ(support(cyclic_spec(4, {0, 1})), (std::vector{r(0), r(1), r(3)}));
  EXPECT_EQ(support(cyclic_spec(2, {0, 1})), (std::vector{r(0), r(1)}));
  EXPECT_EQ(support(cyclic_spec(5, {3})), (std::vector{r(0)}));

  for (const auto& [name, spec] : testing::grading_suite()) {
    const auto degrees = support(spec);
    for (const auto& g : spec.group().elements()) {
      const bool listed = std::find(degrees.begin(), degrees.end(), g) != degrees.end();
      EXPECT_EQ(listed, testing::brute_force_dimension(spec, g) > 0) << name;
      EXPECT_EQ(listed, component_dimension(spec, g) > 0) << name;
      EXPECT_EQ(listed, in_support(spec, g)) << name;
    }
  }
}

TEST(Grading, ComponentDimension) {
  const auto spec = cyclic_spec(4, {0, 1});
  EXPECT_EQ(component_dimension(spec, r(0)), 2u);
  EXPECT_EQ(component_dimension(spec, r(1)), 1u);
  EXPECT_EQ(component_dimension(spec, r(2)), 0u);
  EXPECT_EQ(component_dimension(spec, r(3)), 1u);
  EXPECT_EQ(component_dimension(cyclic_spec(2, {0, 0}), r(0)), 4u);

  for (const auto& [name, spec] : testing::grading_suite()) {
    std::size_t total = 0;
    for (const auto& g : support(spec)) total += component_dimension(spec, g);
    EXPECT_EQ(total, spec.n() * spec.n()) << name;
  }
}

TEST(Grading, LSetExamples) {
  const auto z4 = cyclic_spec(4, {0, 1});
  const auto single = l_set(z4, {r(1)});
  EXPECT_EQ(single.members(), std::vector<std::size_t>{1});
  EXPECT_EQ(single.chains[0].indices, (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(l_set(z4, {r(1), r(1)}).empty());

  const auto z2 = cyclic_spec(2, {0, 1});
  const auto full = l_set(z2, {r(1), r(1), r(1)});
  EXPECT_EQ(full.members(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(full.chains[0].indices, (std::vector<std::size_t>{1, 2, 1, 2}));
  EXPECT_EQ(full.chains[1].indices, (std::vector<std::size_t>{2, 1, 2, 1}));
}

TEST(Grading, LSetProperties) {
  testing::Rng rng(7);
  for (const auto& [name, spec] : testing::grading_suite()) {
    const auto& group = spec.group();
    const auto elements = group.elements();
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<GroupElement> hseq;
      const std::size_t len = testing::uniform(rng, 1, 6);
      for (std::size_t l = 0; l < len; ++l) hseq.push_back(elements[testing::uniform(rng, 0, elements.size() - 1)]);
      const auto full = l_set(spec, hseq);
      // Recurrence of every chain.
      for (const auto& chain : full.chains) {
        ASSERT_EQ(chain.indices.size(), len + 1);
        EXPECT_EQ(chain.indices[0], chain.start);
        for (std::size_t i = 0; i < len; ++i) {
          EXPECT_EQ(spec.entry(chain.indices[i + 1]), group.op(spec.entry(chain.indices[i]), hseq[i])) << name;
        }
      }
      // Prefix monotonicity.
      for (std::size_t cut = 1; cut < len; ++cut) {
        const auto prefix = l_set(spec, {hseq.begin(), hseq.begin() + static_cast<std::ptrdiff_t>(cut)});
        for (auto k : full.members()) EXPECT_NE(prefix.find(k), nullptr) << name;
      }
      // Emptiness agrees with matrix-unit chains.
      EXPECT_EQ(full.empty(), testing::brute_force_monomial_identity(spec, hseq)) << name;
    }
  }
}

TEST(Grading, DiagonalNeutralReportExamples) {
  EXPECT_EQ(diagonal_neutral_report(cyclic_spec(2, {0, 1})), (DiagonalNeutralReport{true, true, true}));
  EXPECT_EQ(diagonal_neutral_report(cyclic_spec(2, {0, 0})), (DiagonalNeutralReport{false, false, false}));
  EXPECT_EQ(diagonal_neutral_report(cyclic_spec(3, {2})), (DiagonalNeutralReport{true, true, true}));
}

TEST(Grading, DiagonalNeutralReportIsAllOrNothing) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t order = static_cast<std::int64_t>(testing::uniform(rng, 1, 6));
    const std::size_t n = testing::uniform(rng, 1, 5);
    std::vector<std::int64_t> tuple;
    for (std::size_t i = 0; i < n; ++i) tuple.push_back(static_cast<std::int64_t>(testing::uniform(rng, 0, static_cast<std::size_t>(order - 1))));
    const auto report = diagonal_neutral_report(cyclic_spec(order, tuple));
    EXPECT_EQ(report.distinct, report.neutral_diagonal);
    EXPECT_EQ(report.distinct, report.commutator_identity);
  }
}

TEST(Grading, NeutralBlocks) {
  const auto blocks = neutral_block_structure(cyclic_spec(2, {0, 0, 1}));
  EXPECT_EQ(blocks.sizes, (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(blocks.dimension, 5u);

  const auto distinct = neutral_block_structure(testing::full_cyclic_spec(4));
  EXPECT_EQ(distinct.sizes, (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(distinct.dimension, 4u);

  const auto constant = neutral_block_structure(cyclic_spec(3, {1, 1, 1}));
  EXPECT_EQ(constant.sizes, std::vector<std::size_t>{3});
  EXPECT_EQ(constant.dimension, 9u);

  for (const auto& spec : {cyclic_spec(2, {0, 0, 1}), cyclic_spec(3, {1, 1, 1}), cyclic_spec(4, {0, 1, 0, 3, 1})}) {
    EXPECT_EQ(neutral_block_structure(spec).dimension, component_dimension(spec, spec.group().identity()));
  }
}

TEST(Grading, RepeatedEntriesUseLeastIndex) {
  const auto spec = cyclic_spec(2, {0, 0, 1});
  EXPECT_FALSE(spec.has_distinct_entries());
  EXPECT_EQ(spec.index_of(r(0)), std::optional<std::size_t>(1));
  const auto lset = l_set(spec, {r(1), r(1)});
  EXPECT_EQ(lset.members(), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(lset.chains[1].indices, (std::vector<std::size_t>{2, 3, 1}));
  EXPECT_THROW(spec.require_distinct_entries(), PreconditionError);
}

TEST(Grading, IntegerGrading) {
  const GradingSpec spec(GroupDescriptor::integers(),
                         {GroupElement::integer(0), GroupElement::integer(1), GroupElement::integer(2)});
  EXPECT_EQ(support(spec).size(), 5u);
  EXPECT_EQ(component_dimension(spec, GroupElement::integer(2)), 1u);
  EXPECT_EQ(component_dimension(spec, GroupElement::integer(7)), 0u);
}

}  // namespace
}  // namespace gradid
