#include <random>

#include <gtest/gtest.h>

#include "region_relations.hpp"
#include "stslab/code_io.hpp"
#include "stslab/errors.hpp"
#include "stslab/lattice.hpp"
#include "stslab/sts_analysis.hpp"

using stslab::Coord;
using stslab::PauliOperator;
using stslab::Region;

namespace {

// Z on every horizontal edge of row y of the 2D toric layout: a string along axis 0.
PauliOperator toric_row_string(const stslab::LatticeCode& t, std::size_t y, char p = 'Z') {
  PauliOperator s(t.code.n_qubits());
  for (std::size_t x = 0; x < t.layout.n(0); ++x) s.set(stslab::toric_cell_qubit(t.layout, 1, {x, y}, {0}), p);
  return s;
}

Region row(const stslab::LatticeLayout& layout, std::size_t y) {
  Region r(layout);
  for (std::size_t x = 0; x < layout.n(0); ++x) r.add({x, y});
  return r;
}

bool supported_in(const PauliOperator& p, const Region& r) {
  const auto qs = r.qubits();
  std::vector<bool> in(p.n_qubits(), false);
  for (auto q : qs) in[q] = true;
  for (auto q : p.support())
    if (!in[q]) return false;
  return true;
}

}  // namespace

TEST(Regions, UnitRegionExamples) {
  const stslab::LatticeLayout layout({3, 4}, 2);
  EXPECT_EQ(region_Q(layout, {0, 0}), region_P(layout, {1, 1}));
  EXPECT_EQ(region_Q(layout, {0, 0}).size(), 1u);
  EXPECT_EQ(region_Q(layout, {1, 1}).size(), 12u);
  EXPECT_EQ(region_R(layout, 1).size(), 3u + 4u - 1u);
  EXPECT_EQ(region_R(layout, 0), region_Q(layout, {0, 0}));
  EXPECT_EQ(region_R(layout, 2).size(), 12u);
  EXPECT_EQ(region_P(layout, {2, 2}).qubits().size(), 8u);
  EXPECT_THROW(region_Q(layout, {2, 0}), stslab::DimensionError);
  EXPECT_THROW(region_R(layout, 3), stslab::DimensionError);
  EXPECT_THROW(region_P(layout, {4, 1}), stslab::DimensionError);
}

TEST(Regions, ComplementAndTranslation) {
  const stslab::LatticeLayout layout({3, 3}, 1);
  const Region r = region_R(layout, 1);
  EXPECT_EQ(r.complement().size(), 9u - r.size());
  EXPECT_EQ(r.complement().complement(), r);
  EXPECT_EQ(r.translated(0, 3), r);
  EXPECT_EQ(r.translated(1, 1).translated(1, -1), r);
}

TEST(TranslationEquivalence, Examples) {
  const auto t = stslab::build_toric(2, 1, 3);
  const auto s = toric_row_string(t, 0);
  ASSERT_TRUE(t.code.is_logical(s));
  EXPECT_TRUE(translation_equivalence_check(t.code, t.layout, s).pass);
  const auto i = stslab::build_ising(1, {5});
  EXPECT_TRUE(translation_equivalence_check(i.code, i.layout, PauliOperator::parse("ZIIII")).pass);
  EXPECT_THROW(translation_equivalence_check(i.code, i.layout, PauliOperator::parse("ZZIII")), stslab::ValidationError);
}

TEST(TranslationEquivalence, HoldsForCanonicalLogicalsOfStandardCodes) {
  for (const auto& lc : {stslab::build_toric(2, 1, 3), stslab::build_toric(3, 1, 2), stslab::build_ising(2, {3, 3}),
                         stslab::build_ising(1, {4})}) {
    for (const auto& [l, r] : canonical_pairs(lc.code).pairs) {
      EXPECT_TRUE(translation_equivalence_check(lc.code, lc.layout, l).pass);
      EXPECT_TRUE(translation_equivalence_check(lc.code, lc.layout, r).pass);
    }
  }
}

TEST(TranslationEquivalence, FailsOnTheFixtureCode) {
  // L = 3 is the smallest size with logical qubits; L = 2 and L = 4 have k = 0.
  const auto nm = stslab::load_any(stslab::read_json_file(std::string(STSLAB_FIXTURES) + "/newman_moore_L3.json"));
  ASSERT_GT(nm.code.k(), 0u);
  bool some_failure = false;
  for (std::size_t q = 0; q < nm.code.n_qubits(); ++q) {
    const auto z = PauliOperator::single(nm.code.n_qubits(), q, 'Z');
    if (!nm.code.is_logical(z)) continue;
    const auto res = translation_equivalence_check(nm.code, nm.layout, z);
    if (!res.pass) {
      some_failure = true;
      EXPECT_TRUE(res.failed_axis.has_value());
    }
  }
  EXPECT_TRUE(some_failure);
}

TEST(Duality, ReportsForStandardCodes) {
  const auto t2 = stslab::build_toric(2, 1, 3);
  const auto r2 = classify_dimensions(t2.code, t2.layout);
  EXPECT_EQ(r2.g_by_dimension, (std::vector<std::size_t>{0, 4, 0}));
  EXPECT_TRUE(verify_duality(r2));

  const auto t3 = stslab::build_toric(3, 1, 2);
  const auto r3 = classify_dimensions(t3.code, t3.layout);
  EXPECT_TRUE(verify_duality(r3));
  ASSERT_EQ(r3.pair_dimensions.size(), 3u);
  for (auto [a, b] : r3.pair_dimensions) EXPECT_EQ(std::min(a, b) * 10 + std::max(a, b), 12u);

  const auto i2 = stslab::build_ising(2, {3, 3});
  const auto ri = classify_dimensions(i2.code, i2.layout);
  EXPECT_EQ(ri.g_by_dimension, (std::vector<std::size_t>{1, 0, 1}));
  EXPECT_TRUE(verify_duality(ri));
}

TEST(Duality, GSumIsTwoK) {
  for (const auto& lc : {stslab::build_toric(3, 2, 2), stslab::build_ising(1, {5}), stslab::build_toric(2, 1, 2)}) {
    const auto r = classify_dimensions(lc.code, lc.layout);
    std::size_t sum = 0;
    for (auto g : r.g_by_dimension) sum += g;
    EXPECT_EQ(sum, 2 * lc.code.k());
  }
}

TEST(Duality, CorruptedReportFails) {
  const auto t2 = stslab::build_toric(2, 1, 2);
  auto r = classify_dimensions(t2.code, t2.layout);
  r.g_by_dimension.front() = 1;
  r.g_by_dimension.back() = 0;
  EXPECT_FALSE(verify_duality(r));
  auto p = classify_dimensions(t2.code, t2.layout);
  p.pair_dimensions.front().first = 0;
  EXPECT_FALSE(verify_duality(p));
}

TEST(Duality, DimensionIsStableUnderStabilizerMultiplication) {
  std::mt19937_64 rng(17);
  const auto t3 = stslab::build_toric(3, 1, 2);
  for (const auto& [l, r] : canonical_pairs(t3.code).pairs) {
    const auto dl = logical_dimension(t3.code, t3.layout, l);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::size_t> pick;
      for (std::size_t j = 0; j < t3.code.n_generators(); ++j)
        if (rng() % 2) pick.push_back(j);
      EXPECT_EQ(logical_dimension(t3.code, t3.layout, l * t3.code.product(pick)), dl);
    }
  }
}

TEST(Deformation, StraightStringMovesToNextRow) {
  const auto t = stslab::build_toric(2, 1, 3);
  const auto s = toric_row_string(t, 0);
  const auto moved = deform_logical(t.code, s, row(t.layout, 1));
  ASSERT_TRUE(moved.has_value());
  EXPECT_TRUE(supported_in(*moved, row(t.layout, 1)));
  EXPECT_TRUE(t.code.in_stabilizer_group(*moved * s));
}

TEST(Deformation, StringDoesNotFitInOneParticle) {
  const auto t = stslab::build_toric(2, 1, 3);
  EXPECT_FALSE(deform_logical(t.code, toric_row_string(t, 0), region_Q(t.layout, {0, 0})).has_value());
  EXPECT_FALSE(deform_logical(t.code, toric_row_string(t, 0), region_P(t.layout, {2, 2})).has_value());
}

TEST(Deformation, BentRegionHomotopicToStraightString) {
  const auto t = stslab::build_toric(2, 1, 3);
  // Path (0,0)→(1,0)→(1,1)→(2,1)→(0,1)→(0,0): one step up, wrapping once along axis 0.
  const auto s = toric_row_string(t, 0);
  const Region target(t.layout, std::vector<Coord>{{0, 0}, {1, 0}, {1, 1}, {2, 1}});
  const auto d = deform_logical(t.code, s, target);
  ASSERT_TRUE(d.has_value());
  EXPECT_TRUE(supported_in(*d, target));
  EXPECT_TRUE(t.code.in_stabilizer_group(*d * s));
  EXPECT_TRUE(t.code.is_logical(*d));
}

TEST(Deformation, OutputPropertiesOnRandomTargets) {
  std::mt19937_64 rng(4);
  const auto t = stslab::build_toric(2, 1, 3);
  const auto pairs = canonical_pairs(t.code).pairs;
  for (int trial = 0; trial < 40; ++trial) {
    Region target(t.layout);
    for (std::size_t p = 0; p < t.layout.n_particles(); ++p)
      if (rng() % 3) target.add(t.layout.particle_coord(p));
    const auto& l = trial % 2 ? pairs[0].first : pairs[1].second;
    if (auto d = deform_logical(t.code, l, target)) {
      EXPECT_TRUE(supported_in(*d, target));
      EXPECT_TRUE(t.code.in_stabilizer_group(*d * l));
    }
  }
}

TEST(TopologicalOrder, Examples) {
  const auto t = stslab::build_toric(2, 1, 3);
  EXPECT_TRUE(topological_order_check(t.code, t.layout).pass);
  const auto i2 = stslab::build_ising(2, {3, 3});
  EXPECT_FALSE(topological_order_check(i2.code, i2.layout).pass);
  const auto i1 = stslab::build_ising(1, {4});
  EXPECT_FALSE(topological_order_check(i1.code, i1.layout).pass);
}

TEST(RegionRelations, TwoDimensionalEquivalences) {
  for (const auto& lc : {stslab::build_toric(2, 1, 2), stslab::build_toric(2, 1, 3), stslab::build_ising(2, {2, 2}),
                         stslab::build_ising(2, {3, 3})}) {
    const auto& L = lc.layout;
    const auto g = [&](const Region& r) { return g_region(lc.code, r); };
    EXPECT_EQ(g(region_R(L, 0).complement()), g(region_R(L, 1)));
    EXPECT_EQ(g(region_R(L, 1).complement()), g(region_R(L, 0)));
    EXPECT_EQ(g(region_Q(L, {1, 0})), lc.code.k());
    EXPECT_EQ(g(region_Q(L, {1, 0}).complement()), lc.code.k());
    EXPECT_EQ(g(region_Q(L, {0, 1})), g(region_Q(L, {0, 1}).complement()));
  }
}

TEST(RegionRelations, ThreeDimensionalEquivalenceList) {
  for (const auto& lc : {stslab::build_toric(3, 1, 2), stslab::build_toric(3, 2, 2), stslab::build_ising(3, {2, 2, 2})}) {
    const auto rels = relations::three_dimensional(lc.layout);
    const auto basis = stslab::logical_basis(lc.code);
    ASSERT_EQ(rels.size(), 11u);
    for (const auto& rel : rels) {
      EXPECT_EQ(g_region(lc.code, rel.lhs), g_region(lc.code, rel.rhs)) << rel.name;
      EXPECT_TRUE(relations::same_supported_classes(lc.code, basis, rel.lhs, rel.rhs)) << rel.name;
    }
  }
}
