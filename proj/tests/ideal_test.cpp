#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ffyb/ideal.hpp"
#include "test_oracles.hpp"

using namespace ffyb;
using ffyb::testing::nonzero;

namespace {

// c * x_i with an integer coefficient cast into F_q
MultiPoly lin(const FieldPtr& f, std::size_t nv, std::size_t i, const FieldElement& c) {
  return MultiPoly::variable(f, nv, i, c.value());
}

std::multiset<std::string> as_strings(const std::vector<MultiPoly>& gens) {
  std::multiset<std::string> out;
  for (const auto& g : gens) out.insert(g.to_string());
  return out;
}

}  // namespace

TEST(MultiPoly, ArithmeticAndOrder) {
  auto f = make_field(5, 1);
  MultiPoly p = MultiPoly::product(f, 2, 2, 2) - MultiPoly::variable(f, 2, 2, 1) + MultiPoly::product(f, 2, 1, 1);
  // graded lex with x1 > x2: x1^2 before x2^2 before x2
  EXPECT_EQ(p.to_string(), "x1^2+x2^2+4*x2");
  EXPECT_EQ(p.total_degree(), 2);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).total_degree(), -1);
  EXPECT_EQ(p.lifted(3).n_vars(), 3u);
  EXPECT_FALSE(p.lifted(3).involves(3));
  EXPECT_THROW(p.lifted(1), InvalidArgument);
  EXPECT_THROW(p + MultiPoly(f, 3), InvalidArgument);
  EXPECT_EQ(p.scaled(2).to_string(), "2*x1^2+2*x2^2+3*x2");
}

TEST(PolyEval, Examples) {
  auto f = make_field(7, 1);
  for (Elem a : nonzero(f)) {
    const Field& F = *f;
    const Elem a2 = F.mul(a, a);
    GeneratorSet b2 = build_B2(f, a);
    const MultiPoly& f22 = b2.generators[0];
    const MultiPoly& f11 = b2.generators[2];
    for (Elem c1 = 0; c1 < 7; ++c1) EXPECT_EQ(poly_eval(f22, {c1, a2}), 0u);
    EXPECT_EQ(poly_eval(f11, {F.mul(2, a), a2}), 0u);
    EXPECT_THROW(poly_eval(f11, {1}), InvalidArgument);
  }
  MultiPoly g = MultiPoly::product(f, 3, 1, 2, 3) + MultiPoly::variable(f, 3, 3, 5);
  EXPECT_EQ(poly_eval(g, {0, 0, 0}), 0u);
}

TEST(BuildB2, Examples) {
  auto f5 = make_field(5, 1);
  GeneratorSet b = build_B2(f5, 1);
  ASSERT_EQ(b.generators.size(), 3u);
  // {x2^2 - x2, x2 x1 - 2 x2, x1^2 - x1 - 2 x2}
  EXPECT_EQ(b.generators[0].to_string(), "x2^2+4*x2");
  EXPECT_EQ(b.generators[1].to_string(), "x1*x2+3*x2");
  EXPECT_EQ(b.generators[2].to_string(), "x1^2+4*x1+3*x2");

  auto f2 = make_field(2, 1);
  GeneratorSet b2 = build_B2(f2, 1);
  EXPECT_EQ(b2.generators[0].to_string(), "x2^2+x2");
  EXPECT_EQ(b2.generators[1].to_string(), "x1*x2");
  EXPECT_EQ(b2.generators[2].to_string(), "x1^2+x1");
  EXPECT_THROW(build_B2(f2, 0), InvalidArgument);
  EXPECT_THROW(build_B2(EquationInstance(f2, 3, 1)), InvalidArgument);
}

TEST(BuildBn, CardinalityAndDegree) {
  auto f = make_field(3, 1);
  for (std::size_t n = 2; n <= 12; ++n) {
    GeneratorSet g = build_Bn(f, 2, n);
    EXPECT_EQ(BigInt(g.generators.size()), binomial(n + 1, 2));
    for (const auto& p : g.generators) EXPECT_LE(p.total_degree(), 2);
  }
  EXPECT_EQ(build_Bn(f, 1, 4).generators.size(), 10u);
  EXPECT_EQ(build_Bn(f, 1, 5).generators.size(), 15u);
  EXPECT_THROW(build_Bn(f, 1, 1), InvalidArgument);
}

TEST(BuildBn, B3MatchesHandWrittenSet) {
  for (auto [p, s] : ffyb::testing::small_fields()) {
    auto f = make_field(p, s);
    for (Elem av : nonzero(f)) {
      const FieldElement a(f, av);
      auto k = [&](int c) { return int_to_field(f, c); };
      auto sq = [&](std::size_t i) { return MultiPoly::product(f, 3, i, i); };
      auto pr = [&](std::size_t i, std::size_t j) { return MultiPoly::product(f, 3, i, j); };
      const MultiPoly f11 = sq(1) - lin(f, 3, 1, a) - lin(f, 3, 2, k(2));
      const MultiPoly f21 = pr(2, 1) - lin(f, 3, 2, k(2) * a);
      const MultiPoly f22 = sq(2) - lin(f, 3, 2, a * a);
      std::vector<MultiPoly> expected{f11,
                                      f21 - lin(f, 3, 3, k(3)),
                                      f22 - lin(f, 3, 3, k(6) * a),
                                      sq(3) - lin(f, 3, 3, a.pow(3)),
                                      pr(3, 2) - lin(f, 3, 3, k(3) * a * a),
                                      pr(3, 1) - lin(f, 3, 3, k(3) * a)};
      GeneratorSet b3 = build_Bn(f, av, 3);
      EXPECT_EQ(as_strings(b3.generators), as_strings(expected)) << "q=" << f->order() << " a=" << av;
      // f11 is unchanged by the lift
      ASSERT_EQ(b3.corrections.size(), 1u);
      EXPECT_EQ(b3.corrections[0][2], 0u);
    }
  }
}

TEST(BuildBn, LiftingCorrectionsMatchEvaluation) {
  for (auto [p, s] : ffyb::testing::small_fields()) {
    auto f = make_field(p, s);
    const Field& F = *f;
    for (Elem a : nonzero(f)) {
      GeneratorSet prev = build_Bn(f, a, 2);
      for (std::size_t m = 3; m <= 6; ++m) {
        GeneratorSet cur = build_Bn(f, a, m);
        std::vector<Elem> w;
        for (std::size_t i = 1; i < m; ++i) w.push_back(F.mul(F.from_integer(binomial(m, i)), F.pow(a, i)));
        ASSERT_EQ(cur.corrections.back().size(), prev.generators.size());
        for (std::size_t g = 0; g < prev.generators.size(); ++g) {
          const Elem c = cur.corrections.back()[g];
          EXPECT_EQ(F.mul(c, F.pow(a, m)), poly_eval(prev.generators[g], w));
          EXPECT_EQ(cur.generators[g], prev.generators[g].lifted(m) - MultiPoly::variable(f, m, m, c));
        }
        prev = std::move(cur);
      }
    }
  }
}

TEST(BuildBn, ImagePointsAnnihilateEveryGenerator) {
  for (auto [p, s] : ffyb::testing::small_fields()) {
    auto f = make_field(p, s);
    for (Elem a : nonzero(f))
      for (std::size_t n = 2; n <= 10; ++n) {
        GeneratorSet g = build_Bn(f, a, n);
        for (const auto& v : image_points(EquationInstance(f, n, a)))
          for (const auto& gen : g.generators) EXPECT_EQ(poly_eval(gen, v.values()), 0u);
      }
  }
}

TEST(Variety, Examples) {
  for (auto [p, s] : std::vector<std::pair<std::uint32_t, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto f = make_field(p, s);
    for (Elem a : nonzero(f)) {
      const Field& F = *f;
      auto pts = variety(build_B2(f, a));
      std::set<std::vector<Elem>> got(pts.begin(), pts.end());
      std::set<std::vector<Elem>> want{{0, 0}, {a, 0}, {F.mul(F.from_integer(2), a), F.mul(a, a)}};
      EXPECT_EQ(got, want);
    }
  }
  auto f3 = make_field(3, 1);
  auto pts = variety(build_Bn(f3, 1, 3));
  // sorted by encoding, coordinate 1 least significant
  EXPECT_EQ(pts, (std::vector<std::vector<Elem>>{{0, 0, 0}, {1, 0, 0}, {2, 1, 0}, {0, 0, 1}}));
  EXPECT_THROW(variety(build_Bn(f3, 1, 3), 10), BudgetExceeded);
}

TEST(Variety, PartitionedScanMatchesSingleThread) {
  auto f = make_field(2, 2);
  auto g = build_Bn(f, 3, 5);
  EXPECT_EQ(variety(g, kDefaultVarietyBudget, 1), variety(g, kDefaultVarietyBudget, 5));
}

TEST(VerifyVarietyEquality, Examples) {
  for (auto [p, s] : std::vector<std::pair<std::uint32_t, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto f = make_field(p, s);
    for (Elem a : nonzero(f)) EXPECT_TRUE(verify_variety_equality(EquationInstance(f, 2, a), 2).equal);
  }
  auto f3 = make_field(3, 1);
  for (Elem a : {1u, 2u}) {
    auto r = verify_variety_equality(EquationInstance(f3, 5, a), 5);
    EXPECT_TRUE(r.equal);
    EXPECT_EQ(r.variety_size, 6u);
    EXPECT_EQ(r.image_size, 6u);
  }
  auto f4 = make_field(2, 2);
  for (Elem a : nonzero(f4)) EXPECT_TRUE(verify_variety_equality(EquationInstance(f4, 4, a), 4).equal);
}

TEST(VarietySearch, MatchesExhaustiveScan) {
  for (auto [p, s] : ffyb::testing::small_fields()) {
    auto f = make_field(p, s);
    for (Elem a : nonzero(f))
      for (std::size_t n = 2; n <= 5; ++n) {
        if (BigInt(f->order()) * f->order() * f->order() > 1000 && n > 3) continue;
        auto g = build_Bn(f, a, n);
        EXPECT_EQ(variety_search(g), variety(g)) << "q=" << f->order() << " n=" << n << " a=" << a;
      }
  }
}

TEST(VarietySearch, NonzeroConstantGeneratorHasEmptyVariety) {
  auto f = make_field(5, 1);
  GeneratorSet g = build_B2(f, 1);
  g.generators.push_back(MultiPoly::monomial(f, {0, 0}, 3));
  EXPECT_TRUE(variety_search(g).empty());
  EXPECT_TRUE(variety(g).empty());
}
