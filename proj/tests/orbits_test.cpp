#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "ffyb/oracles.hpp"
#include "ffyb/polyfq.hpp"
#include "test_oracles.hpp"

using namespace ffyb;
using ffyb::testing::nonzero;
using ffyb::testing::random_invertible;
using Block = OrbitLabel::Block;

TEST(OrbitLabel, EvenMiddleOrbitNormalizes) {
  EXPECT_EQ(normalize(OrbitLabel::mixed(2, Block::A), 4), OrbitLabel::mixed(2, Block::Zero));
  EXPECT_EQ(normalize(OrbitLabel::mixed(1, Block::A), 4), OrbitLabel::mixed(1, Block::A));
  EXPECT_THROW(normalize(OrbitLabel::mixed(0, Block::A), 4), InvalidArgument);
  EXPECT_THROW(normalize(OrbitLabel::mixed(3, Block::A), 5), InvalidArgument);
  EXPECT_THROW(normalize(OrbitLabel::mixed(1, Block::A), 1), InvalidArgument);
}

TEST(Representative, Examples) {
  auto f = make_field(5, 1);
  for (Elem a : nonzero(f)) {
    EquationInstance inst3(f, 3, a);
    EXPECT_EQ(representative(OrbitLabel::mixed(1, Block::Zero), inst3), direct_sum(Matrix::zero(f, 1), q_block(f, a)));
    EquationInstance inst4(f, 4, a);
    Matrix q2 = direct_sum(q_block(f, a), q_block(f, a));
    EXPECT_EQ(representative(OrbitLabel::mixed(2, Block::Zero), inst4), q2);
    EXPECT_EQ(representative(OrbitLabel::mixed(2, Block::A), inst4), q2);
  }
  EXPECT_THROW(representative(OrbitLabel::mixed(3, Block::Zero), EquationInstance(f, 4, 1)), InvalidArgument);
}

TEST(Representative, AllAreSolutions) {
  for (auto [p, s] : std::vector<std::pair<std::uint32_t, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}})
    for (std::size_t n = 1; n <= 6; ++n) {
      auto f = make_field(p, s);
      for (Elem a : nonzero(f)) {
        EquationInstance inst(f, n, a);
        for (const auto& l : orbit_labels(n)) {
          Matrix rep = representative(l, inst);
          EXPECT_TRUE(is_solution(inst, rep));
          EXPECT_EQ(rank(rep), orbit_rank(l, n));
        }
      }
    }
}

TEST(ListOrbits, Census) {
  auto f = make_field(3, 1);
  auto o2 = list_orbits(EquationInstance(f, 2, 1));
  ASSERT_EQ(o2.size(), 3u);
  EXPECT_EQ(o2[0].label, OrbitLabel::zero());
  EXPECT_EQ(o2[1].label, OrbitLabel::mixed(1, Block::Zero));
  EXPECT_EQ(o2[2].label, OrbitLabel::scalar_a());
  EXPECT_EQ(o2[1].orbit_size, 12);  // q^2 + q

  auto o3 = list_orbits(EquationInstance(f, 3, 2));
  ASSERT_EQ(o3.size(), 4u);
  EXPECT_EQ(o3[1].label, OrbitLabel::mixed(1, Block::Zero));
  EXPECT_EQ(o3[2].label, OrbitLabel::mixed(1, Block::A));

  auto o4 = list_orbits(EquationInstance(f, 4, 1));
  ASSERT_EQ(o4.size(), 5u);
  EXPECT_EQ(o4[2].label, OrbitLabel::mixed(2, Block::Zero));

  auto o1 = list_orbits(EquationInstance(f, 1, 1));
  ASSERT_EQ(o1.size(), 2u);
  EXPECT_EQ(o1[0].orbit_size, 1);
  EXPECT_EQ(o1[1].orbit_size, 1);

  for (std::size_t n = 1; n <= 9; ++n) {
    auto recs = list_orbits(EquationInstance(f, n, 1));
    ASSERT_EQ(recs.size(), n + 1);
    std::set<OrbitLabel> labels;
    for (std::size_t r = 0; r <= n; ++r) {
      EXPECT_EQ(recs[r].rank, r);
      labels.insert(recs[r].label);
      EXPECT_EQ(recs[r].orbit_size * recs[r].stabilizer_order, gl_order(n, 3));
    }
    EXPECT_EQ(labels.size(), n + 1);
  }
}

TEST(Classify, Examples) {
  auto f = make_field(3, 1);
  for (Elem a : nonzero(f))
    for (std::size_t n = 2; n <= 5; ++n) {
      EquationInstance inst(f, n, a);
      Matrix x = direct_sum(q_block(f, a), Matrix::zero(f, n - 2));
      EXPECT_EQ(classify(inst, x), OrbitLabel::mixed(1, Block::Zero));
      EXPECT_EQ(classify(inst, Matrix::scalar(f, n, a)), OrbitLabel::scalar_a());
      EXPECT_EQ(classify(inst, Matrix::zero(f, n)), OrbitLabel::zero());
    }
  EXPECT_THROW(classify(EquationInstance(f, 2, 1), Matrix::identity(f, 2) + Matrix::identity(f, 2)), InvalidArgument);
}

TEST(Classify, ConjugatesOfX1aaOverF3) {
  std::mt19937_64 rng(31);
  auto f = make_field(3, 1);
  for (Elem a : nonzero(f)) {
    EquationInstance inst(f, 3, a);
    Matrix rep = representative(OrbitLabel::mixed(1, Block::A), inst);
    // oracle: the brute-force class containing the representative
    std::set<std::uint64_t> cls;
    for (const auto& c : brute_force_conjugacy_classes(inst))
      if (std::binary_search(c.members.begin(), c.members.end(), matrix_index(rep)))
        cls.insert(c.members.begin(), c.members.end());
    for (int t = 0; t < 100; ++t) {
      Matrix y = conjugate(random_invertible(f, 3, rng), rep);
      EXPECT_EQ(classify(inst, y), OrbitLabel::mixed(1, Block::A));
      EXPECT_TRUE(cls.count(matrix_index(y)));
    }
  }
}

TEST(Classify, AgreesWithSmithFormCrossCheck) {
  // classification by rank must match the elementary-divisor fingerprint
  auto f = make_field(2, 2);
  for (Elem a : nonzero(f)) {
    EquationInstance inst(f, 2, a);
    for (const auto& x : brute_force_solutions(inst).solutions) {
      const OrbitLabel l = classify(inst, x);
      EXPECT_EQ(elementary_divisors(x), elementary_divisors(representative(l, inst)));
    }
  }
}

TEST(Stabilizer, Examples) {
  for (auto [p, s] : ffyb::testing::small_fields()) {
    auto f = make_field(p, s);
    const BigInt q = f->order_big();
    EquationInstance inst(f, 2, 1);
    EXPECT_EQ(stabilizer_order(inst, OrbitLabel::mixed(1, Block::Zero)), (q - 1) * (q - 1));
    EXPECT_EQ(orbit_size(inst, OrbitLabel::mixed(1, Block::Zero)), q * q + q);
    EXPECT_EQ(stabilizer_order(inst, OrbitLabel::scalar_a()), gl_order(2, q));
    EXPECT_EQ(orbit_size(inst, OrbitLabel::zero()), 1);
  }
  auto f2 = make_field(2, 1);
  EXPECT_EQ(stabilizer_order(EquationInstance(f2, 3, 1), OrbitLabel::mixed(1, Block::Zero)), 6);
}

TEST(Stabilizer, OrbitSizesSumToClosedForm) {
  for (auto [p, s] : std::vector<std::pair<std::uint32_t, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}})
    for (std::size_t n = 1; n <= 8; ++n) {
      auto f = make_field(p, s);
      EquationInstance inst(f, n, 1);
      EXPECT_EQ(orbit_sum_count(inst).total, closed_form_count(inst).total);
    }
}

TEST(Oracle, ConjugacyClassesSmall) {
  auto f2 = make_field(2, 1);
  auto classes = brute_force_conjugacy_classes(EquationInstance(f2, 2, 1));
  std::multiset<std::size_t> sizes;
  for (const auto& c : classes) sizes.insert(c.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 1, 6}));
  EXPECT_EQ(brute_force_conjugacy_classes(EquationInstance(f2, 3, 1)).size(), 4u);
}

TEST(Oracle, ClassesMatchClassifyAndOrbitSizes) {
  for (auto [p, s, n] : std::vector<std::tuple<std::uint32_t, int, std::size_t>>{
           {2, 1, 2}, {3, 1, 2}, {2, 2, 2}, {2, 1, 3}, {3, 1, 3}}) {
    auto f = make_field(p, s);
    for (Elem a : nonzero(f)) {
      EquationInstance inst(f, n, a);
      auto classes = brute_force_conjugacy_classes(inst);
      ASSERT_EQ(classes.size(), n + 1);
      std::set<OrbitLabel> labels;
      for (const auto& c : classes) {
        labels.insert(c.label);
        EXPECT_EQ(BigInt(c.size()), orbit_size(inst, c.label));
        for (std::uint64_t idx : c.members) {
          Matrix x = Matrix::from_index(f, n, idx);
          EXPECT_EQ(classify(inst, x), c.label);
          // xi is constant on each class
          EXPECT_EQ(charpoly_xi(x), charpoly_xi(c.first));
        }
      }
      EXPECT_EQ(labels.size(), n + 1);
    }
  }
}

TEST(Oracle, CentralizerOrders) {
  auto f3 = make_field(3, 1);
  EquationInstance i23(f3, 2, 1);
  EXPECT_EQ(brute_force_centralizer_order(i23, q_block(f3, 1)), 4);
  EXPECT_EQ(brute_force_centralizer_order(i23, Matrix::identity(f3, 2)), 48);
  auto f2 = make_field(2, 1);
  EquationInstance i32(f2, 3, 1);
  EXPECT_EQ(brute_force_centralizer_order(i32, representative(OrbitLabel::mixed(1, Block::Zero), i32)), 6);
  EXPECT_EQ(brute_force_centralizer_order(i32, Matrix::identity(f2, 3)), 168);
}

TEST(Oracle, BudgetRefusal) {
  auto f = make_field(3, 1);
  ScanOptions tight{1000, 1, true};
  EXPECT_THROW(brute_force_conjugacy_classes(EquationInstance(f, 3, 1), tight), BudgetExceeded);
  EXPECT_THROW(brute_force_centralizer_order(EquationInstance(f, 3, 1), Matrix::zero(f, 3), tight), BudgetExceeded);
}

TEST(ElementaryDivisors, OfEveryRepresentative) {
  for (auto [p, s] : std::vector<std::pair<std::uint32_t, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto f = make_field(p, s);
    for (Elem a : nonzero(f))
      for (std::size_t n = 2; n <= 6; ++n)
        for (std::size_t k = 1; k <= n / 2; ++k)
          for (Block b : {Block::Zero, Block::A}) {
            EquationInstance inst(f, n, a);
            // b = 0: (n-k) x L, k x (L-a); b = a: roles swapped
            const std::size_t lam_count = b == Block::Zero ? n - k : k;
            std::vector<PrimePower> expected;
            for (std::size_t i = 0; i < lam_count; ++i) expected.push_back({UniPoly::x(f), 1});
            for (std::size_t i = 0; i < n - lam_count; ++i) expected.push_back({UniPoly::linear(f, a), 1});
            std::sort(expected.begin(), expected.end());
            Matrix rep(f, 0, 0);
            rep = Matrix::scalar(f, n - 2 * k, b == Block::Zero ? 0 : a);
            for (std::size_t i = 0; i < k; ++i) rep = direct_sum(rep, q_block(f, a));
            EXPECT_EQ(elementary_divisors(rep).divisors, expected) << "n=" << n << " k=" << k;
          }
  }
}
