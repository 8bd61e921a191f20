#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ybe/congruence.hpp"
#include "ybe/families.hpp"

using namespace ybe;

namespace {

Solution two_point_non_solution() { return Solution({Perm{0, 1}, Perm{1, 0}}); }

// Index of a theorem_main / theorem23 point from its coordinates.
Point at(const Solution& s, std::vector<std::int64_t> coords) {
  auto it = std::find(s.labels.begin(), s.labels.end(), coords);
  return static_cast<Point>(it - s.labels.begin());
}

std::vector<Point> second_coordinate(const Solution& s) {
  std::vector<Point> f;
  for (const auto& l : s.labels) f.push_back(static_cast<Point>(l[1]));
  return f;
}

std::vector<Solution> small_suite() {
  std::vector<Solution> out;
  for (std::size_t n = 1; n <= 8; ++n) {
    out.push_back(trivial_solution(n));
    out.push_back(cyclic_solution(n));
  }
  out.push_back(remark31(2));
  out.push_back(theorem_main(2, 1));
  out.push_back(theorem23(2, 2));
  return out;
}

}  // namespace

TEST(SolutionTest, DeriveGammaExamples) {
  for (const auto& g : derive_gamma(trivial_solution(4))) EXPECT_TRUE(g.is_identity());
  for (const auto& g : derive_gamma(cyclic_solution(3))) EXPECT_EQ(g, (Perm{1, 2, 0}));
  EXPECT_EQ(derive_gamma(theorem_main(2, 1)).size(), 8u);
}

TEST(SolutionTest, DeriveGammaSignalsDegeneracy) {
  // sigma_0 = id, sigma_1 = (0 1): gamma_0(0) = gamma_0(1) = 0
  EXPECT_THROW(derive_gamma(two_point_non_solution()), Error);
  EXPECT_FALSE(check_nondegenerate(two_point_non_solution()));
}

TEST(SolutionTest, YbeCriterionExamples) {
  EXPECT_TRUE(check_ybe(cyclic_solution(5)));
  EXPECT_FALSE(check_ybe(two_point_non_solution()));
}

// The sigma criterion agrees with the braid relation evaluated on X^3.
TEST(SolutionTest, YbeCriterionAgreesWithBraidRelation) {
  for (const auto& s : small_suite()) EXPECT_EQ(check_ybe(s), oracle::braid_relation_holds(oracle::rows_of(s)));
  EXPECT_FALSE(oracle::braid_relation_holds(oracle::rows_of(two_point_non_solution())));
  // one corrupted row
  auto rows = theorem_main(2, 1).sigma_table();
  rows[3] = Perm::identity(8);
  Solution bad(rows);
  EXPECT_FALSE(check_ybe(bad));
  EXPECT_FALSE(oracle::braid_relation_holds(oracle::rows_of(bad)));
}

TEST(SolutionTest, InvolutiveExamples) {
  EXPECT_TRUE(check_involutive(trivial_solution(3)));
  EXPECT_TRUE(check_involutive(theorem42(7, 3, 1)));
  EXPECT_TRUE(check_involutive(two_point_non_solution()));  // forced by the form of r
}

TEST(SolutionTest, EvalRExamples) {
  auto t = trivial_solution(3);
  EXPECT_EQ(eval_r(t, 1, 2), (std::pair<Point, Point>{2, 1}));
  EXPECT_EQ(eval_r(cyclic_solution(4), 0, 0), (std::pair<Point, Point>{3, 1}));
  auto s = theorem_main(2, 1);
  // sigma_(0,1,0)(0,0,0) = (0,0,0); the second entry by the inverse formula
  // sigma^{-1}_(0,0,0)(0,1,0) = (0, 1, 0).
  EXPECT_EQ(eval_r(s, at(s, {0, 1, 0}), at(s, {0, 0, 0})), (std::pair<Point, Point>{at(s, {0, 0, 0}), at(s, {0, 1, 0})}));
  EXPECT_THROW(eval_r(s, 8, 0), Error);
}

TEST(SolutionTest, IndecomposableExamples) {
  EXPECT_TRUE(is_indecomposable(theorem_main(2, 1)));
  EXPECT_FALSE(is_indecomposable(trivial_solution(2)));
  EXPECT_TRUE(is_indecomposable(theorem23(2, 2)));
}

TEST(SolutionTest, RetractExamples) {
  auto [r1, p1] = retract(cyclic_solution(5));
  EXPECT_EQ(r1.size(), 1u);
  EXPECT_EQ(p1.block_count(), 1u);

  auto s = theorem23(2, 2);
  auto [r2, p2] = retract(s);
  EXPECT_EQ(p2, Partition::discrete(8));
  EXPECT_EQ(r2.sigma_table(), s.sigma_table());

  EXPECT_EQ(retract(trivial_solution(4)).first.size(), 1u);
}

TEST(SolutionTest, IrretractableExamples) {
  EXPECT_TRUE(is_irretractable(theorem_main(3, 1)));
  EXPECT_FALSE(is_irretractable(cyclic_solution(4)));
  EXPECT_TRUE(is_irretractable(theorem23(2, 2)));
}

TEST(SolutionTest, MultipermutationLevelExamples) {
  EXPECT_EQ(multipermutation_level(cyclic_solution(6)), 1u);
  EXPECT_EQ(multipermutation_level(trivial_solution(1)), 0u);
  EXPECT_EQ(multipermutation_level(theorem_main(2, 1)), std::nullopt);
}

TEST(SolutionTest, HomomorphismExamples) {
  auto s = theorem23(3, 2);
  auto f = second_coordinate(s);
  EXPECT_TRUE(is_homomorphism(f, s, cyclic_solution(2)));

  auto t = theorem_main(2, 1);
  std::vector<Point> id(8);
  std::iota(id.begin(), id.end(), Point{0});
  EXPECT_TRUE(is_homomorphism(id, t, t));
  EXPECT_TRUE(is_homomorphism(std::vector<Point>(8, 0), t, trivial_solution(1)));
  // a shifted identity is not one
  std::vector<Point> shifted(8);
  for (Point i = 0; i < 8; ++i) shifted[i] = (i + 1) % 8;
  EXPECT_FALSE(is_homomorphism(shifted, t, t));
}

TEST(SolutionTest, FiberProfileExamples) {
  auto s = theorem23(2, 2);
  EXPECT_EQ(fiber_profile(second_coordinate(s), s, cyclic_solution(2)), (std::vector<std::size_t>{4, 4}));
  auto t = theorem_main(2, 1);
  std::vector<Point> id(8);
  std::iota(id.begin(), id.end(), Point{0});
  EXPECT_EQ(fiber_profile(id, t, t), std::vector<std::size_t>(8, 1));
  EXPECT_EQ(fiber_profile(std::vector<Point>(8, 0), t, trivial_solution(1)), (std::vector<std::size_t>{8}));
  EXPECT_THROW(fiber_profile(std::vector<Point>(8, 0), trivial_solution(8), trivial_solution(2)), Error);
}

TEST(SolutionTest, InverseFormIdentityOnFamilies) {
  // sigma^{-1}_{sigma^{-1}_u(v)} sigma^{-1}_u == sigma^{-1}_{sigma^{-1}_v(u)} sigma^{-1}_v
  for (const auto& s : {theorem23(2, 3), theorem23(3, 2), theorem_main(2, 1), theorem_main(3, 1)}) {
    const auto n = static_cast<Point>(s.size());
    for (Point u = 0; u < n; ++u)
      for (Point v = 0; v < n; ++v)
        ASSERT_EQ(compose(s.sigma_inv(s.sigma_inv(u)(v)), s.sigma_inv(u)),
                  compose(s.sigma_inv(s.sigma_inv(v)(u)), s.sigma_inv(v)));
  }
}

TEST(CongruenceTest, PrincipalCongruenceExamples) {
  auto t = theorem_main(2, 1);
  EXPECT_EQ(principal_congruence(t, 3, 3), Partition::discrete(8));
  for (Point x = 0; x < 8; ++x)
    for (Point y = x + 1; y < 8; ++y) EXPECT_EQ(principal_congruence(t, x, y).block_count(), 1u);

  // (0,0,0) ~ (0,0,1) in theorem23(2,2): proper, and inside the kernel of (a,b,c) -> b
  auto s = theorem23(2, 2);
  Partition c = principal_congruence(s, at(s, {0, 0, 0}), at(s, {0, 0, 1}));
  EXPECT_GT(c.block_count(), 1u);
  std::vector<std::size_t> kernel_labels;
  for (auto v : second_coordinate(s)) kernel_labels.push_back(v);
  EXPECT_TRUE(c.refines(Partition(kernel_labels)));
  EXPECT_TRUE(is_congruence(s, c));
}

// The principal congruence equals the meet of all congruences containing the
// pair, which the oracle finds by enumerating every partition.
TEST(CongruenceTest, PrincipalCongruenceIsSmallestClosedPartition) {
  for (const auto& s : {theorem23(2, 2), remark31(2), cyclic_solution(6), trivial_solution(5)}) {
    auto rows = oracle::rows_of(s);
    std::vector<std::vector<std::size_t>> closed;
    oracle::for_each_partition(s.size(), [&](const std::vector<std::size_t>& b) {
      if (oracle::is_kernel(rows, b)) closed.push_back(b);
    });
    const auto n = static_cast<Point>(s.size());
    for (Point x = 0; x < n; ++x)
      for (Point y = x + 1; y < n; ++y) {
        Partition got = principal_congruence(s, x, y);
        for (Point a = 0; a < n; ++a)
          for (Point b = 0; b < n; ++b) {
            bool related_in_all = true;
            for (const auto& block : closed)
              if (block[x] == block[y] && block[a] != block[b]) related_in_all = false;
            ASSERT_EQ(got.block_of(a) == got.block_of(b), related_in_all);
          }
      }
  }
}

TEST(CongruenceTest, ClosureIsMonotone) {
  auto s = theorem23(2, 3);
  const auto n = static_cast<Point>(s.size());
  for (Point x = 0; x < n; x += 3)
    for (Point y = 0; y < n; y += 5) {
      Partition single = principal_congruence(s, x, y);
      std::pair<Point, Point> more[] = {{x, y}, {static_cast<Point>((x + 1) % n), y}};
      EXPECT_TRUE(single.refines(congruence_closure(s, more)));
    }
}

TEST(CongruenceTest, QuotientsOfPrincipalCongruencesAreSolutions) {
  for (const auto& s : {theorem23(2, 2), remark22(4, 2, 2), cyclic_solution(4)}) {
    const auto n = static_cast<Point>(s.size());
    for (Point y = 1; y < n; ++y) {
      Solution q = quotient_by(s, principal_congruence(s, 0, y));
      EXPECT_TRUE(check_ybe(q));
      EXPECT_TRUE(check_involutive(q));
      EXPECT_TRUE(check_nondegenerate(q));
    }
  }
}

TEST(CongruenceTest, QuotientExamples) {
  auto s = theorem23(2, 2);
  EXPECT_EQ(quotient_by(s, Partition::discrete(8)).sigma_table(), s.sigma_table());
  EXPECT_EQ(quotient_by(s, Partition::full(8)).size(), 1u);
  std::vector<std::size_t> kernel;
  for (auto v : second_coordinate(s)) kernel.push_back(v);
  // blocks are numbered by first occurrence, and (0,0,0) has b = 0
  EXPECT_EQ(quotient_by(s, Partition(kernel)).sigma_table(), cyclic_solution(2).sigma_table());
  // splitting points arbitrarily is not a congruence
  EXPECT_THROW(quotient_by(s, Partition(std::vector<std::size_t>{0, 0, 1, 1, 1, 1, 1, 1})), Error);
}

TEST(CongruenceTest, SimplicityExamples) {
  EXPECT_TRUE(is_simple(theorem_main(2, 1)));
  EXPECT_FALSE(is_simple(theorem23(2, 2)));
  EXPECT_TRUE(is_simple(remark31(2)));
  EXPECT_THROW(is_simple(trivial_solution(1)), Error);
}

TEST(CongruenceTest, ThreadCountDoesNotChangeVerdict) {
  for (const auto& s : {theorem23(2, 3), theorem_main(2, 1), remark22(4, 2, 2)}) {
    auto one = simplicity_report(s, 1);
    auto four = simplicity_report(s, 4);
    EXPECT_EQ(one.simple, four.simple);
    EXPECT_EQ(one.witness, four.witness);
  }
}

TEST(CongruenceTest, SimplicityAgreesWithExhaustiveEnumeration) {
  for (const auto& s : small_suite()) {
    if (s.size() < 2 || !check_ybe(s)) continue;
    EXPECT_EQ(is_simple(s), oracle::simple_by_enumeration(oracle::rows_of(s)));
  }
}

TEST(CongruenceTest, SimplicityCorollaries) {
  EXPECT_TRUE(check_simplicity_corollaries(theorem_main(2, 1)));
  EXPECT_TRUE(check_simplicity_corollaries(remark31(3)));
  auto z2 = cyclic_solution(2);
  ASSERT_TRUE(is_simple(z2));
  EXPECT_TRUE(check_simplicity_corollaries(z2));
  // trivial solution on 3 points: decomposable with |X| > 2
  EXPECT_FALSE(check_simplicity_corollaries(trivial_solution(3)));
}
