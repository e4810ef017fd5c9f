#include "knotvar/closedform.hpp"
#include "knotvar/repcount.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace knotvar;

namespace {

std::vector<GroupDescriptor> small_groups(std::uint64_t max_order) {
  std::vector<GroupDescriptor> out;
  for (auto q : oracle::prime_powers_upto(64)) {
    Field f = make_field_of_order(q);
    for (auto d : {GroupDescriptor::gl1(f), GroupDescriptor::agl1(f), GroupDescriptor::gl2(f),
                   GroupDescriptor::agl2(f)})
      if (d.order() <= max_order) out.push_back(d);
  }
  return out;
}

}  // namespace

TEST(Count, NaiveExamples) {
  auto d = GroupDescriptor::agl1(make_field(7, 1));
  EXPECT_EQ(count_naive(d, 1, 1), 42);
  EXPECT_EQ(count_naive(d, 5, 1), 42);
  EXPECT_EQ(count_naive(d, 5, 3), 42);
  auto g = GroupDescriptor::gl2(make_field(3, 1));
  EXPECT_EQ(count_naive(g, 1, 1), 48);
}

TEST(Count, FiberExamples) {
  EXPECT_EQ(count_power_fibers(GroupDescriptor::agl1(make_field(31, 1)), 5, 3), 8370);
  EXPECT_EQ(count_power_fibers(GroupDescriptor::agl1(make_field(2, 4)), 5, 3), 2160);
}

TEST(Count, Agl1MatchesOracle) {
  for (auto q : oracle::prime_powers_upto(64)) {
    oracle::GF G(q);
    auto d = GroupDescriptor::agl1(make_field_of_order(q));
    for (auto [n, m] : {std::pair<std::uint64_t, std::uint64_t>{5, 3}, {3, 2}, {5, 4}, {9, 4}, {7, 3}})
      ASSERT_EQ(count_reduced(d, n, m), BigInt(oracle::agl1_count(G, n, m))) << "q=" << q << " n=" << n;
  }
}

TEST(Count, Agl2MatchesOracle) {
  for (auto [p, n, m] : {std::array<std::uint64_t, 3>{7, 5, 3}, {7, 3, 2}, {5, 3, 2}, {5, 2, 1}, {7, 3, 3}}) {
    auto got = count_agl2_reduced(make_field(p, 1), n, m);
    EXPECT_EQ(got, BigInt(oracle::agl2_count(p, n, m))) << "p=" << p << " n=" << n << " m=" << m;
  }
}

TEST(Count, Agl2WhenPowerMapIsBijective) {
  // 5 does not divide |AGL2(F_q)| for q = 7, 13, so A -> A^5 is a bijection.
  for (std::uint64_t q : {7u, 13u}) {
    auto d = GroupDescriptor::agl2(make_field_of_order(q));
    EXPECT_EQ(count_agl2_reduced(make_field_of_order(q), 5, 3), d.order());
  }
  EXPECT_EQ(count_agl2_reduced(make_field(7, 1), 5, 3), 98784);
}

TEST(Count, NaiveEqualsFibers) {
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> rel = {{1, 1}, {2, 3}, {3, 2}, {5, 3}, {3, 5}, {5, 7}};
  for (const auto& d : small_groups(4000))
    for (auto [n, m] : rel) ASSERT_EQ(count_naive(d, n, m), count_power_fibers(d, n, m)) << d.name() << " " << n << "," << m;
}

TEST(Count, FibersEqualReduced) {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    Field f = make_field(p, 1);
    auto d = GroupDescriptor::agl2(f);
    for (auto [n, m] : {std::pair<std::uint64_t, std::uint64_t>{5, 3}, {3, 5}, {7, 3}}) {
      if (n % p == 0 || m % p == 0) continue;
      EXPECT_EQ(count_power_fibers(d, n, m), count_agl2_reduced(f, n, m)) << "p=" << p;
    }
  }
  Field f3 = make_field(3, 1);
  EXPECT_EQ(count_agl2_reduced(f3, 5, 1), 432);
  EXPECT_EQ(count_power_fibers(GroupDescriptor::agl2(f3), 5, 1), 432);
  for (const auto& d : small_groups(20000))
    EXPECT_EQ(count_power_fibers(d, 5, 3), count_reduced(d, 5, 3)) << d.name();
}

TEST(Count, Symmetry) {
  for (std::uint64_t q : {5u, 8u, 9u, 11u}) {
    Field f = make_field_of_order(q);
    for (auto d : {GroupDescriptor::gl2(f), GroupDescriptor::agl2(f)}) EXPECT_EQ(count_reduced(d, 5, 3), count_reduced(d, 3, 5));
  }
}

TEST(Count, ModulusIndependence) {
  auto mods = irreducible_monics(3, 2, 3);
  ASSERT_EQ(mods.size(), 3u);
  Field a = make_field_with_modulus(3, mods[0]);
  for (std::size_t i = 1; i < mods.size(); ++i) {
    Field b = make_field_with_modulus(3, mods[i]);
    for (auto [n, m] : {std::pair<std::uint64_t, std::uint64_t>{5, 2}, {4, 5}, {7, 2}}) {
      EXPECT_EQ(count_agl2_reduced(a, n, m), count_agl2_reduced(b, n, m));
      EXPECT_EQ(count_reduced(GroupDescriptor::agl1(a), n, m), count_reduced(GroupDescriptor::agl1(b), n, m));
    }
  }
}

TEST(Count, ThreadCountDoesNotMatter) {
  Field f = make_field(11, 1);
  CountOptions one, four;
  four.threads = 4;
  EXPECT_EQ(count_agl2_reduced(f, 5, 3, one), count_agl2_reduced(f, 5, 3, four));
  auto d = GroupDescriptor::agl1(make_field(5, 2));
  EXPECT_EQ(count_naive(d, 3, 4, one), count_naive(d, 3, 4, four));
}

TEST(Count, KernelDim) {
  Field f = make_field(31, 1);
  const FieldCtx& F = *f;
  Code z3 = F.exp(10), z5 = F.exp(6);
  Mat2 A{z3, 0, 0, F.mul(z3, z3)};
  EXPECT_EQ(kernel_dim(F, A, Mat2{z5, 0, 0, F.mul(z5, z5)}, 3, 5), 4u);
  EXPECT_EQ(kernel_dim(F, mat2::identity(), mat2::identity(), 3, 5), 2u);
  EXPECT_EQ(kernel_dim(F, A, Mat2{z5, 0, 0, 1}, 3, 5), 3u);
  EXPECT_THROW(kernel_dim(F, A, Mat2{3, 0, 0, 1}, 3, 5), std::invalid_argument);
  EXPECT_THROW(kernel_dim(F, Mat2{1, 1, 1, 1}, mat2::identity(), 3, 5), std::invalid_argument);
}

TEST(Count, FormulaGap) {
  EXPECT_EQ(formula_gap(make_field(7, 1), 5, 3), -14406);
  EXPECT_EQ(formula_gap(make_field(13, 1), 5, 3), -342732);
  EXPECT_EQ(formula_gap(make_field(11, 1), 5, 3), BigInt("1376639990"));
  EXPECT_EQ(formula_gap(make_field(31, 1), 5, 3), BigInt("727540012770"));
  EXPECT_THROW(formula_gap(make_field(5, 1), 5, 3), HypothesisError);
  EXPECT_THROW(formula_gap(make_field(7, 1), 4, 3), HypothesisError);
}

TEST(Count, Bounds) {
  CountOptions tight;
  tight.naive_bound = 100;
  EXPECT_THROW(count_naive(GroupDescriptor::agl1(make_field(7, 1)), 5, 3, tight), std::out_of_range);
  EXPECT_THROW(count_agl2_reduced(make_field(67, 1), 5, 3), std::out_of_range);
  EXPECT_THROW(count_reduced(GroupDescriptor::gl1(make_field(7, 1)), 0, 3), std::invalid_argument);
  EXPECT_EQ(parse_tier("fibers"), Tier::Fibers);
  EXPECT_THROW(parse_tier("fast"), std::invalid_argument);
}
