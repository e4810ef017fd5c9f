#include "knotvar/closedform.hpp"
#include "knotvar/repcount.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace knotvar;

namespace {

const MotiveExpr q = MotiveExpr::q(), x = MotiveExpr::xi_m(), y = MotiveExpr::xi_n();

IntPoly ip(std::vector<long long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPoly(std::move(v));
}

BigInt at(const MotiveExpr& e, std::uint64_t qv, std::int64_t m, std::int64_t n) {
  return e.evaluate_exact(BigInt(qv), xi_over(qv, m), xi_over(qv, n));
}

}  // namespace

TEST(ClosedForm, Agl1) {
  EXPECT_EQ(specialize(motive_agl1(1, 1), 1, 1), ip({0, -1, 1}));
  EXPECT_EQ(complex_specialization(motive_agl1(3, 5), 3, 5), ip({0, -9, 9}));
  EXPECT_EQ(specialize(motive_agl1(4, 5), 2, 5), ip({0, -5, 5}));
  for (std::int64_t m = 1; m <= 9; ++m)
    for (std::int64_t n = 1; n <= 9; ++n)
      if (std::gcd(m, n) == 1) {
        BigInt c = (n - 1) * (m - 1) + 1;
        EXPECT_EQ(complex_specialization(motive_agl1(m, n), m, n), ip({0, -1, 1}) * IntPoly({c}));
      }
  EXPECT_THROW(motive_agl1(2, 4), HypothesisError);
}

TEST(ClosedForm, Agl2Values) {
  EXPECT_EQ(specialize(motive_agl2(3, 5), 1, 1), ip({0, 0, 0, 1, -2, 0, 1}));
  EXPECT_EQ(specialize(motive_agl2(3, 5), 3, 3).eval(7), 7521990);
  EXPECT_EQ(specialize(motive_agl2(3, 5), 3, 1).eval(13), 4826809 - 2 * 28561 + 2197);
  for (std::int64_t qv : {7, 11, 13, 31, 37})
    for (std::int64_t xm : {1, 3})
      for (std::int64_t xn : {1, 5})
        EXPECT_EQ(specialize(motive_agl2(3, 5), xm, xn).eval(qv) * 4, oracle::agl2_formula_times4(qv, xm, xn));
  EXPECT_EQ(finite_value(motive_agl2(3, 5), 7, 3, 5), 113190);
}

TEST(ClosedForm, Agl2Domain) {
  EXPECT_THROW(motive_agl2(1, 5), HypothesisError);
  EXPECT_THROW(motive_agl2(2, 5), HypothesisError);
  EXPECT_THROW(motive_agl2(3, 6), HypothesisError);
  EXPECT_NO_THROW(motive_agl2(1, 5, true));
  EXPECT_EQ(specialize(motive_agl2(1, 1, true), 1, 1), ip({0, 0, 0, 1, -2, 0, 1}));
}

TEST(ClosedForm, PublishedDisplays) {
  const std::int64_t m = 3, n = 5;
  const MotiveExpr w = (x - 1) * (y - 1);
  EXPECT_EQ(stratum_motive(StratumFamily::IRR4, m, n), w * (q.pow(3) - 2 * q.pow(2)) * (q.pow(3) - q));
  EXPECT_EQ(b_total_display(m, n), w * (q.pow(4) - q.pow(2)) + (q - 1) * q.pow(2));
  EXPECT_EQ(c_total_display(m, n), (q - 1).pow(2) * (q + 1) * q.pow(2) + w * (q - 1) * (q + 1) * (q.pow(3) - q.pow(2)));
  EXPECT_EQ(gl2_irr_motive(m, n), ((q.pow(3) - q) * w * (q - 2) * (q - 1)).divided_by(4));
  EXPECT_TRUE(specialize(gl2_irr_motive(m, n), 1, 5).coeffs().empty());
  EXPECT_TRUE(specialize(gl2_irr_motive(m, n), 3, 1).coeffs().empty());
  EXPECT_EQ(complex_specialization(gl2_irr_motive(m, n), 3, 5),
            specialize(2 * (q.pow(3) - q) * (q - 2) * (q - 1), 0, 0));
}

TEST(ClosedForm, SymbolicIdentities) {
  for (auto [m, n] : {std::pair<std::int64_t, std::int64_t>{3, 5}, {5, 7}, {3, 7}}) {
    MotiveExpr irr, a, b, c;
    for (auto f : kPublishedFamilies) {
      switch (family_group(f)) {
        case 'I': irr += stratum_motive(f, m, n); break;
        case 'A': a += stratum_motive(f, m, n); break;
        case 'B': b += stratum_motive(f, m, n); break;
        default: c += stratum_motive(f, m, n); break;
      }
    }
    EXPECT_EQ(irr, irr_total_display(m, n));
    EXPECT_EQ(a, a_total_display(m, n));
    EXPECT_EQ(b, b_total_display(m, n));
    EXPECT_EQ(c, c_total_display(m, n));
    EXPECT_EQ(irr + a + b + c, motive_agl2(m, n));
    EXPECT_EQ(stratum_motive(StratumFamily::IRR5, m, n),
              gl2_irr_motive(m, n) * q.pow(2) - ell_orbits(m, n) * (q.pow(3) - 2 * q.pow(2)) * (q.pow(3) - q));
    EXPECT_EQ(ell_orbits(m, n), (x * y * (x - 1) * (y - 1)).divided_by(4));
  }
}

TEST(ClosedForm, CorrectedMotive) {
  const MotiveExpr diff = motive_agl2(3, 5) - corrected_motive_agl2(3, 5);
  EXPECT_EQ(diff, q.pow(5) - q.pow(4) - d_total(3, 5));
  auto parts = a3_equivariant_parts(3, 5);
  EXPECT_EQ(stratum_motive(StratumFamily::A3, 3, 5) - parts[0] - parts[1], q.pow(5) - q.pow(4));
  EXPECT_TRUE(specialize(d_total(3, 5), 1, 5).coeffs().empty());
  EXPECT_TRUE(specialize(d_total(3, 5), 3, 1).coeffs().empty());
  EXPECT_EQ(at(d_total(3, 5), 31, 3, 5), BigInt("727567718400"));
}

TEST(ClosedForm, CorrectedMotiveMatchesEngineAtCleanQ) {
  struct Case {
    std::uint64_t q;
    std::int64_t m, n;
  };
  for (auto [qv, m, n] : {Case{7, 3, 5}, Case{13, 3, 5}, Case{31, 3, 5}, Case{19, 3, 7}, Case{11, 5, 7}, Case{25, 3, 7}}) {
    ASSERT_TRUE(is_clean(qv, m, n));
    BigInt got = count_agl2_reduced(make_field_of_order(qv), static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m));
    EXPECT_EQ(got, at(corrected_motive_agl2(m, n), qv, m, n)) << "q=" << qv << " (" << m << "," << n << ")";
  }
}

TEST(ClosedForm, CountingPolynomial) {
  EXPECT_EQ(counting_polynomial(4, 5, GroupKind::AGL1, 4, 5), ip({0, -13, 13}));
  EXPECT_EQ(counting_polynomial(4, 5, GroupKind::AGL1, 2, 1), ip({0, -1, 1}));
  EXPECT_EQ(counting_polynomial(7, 9, GroupKind::AGL1, 1, 1), ip({0, -1, 1}));
  EXPECT_THROW(counting_polynomial(4, 5, GroupKind::AGL1, 3, 1), std::invalid_argument);
  EXPECT_THROW(counting_polynomial(4, 5, GroupKind::GL2, 1, 1), std::invalid_argument);
}

TEST(ClosedForm, CleanAndHypotheses) {
  EXPECT_TRUE(is_clean(7, 3, 5));
  EXPECT_FALSE(is_clean(11, 3, 5));
  EXPECT_FALSE(is_clean(29, 3, 5));
  EXPECT_TRUE(hypotheses_ok(7, 3, 5, GroupKind::AGL2));
  EXPECT_FALSE(hypotheses_ok(5, 3, 5, GroupKind::AGL1));
  EXPECT_TRUE(hypotheses_ok(8, 3, 5, GroupKind::AGL1));
  EXPECT_FALSE(hypotheses_ok(8, 3, 5, GroupKind::AGL2));
  EXPECT_FALSE(hypotheses_ok(7, 4, 5, GroupKind::AGL2));
  EXPECT_FALSE(hypotheses_ok(12, 3, 5, GroupKind::AGL1));
  EXPECT_EQ(hypothesis_violations(7, 3, 5, GroupKind::AGL2), "");
  EXPECT_EQ(hypothesis_violations(5, 1, 5, GroupKind::AGL2), "char 5 divides n; m or n below 3");
}

TEST(ClosedForm, SpecializedValuesNonnegative) {
  for (auto qv : oracle::prime_powers_upto(1000))
    for (auto [m, n] : {std::pair<std::int64_t, std::int64_t>{3, 5}, {5, 7}, {3, 7}, {9, 7}}) {
      EXPECT_GE(finite_value(motive_agl1(m, n), qv, m, n), 0);
      EXPECT_GE(finite_value(motive_agl2(m, n), qv, m, n), 0);
      EXPECT_GE(at(corrected_motive_agl2(m, n), qv, m, n), 0);
    }
}

TEST(ClosedForm, FamilyTable) {
  EXPECT_EQ(kAllFamilies.size(), 15u);
  for (auto f : kAllFamilies) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_EQ(fiber_exponent(StratumFamily::IRR1), 4u);
  EXPECT_EQ(fiber_exponent(StratumFamily::C1), 3u);
  EXPECT_EQ(fiber_exponent(StratumFamily::D3), 2u);
  EXPECT_THROW(parse_family("E1"), std::invalid_argument);
}
