#include "knotvar/closedform.hpp"
#include "knotvar/exactpoly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace knotvar;

namespace {

const MotiveExpr q = MotiveExpr::q(), x = MotiveExpr::xi_m(), y = MotiveExpr::xi_n();

MotiveExpr random_expr(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9), ex(0, 3), len(0, 4);
  MotiveExpr e;
  for (int i = len(rng); i > 0; --i)
    e += MotiveExpr::monomial(coeff(rng), {static_cast<unsigned>(ex(rng)), static_cast<unsigned>(ex(rng)),
                                           static_cast<unsigned>(ex(rng))});
  return e;
}

IntPoly ip(std::vector<long long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPoly(std::move(v));
}

}  // namespace

TEST(Motive, Arithmetic) {
  EXPECT_EQ((q - 1) * (q + 1), q.pow(2) - 1);
  EXPECT_EQ((x - 1) * (y - 1), x * y - x - y + 1);
  EXPECT_TRUE((q * (q.pow(2) - q) - q * (q.pow(2) - q)).is_zero());
  EXPECT_EQ(MotiveExpr(0), MotiveExpr());
}

TEST(Motive, RingAxiomsRandom) {
  std::mt19937 rng(12345);
  for (int i = 0; i < 500; ++i) {
    MotiveExpr a = random_expr(rng), b = random_expr(rng), c = random_expr(rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(Motive, SpecializeIsHomomorphism) {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> xi(-4, 6);
  for (int i = 0; i < 200; ++i) {
    MotiveExpr a = random_expr(rng), b = random_expr(rng);
    BigInt xm = xi(rng), xn = xi(rng);
    ASSERT_EQ(specialize(a + b, xm, xn), specialize(a, xm, xn) + specialize(b, xm, xn));
    ASSERT_EQ(specialize(a * b, xm, xn), specialize(a, xm, xn) * specialize(b, xm, xn));
  }
}

TEST(Motive, SpecializeExamples) {
  EXPECT_EQ(specialize(motive_agl1(3, 5), 3, 5), ip({0, -9, 9}));
  EXPECT_EQ(specialize(motive_agl1(3, 5), 1, 1), ip({0, -1, 1}));
  EXPECT_EQ(specialize(motive_agl2(3, 5), 3, 1), ip({0, 0, 0, 1, -2, 0, 1}));
}

TEST(Motive, EvalExamples) {
  EXPECT_EQ(ip({0, -9, 9}).eval(31), 8370);
  EXPECT_EQ(ip({0, -1, 1}).eval(7), 42);
  EXPECT_EQ(ip({5, 3, 2}).eval(0), 5);
  EXPECT_EQ(IntPoly().degree(), -1);
  EXPECT_EQ(ip({1, 2, 0, 0}).degree(), 1);
}

TEST(Motive, QuarterDenominators) {
  MotiveExpr e = (q.pow(2) + q).divided_by(2);
  EXPECT_FALSE(e.is_integral());
  EXPECT_EQ(e.evaluate_exact(5, 0, 0), 15);
  EXPECT_EQ(e * 2, q.pow(2) + q);
  EXPECT_TRUE(((q * 4).divided_by(4)).is_integral());
  EXPECT_THROW(specialize(q.divided_by(2), 1, 1), std::domain_error);
  EXPECT_THROW(q.divided_by(2).evaluate_exact(3, 0, 0), std::domain_error);
}

TEST(Motive, Agl2DegreeAndLeadingCoefficient) {
  MotiveExpr m = motive_agl2(3, 5);
  EXPECT_EQ(m.degree_q(), 8);
  EXPECT_EQ(m.coefficient_q(8), ((x - 1) * (x - 2) * (y - 1) * (y - 2)).divided_by(4));
  EXPECT_EQ(specialize(m, 1, 1).degree(), 6);
  EXPECT_EQ(specialize(m, 1, 1).coeff(6), 1);
}

TEST(Motive, StrFormat) {
  EXPECT_EQ((x * q.pow(2) - q + 2).str(), "xi_m*q^2 - q + 2");
  EXPECT_EQ(MotiveExpr().str(), "0");
  EXPECT_EQ((q + 1).divided_by(2).str(), "(q + 1)/2");
  EXPECT_EQ(ip({0, -9, 9}).str("t"), "9*t^2 - 9*t");
}

TEST(Motive, JsonRoundTrip) {
  for (const MotiveExpr& e : {motive_agl1(3, 5), motive_agl2(3, 5), corrected_motive_agl2(3, 5), MotiveExpr()}) {
    nlohmann::json j = e.to_json();
    EXPECT_EQ(j["vars"], nlohmann::json({"q", "xi_m", "xi_n"}));
    EXPECT_EQ(MotiveExpr::from_json(j), e);
    EXPECT_EQ(MotiveExpr::from_json(nlohmann::json::parse(j.dump())), e);
  }
  auto j = motive_agl1(3, 5).to_json();
  EXPECT_FALSE(j.contains("denominator"));
  auto& terms = j["terms"];
  for (std::size_t i = 1; i < terms.size(); ++i)
    EXPECT_LT(terms[i - 1]["exps"].get<std::vector<unsigned>>(), terms[i]["exps"].get<std::vector<unsigned>>());
  EXPECT_TRUE(motive_agl2(3, 5).to_json().contains("denominator"));
}

TEST(Motive, JsonErrors) {
  EXPECT_THROW(MotiveExpr::from_json(nlohmann::json::object()), std::invalid_argument);
  EXPECT_THROW(MotiveExpr::from_json({{"terms", {{{"coeff", "1"}, {"exps", {1, 0}}}}}}), std::invalid_argument);
  EXPECT_THROW(MotiveExpr::from_json({{"vars", {"t"}}, {"terms", nlohmann::json::array()}}), std::invalid_argument);
  EXPECT_THROW(MotiveExpr::from_json({{"terms", {{{"coeff", "x1"}, {"exps", {1, 0, 0}}}}}}), std::invalid_argument);
}
