#include "knotvar/ffield.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace knotvar;

TEST(Field, PrimeFieldBasics) {
  Field f = make_field(7, 1);
  EXPECT_EQ(f->q(), 7u);
  EXPECT_EQ(f->mul(3, 5), 1u);
  EXPECT_EQ(f->inv(3), 5u);
  EXPECT_EQ(f->from_int(-1), 6u);
  EXPECT_EQ(f->pow(3, -1), 5u);
}

TEST(Field, DefaultModuli) {
  EXPECT_EQ(make_field(3, 2)->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(make_field(3, 2, 1)->modulus(), (std::vector<std::uint32_t>{2, 1, 1}));
  EXPECT_EQ(make_field(2, 2)->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(make_field(3, 2)->modulus_string(), "x^2+1");
}

TEST(Field, AxiomsSmallFields) {
  for (std::uint64_t q : {4u, 8u, 9u, 16u, 25u, 27u}) {
    Field f = make_field_of_order(q);
    const FieldCtx& F = *f;
    for (Code a = 0; a < q; ++a) {
      EXPECT_EQ(F.add(a, F.neg(a)), 0u);
      if (a) {
        EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
      }
      for (Code b = 0; b < q; ++b) {
        EXPECT_EQ(F.mul(a, b), F.mul(b, a));
        Code c = (a * 7 + b) % q;
        EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  }
}

TEST(Field, GeneratorHasFullOrder) {
  for (std::uint64_t q : {5u, 8u, 9u, 49u, 64u}) {
    Field f = make_field_of_order(q);
    Code g = f->generator();
    for (std::uint64_t e = 1; e < q - 1; ++e) EXPECT_NE(f->pow(g, static_cast<std::int64_t>(e)), 1u);
    EXPECT_EQ(f->pow(g, static_cast<std::int64_t>(q - 1)), 1u);
  }
}

TEST(Field, RootsOfUnityMatchOracle) {
  for (auto q : oracle::prime_powers_upto(81)) {
    Field f = make_field_of_order(q);
    oracle::GF G(q);
    for (std::uint64_t l = 1; l <= 30; ++l) {
      EXPECT_EQ(unity_root_count(*f, l), oracle::roots_of_unity(G, l)) << "q=" << q << " l=" << l;
      EXPECT_EQ(unity_root_count_gcd(q, l), oracle::roots_of_unity(G, l));
    }
  }
}

TEST(Field, OmegaSet) {
  Field f = make_field(31, 1);
  EXPECT_EQ(omega_set(*f, 3, 5).size(), 8u);
  EXPECT_TRUE(omega_set(*make_field(7, 1), 3, 5).empty());
  EXPECT_THROW(omega_set(*f, 3, 6), std::invalid_argument);
}

TEST(Field, FqWrapper) {
  Field f = make_field(3, 2);
  Fq x(*f, 3), one = Fq::from_int(*f, 1);
  EXPECT_EQ(x * x.inv(), one);
  EXPECT_EQ((x + one) - one, x);
  EXPECT_EQ(x.str(), "x");
  Field g = make_field(3, 2);
  EXPECT_THROW((void)(Fq(*f, 1) == Fq(*g, 1)), std::logic_error);
  EXPECT_THROW(Fq(*f, 9), std::out_of_range);
}

TEST(Field, Errors) {
  EXPECT_THROW(make_field(6, 1), std::invalid_argument);
  EXPECT_THROW(make_field(2, 0), std::invalid_argument);
  EXPECT_THROW(make_field(2, 30), std::out_of_range);
  EXPECT_THROW(make_field_of_order(12), std::invalid_argument);
  EXPECT_THROW(make_field_with_modulus(3, {2, 0, 1}), std::invalid_argument);  // x^2 + 2 = (x-1)(x+1)
  EXPECT_THROW(make_field_with_modulus(3, {1, 0, 2}), std::invalid_argument);
  EXPECT_THROW(make_field(3, 2, 100), std::out_of_range);
  EXPECT_THROW(unity_root_count(*make_field(5, 1), 0), std::invalid_argument);
}
