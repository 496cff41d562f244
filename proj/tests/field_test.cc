// Copyright 2026 The Torelli Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "torelli/field.h"

#include <random>

#include "gtest/gtest.h"
#include "torelli/errors.h"
#include "torelli/poly.h"

namespace torelli {
namespace {

// Exhaustive oracle for the modulus choice: the monic irreducible quadratics
// over GF(2) are those without roots in {0, 1}.
TEST(MakeExtField, QuadraticOverGF2IsTheOnlyIrreducible) {
  int irreducible = 0;
  for (int c1 = 0; c1 < 2; ++c1) {
    for (int c0 = 0; c0 < 2; ++c0) {
      const bool root0 = c0 == 0;
      const bool root1 = (1 + c1 + c0) % 2 == 0;
      if (!root0 && !root1) {
        ++irreducible;
        EXPECT_EQ(c1, 1);
        EXPECT_EQ(c0, 1);
      }
    }
  }
  EXPECT_EQ(irreducible, 1);
  const Field f4 = make_ext_field(2, 2);
  EXPECT_EQ(f4->kind(), FieldCtx::Kind::kExtension);
  EXPECT_EQ(f4->modulus(), (std::vector<std::uint64_t>{1, 1, 1}));
}

TEST(MakeExtField, DegreeOneIsPrimeField) {
  EXPECT_EQ(make_ext_field(2, 1)->kind(), FieldCtx::Kind::kPrime);
  EXPECT_EQ(make_ext_field(5, 1)->spec(), "GF(5)");
}

TEST(MakeExtField, LeastModulusChoices) {
  EXPECT_EQ(make_ext_field(2, 3)->modulus(), (std::vector<std::uint64_t>{1, 1, 0, 1}));
  EXPECT_EQ(make_ext_field(2, 4)->modulus(), (std::vector<std::uint64_t>{1, 1, 0, 0, 1}));
  // t^2 + 1 is irreducible over GF(3): neither 0, 1 nor 2 is a root.
  EXPECT_EQ(make_ext_field(3, 2)->modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
}

TEST(MakeExtField, Reproducible) {
  EXPECT_EQ(make_ext_field(3, 4)->modulus(), make_ext_field(3, 4)->modulus());
  EXPECT_TRUE(make_ext_field(2, 6) == make_ext_field(2, 6));
}

// Brute-force oracle: trial division by every monic polynomial of degree
// 1..k/2 over GF(p).
TEST(MakeExtField, ModulusHasNoSmallFactors) {
  for (auto [p, k] : {std::pair{2, 6}, {3, 4}, {5, 3}, {2, 8}, {7, 2}}) {
    const Field ext = make_ext_field(p, k);
    const Field base = Field::prime(p);
    std::vector<FieldElem> mc;
    for (auto c : ext->modulus()) mc.push_back(base.from_int(static_cast<std::int64_t>(c)));
    const Poly m(base, mc);
    ASSERT_EQ(m.degree(), k);
    for (int d = 1; 2 * d <= k; ++d) {
      std::uint64_t count = 1;
      for (int i = 0; i < d; ++i) count *= p;
      for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<FieldElem> c;
        std::uint64_t rest = code;
        for (int i = 0; i < d; ++i) {
          c.push_back(base.from_int(static_cast<std::int64_t>(rest % p)));
          rest /= p;
        }
        c.push_back(base.one());
        const Poly divisor(base, c);
        EXPECT_FALSE(divisor.divides(m)) << ext->spec() << " divisible by " << divisor.to_string();
      }
    }
  }
}

TEST(MakeExtField, Errors) {
  try {
    make_ext_field(4, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPrime);
  }
  try {
    make_ext_field(2, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegreeZero);
  }
}

TEST(FieldArith, Examples) {
  const Field f5 = Field::prime(5);
  EXPECT_EQ(field_arith(f5.from_int(2), f5.from_int(3), ArithOp::kDiv), f5.from_int(4));
  // Oracle: 3 * 4 = 12 = 2 mod 5.
  EXPECT_EQ(f5.from_int(3) * f5.from_int(4), f5.from_int(2));

  const Field q = Field::rationals();
  EXPECT_EQ(field_arith(q.from_rational(mpq_class(1, 2)), q.from_rational(mpq_class(1, 3)),
                        ArithOp::kAdd)
                .to_string(),
            "5/6");

  const Field f4 = make_ext_field(2, 2);
  const FieldElem t = f4.generator();
  EXPECT_EQ(field_arith(t, t + f4.one(), ArithOp::kMul), f4.one());
}

TEST(FieldArith, ErrorPaths) {
  const Field f5 = Field::prime(5);
  const Field f7 = Field::prime(7);
  try {
    (void)(f5.one() / f5.zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivideByZero);
  }
  try {
    (void)(f5.one() + f7.one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCtxMismatch);
  }
}

TEST(FieldElem, CanonicalForms) {
  const Field q = Field::rationals();
  EXPECT_EQ(q.from_rational(mpq_class(4, -6)).to_string(), "-2/3");
  EXPECT_EQ(Field::prime(7).from_int(-1).code(), 6u);
  const Field f9 = make_ext_field(3, 2);
  EXPECT_EQ((f9.generator() * f9.generator()).to_string(), "2");
  EXPECT_EQ((f9.generator() + f9.one()).to_string(), "t+1");
  // Structurally equal contexts interoperate.
  EXPECT_EQ(make_ext_field(3, 2).generator() + f9.one(), f9.generator() + f9.one());
}

TEST(SqrtChar2, Examples) {
  const Field f2 = Field::prime(2);
  EXPECT_EQ(sqrt_char2(f2.one()), f2.one());
  const Field f4 = make_ext_field(2, 2);
  const FieldElem t = f4.generator();
  EXPECT_EQ(sqrt_char2(t), t + f4.one());
  EXPECT_EQ((t + f4.one()) * (t + f4.one()), t);
  const Field f8 = make_ext_field(2, 3);
  for (const auto& a : f8.elements()) EXPECT_EQ(sqrt_char2(a), a.pow(4));
}

TEST(SqrtChar2, WrongCharacteristic) {
  try {
    sqrt_char2(Field::prime(3).one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongCharacteristic);
  }
}

TEST(SqrtChar2, SquaresBack) {
  for (int k = 1; k <= 8; ++k) {
    const Field f = make_ext_field(2, k);
    if (k <= 4) {
      for (const auto& a : f.elements()) {
        const FieldElem r = sqrt_char2(a);
        EXPECT_EQ(r * r, a);
      }
    } else {
      std::mt19937_64 rng(k);
      for (int i = 0; i < 200; ++i) {
        const FieldElem a = f.from_code(rng() % f->order());
        const FieldElem r = sqrt_char2(a);
        EXPECT_EQ(r * r, a);
      }
    }
  }
}

// Table-driven multiplication must agree with direct polynomial arithmetic;
// GF(2^17) is past the table threshold and exercises the slow path.
TEST(FieldElem, LargeFieldAgreesWithInverse) {
  const Field big = make_ext_field(2, 17);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const FieldElem a = big.from_code(1 + rng() % (big->order() - 1));
    EXPECT_EQ(a * a.inverse(), big.one());
    EXPECT_EQ(a.pow(big->order() - 1), big.one());
  }
}

}  // namespace
}  // namespace torelli
