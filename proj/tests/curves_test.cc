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

#include "torelli/curves.h"

#include <optional>
#include <set>

#include "gtest/gtest.h"
#include "torelli/errors.h"
#include "torelli/parse.h"

namespace torelli {
namespace {

Poly P(const Field& f, const char* s) { return parse_poly(f, s); }

template <typename Fn>
std::optional<ErrorCode> CodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

TEST(ValidateOddModel, Examples) {
  const Field f7 = Field::prime(7);
  EXPECT_EQ(validate_odd_model(P(f7, "x^5+1"), 2).genus, 2);

  const Field q = Field::rationals();
  EXPECT_EQ(CodeOf([&] { validate_odd_model(P(q, "x^5"), 2); }), ErrorCode::kNotSquarefree);

  const Field f5 = Field::prime(5);
  const Poly f = P(f5, "x^7-x+1");
  EXPECT_EQ(formal_derivative(f), P(f5, "2x^6-1"));
  EXPECT_EQ(validate_odd_model(f, 3).genus, 3);

  EXPECT_EQ(CodeOf([&] { validate_odd_model(P(f7, "x^6+1"), 2); }), ErrorCode::kWrongDegree);
  EXPECT_EQ(CodeOf([&] { validate_odd_model(P(Field::prime(2), "x^5+1"), 2); }),
            ErrorCode::kWrongCharacteristic);
}

TEST(ValidateAsModel, Examples) {
  const Field f4 = make_ext_field(2, 2);
  const FieldElem one = f4.one();
  const ASModel m = validate_as_model(one, {{f4.zero(), one}, {one, one}}, 2);
  const RamificationData r = ramification_data(m);
  ASSERT_EQ(r.points.size(), 3u);
  EXPECT_EQ(r.total, 6);
  for (const auto& p : r.points) EXPECT_EQ(p.order, 2);
  EXPECT_EQ(*r.points[0].x, f4.zero());
  EXPECT_EQ(*r.points[1].x, one);
  EXPECT_FALSE(r.points[2].x.has_value());

  EXPECT_EQ(CodeOf([&] { validate_as_model(one, {{one, one}, {one, one}}, 2); }),
            ErrorCode::kDuplicateBranchPoint);
  EXPECT_EQ(CodeOf([&] { validate_as_model(one, {{f4.zero(), f4.zero()}, {one, one}}, 2); }),
            ErrorCode::kZeroResidue);
  EXPECT_EQ(CodeOf([&] { validate_as_model(f4.zero(), {{f4.zero(), one}, {one, one}}, 2); }),
            ErrorCode::kZeroResidue);
  const Field f3 = Field::prime(3);
  EXPECT_EQ(CodeOf([&] { validate_as_model(f3.one(), {{f3.zero(), f3.one()}, {f3.one(), f3.one()}}, 2); }),
            ErrorCode::kWrongCharacteristic);
}

TEST(CurveGenus, Examples) {
  const Field f7 = Field::prime(7);
  EXPECT_EQ(curve_genus(CurveModel(validate_odd_model(P(f7, "x^5+1"), 2))), 2);
  EXPECT_EQ(curve_genus(CurveModel(validate_odd_model(P(Field::prime(5), "x^7-x+1"), 3))), 3);
  const Field f4 = make_ext_field(2, 2);
  const FieldElem t = f4.generator();
  const ASModel m = validate_as_model(
      f4.one(), {{f4.zero(), f4.one()}, {f4.one(), t}, {t, t * t}}, 3);
  EXPECT_EQ(curve_genus(CurveModel(m)), 3);
}

TEST(RandomCurve, Examples) {
  const Field f101 = Field::prime(101);
  const CurveModel a = random_curve(f101, 3, 1);
  ASSERT_TRUE(std::holds_alternative<OddModel>(a));
  const Poly& f = std::get<OddModel>(a).f;
  EXPECT_EQ(f.degree(), 7);
  EXPECT_TRUE(is_squarefree(f));

  EXPECT_EQ(CodeOf([] { random_curve(Field::prime(2), 2, 0); }), ErrorCode::kFieldTooSmall);

  const CurveModel b = random_curve(make_ext_field(2, 4), 4, 7);
  ASSERT_TRUE(std::holds_alternative<ASModel>(b));
  const ASModel& m = std::get<ASModel>(b);
  ASSERT_EQ(m.branch.size(), 4u);
  std::set<std::uint64_t> points;
  for (const auto& t : m.branch) points.insert(t.point.code());
  EXPECT_EQ(points.size(), 4u);
}

TEST(RandomCurve, DeterministicAndValid) {
  for (const Field& field : {Field::rationals(), Field::prime(101), make_ext_field(3, 4),
                             make_ext_field(2, 4), make_ext_field(2, 6)}) {
    for (int g = 2; g <= 5; ++g) {
      if (field->is_finite() && field->order() < 4u * g) continue;
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const CurveModel m = random_curve(field, g, seed);
        EXPECT_EQ(curve_spec(m), curve_spec(random_curve(field, g, seed)));
        EXPECT_EQ(curve_genus(m), g);
        if (const auto* odd = std::get_if<OddModel>(&m)) {
          EXPECT_NO_THROW(validate_odd_model(odd->f, g));
        } else {
          const auto& as = std::get<ASModel>(m);
          EXPECT_NO_THROW(validate_as_model(as.alpha0, as.branch, g));
          EXPECT_EQ(ramification_data(as).total, 2 * g + 2);
        }
      }
    }
  }
}

TEST(ReduceToNormalForm, WorkedExample) {
  const Field f2 = Field::prime(2);
  // Oracle for the first step: c / b^2 by long division and cover-up.
  const RatFunc quotient(P(f2, "x^5+1"), P(f2, "x^4+x^2"));
  EXPECT_EQ(quotient, RatFunc(P(f2, "x")) + RatFunc(P(f2, "1"), P(f2, "x^2")) +
                          RatFunc(P(f2, "1"), P(f2, "x+1")));
  const RawASCurve raw{f2, f2.one(), P(f2, "x^2+x"), P(f2, "x^5+1")};
  const NormalFormResult r = reduce_to_normal_form(raw);
  EXPECT_EQ(r.model.alpha0, f2.one());
  ASSERT_EQ(r.model.branch.size(), 2u);
  EXPECT_EQ(r.model.branch[0].point, f2.zero());
  EXPECT_EQ(r.model.branch[0].residue, f2.one());
  EXPECT_EQ(r.model.branch[1].point, f2.one());
  EXPECT_EQ(r.model.branch[1].residue, f2.one());
  EXPECT_EQ(normal_form_string(r.model), "x + 1/x + 1/(x+1)");
  EXPECT_EQ(replay(raw, r.log), normal_form_equation(r.model));

  // Substituting y <- y + 1/x into y^2 - y - c/b^2 by hand.
  const RatFunc u(P(f2, "1"), P(f2, "x"));
  const RatFunc c0 = u * u - u - quotient;
  EXPECT_EQ(-c0, r.model.f());
}

TEST(ReduceToNormalForm, Errors) {
  const Field f2 = Field::prime(2);
  EXPECT_EQ(CodeOf([&] {
              reduce_to_normal_form({f2, f2.one(), P(f2, "x^2+x"), P(f2, "x^5")});
            }),
            ErrorCode::kDegenerateCurve);
  EXPECT_EQ(CodeOf([&] {
              reduce_to_normal_form({f2, f2.one(), P(f2, "x^2"), P(f2, "x^5+1")});
            }),
            ErrorCode::kNonGenericB);
  EXPECT_EQ(CodeOf([&] {
              reduce_to_normal_form({f2, f2.one(), P(f2, "x^2+x+1"), P(f2, "x^5+1")});
            }),
            ErrorCode::kNonGenericB);
  // x^2+x+1 has no root in GF(2), so the constant 1 cannot be absorbed.
  EXPECT_EQ(CodeOf([&] {
              reduce_to_normal_form({f2, f2.one(), P(f2, "x^2+x"), P(f2, "x^5+x^4+x^3+x^2+1")});
            }),
            ErrorCode::kUnsolvableConstant);
  const Field f3 = Field::prime(3);
  EXPECT_EQ(CodeOf([&] {
              reduce_to_normal_form({f3, f3.one(), P(f3, "x^2+x"), P(f3, "x^5+1")});
            }),
            ErrorCode::kWrongCharacteristic);
}

TEST(ReduceToNormalForm, IdempotentThroughEncoding) {
  for (int k : {2, 4, 6}) {
    const Field field = make_ext_field(2, k);
    for (int g = 2; g <= 5; ++g) {
      if (field->order() < 4u * g) continue;
      for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const ASModel m = std::get<ASModel>(random_curve(field, g, seed));
        const RawASCurve raw = encode_as_raw(m);
        const NormalFormResult r = reduce_to_normal_form(raw);
        EXPECT_EQ(curve_spec(r.model), curve_spec(m));
        EXPECT_EQ(replay(raw, r.log), normal_form_equation(r.model));
      }
    }
  }
}

TEST(ReduceToNormalForm, RandomRawCurves) {
  for (int k : {2, 4, 6}) {
    const Field field = make_ext_field(2, k);
    for (int g = 2; g <= 4; ++g) {
      if (field->order() < 4u * g) continue;
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const RawASCurve raw = random_raw_as_curve(field, g, seed);
        const NormalFormResult r = reduce_to_normal_form(raw);
        std::set<std::uint64_t> branch, roots;
        for (const auto& t : r.model.branch) branch.insert(t.point.code());
        for (const auto& rm : split_roots(raw.b)) roots.insert(rm.root.code());
        EXPECT_EQ(branch, roots);
        EXPECT_EQ(replay(raw, r.log), normal_form_equation(r.model));
      }
    }
  }
}

TEST(ApplyMobius, MovesRootToInfinity) {
  const Field f4 = make_ext_field(2, 2);
  const FieldElem t = f4.generator();
  const RawASCurve raw{f4, f4.one(), P(f4, "x(x+1)(x+t)"), P(f4, "x^6 + t x^3 + x + 1")};
  const RawASCurve moved = apply_mobius(raw, t);
  EXPECT_EQ(moved.b.degree(), 2);
  // Remaining roots 0 and 1 go to 1/(0 - t) and 1/(1 - t).
  std::set<std::uint64_t> expected{(f4.one() / (f4.zero() - t)).code(),
                                   (f4.one() / (f4.one() - t)).code()};
  std::set<std::uint64_t> roots;
  for (const auto& rm : split_roots(moved.b)) roots.insert(rm.root.code());
  EXPECT_EQ(roots, expected);
  EXPECT_EQ(CodeOf([&] { apply_mobius(raw, t + f4.one()); }),
            ErrorCode::kInvalidArgument);
}

TEST(ApplyMobius, InvertsThePullback) {
  const Field f4 = make_ext_field(2, 2);
  const FieldElem t = f4.generator();
  const ASModel m = validate_as_model(f4.one(), {{f4.one(), f4.one()}, {t, f4.one()}}, 2);
  const RawASCurve target = encode_as_raw(m);
  // Pull back along x' = 1/(x - rho): b(x) = (x-rho)^3 b'(1/(x-rho)).
  const FieldElem rho = t + f4.one();
  const RawASCurve raw{f4, f4.one(), target.b.reversed(3).taylor_shift(-rho),
                       target.c.reversed(6).taylor_shift(-rho)};
  EXPECT_EQ(raw.b.degree(), 3);
  EXPECT_TRUE(raw.b.eval(rho).is_zero());
  const RawASCurve moved = apply_mobius(raw, rho);
  EXPECT_EQ(moved.b, target.b);
  EXPECT_EQ(moved.c, target.c);
  EXPECT_EQ(curve_spec(reduce_to_normal_form(moved).model), curve_spec(m));
}

TEST(Formatting, CurveSpec) {
  const Field f4 = make_ext_field(2, 2);
  const ASModel m = validate_as_model(f4.one(), {{f4.zero(), f4.one()}, {f4.one(), f4.one()}}, 2);
  EXPECT_EQ(curve_spec(CurveModel(m)), "char=2^2;alpha0=1;terms=(0:1),(1:1)");
  EXPECT_EQ(char_token(Field::rationals()), "0");
  EXPECT_EQ(char_token(Field::prime(7)), "7");
  const Field f7 = Field::prime(7);
  EXPECT_EQ(curve_spec(CurveModel(validate_odd_model(P(f7, "x^5+3x+1"), 2))),
            "char=7;f=x^5+3*x+1");
}

}  // namespace
}  // namespace torelli
