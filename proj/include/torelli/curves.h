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

// Hyperelliptic curve models.
//
//   OddModel:  y^2 = f(x), deg f = 2g + 1, f squarefree, char != 2.
//   ASModel:   y^2 - y = alpha0 x + sum_i alpha_i / (x - a_i), char 2.
//
// The Artin-Schreier normal form is reached from a raw curve
// a y^2 + b(x) y + c(x) = 0 by reduce_to_normal_form, which records every
// substitution so the transformation can be replayed symbolically.

#ifndef TORELLI_CURVES_H_
#define TORELLI_CURVES_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "torelli/field.h"
#include "torelli/poly.h"

namespace torelli {

struct OddModel {
  Field field;
  Poly f;
  int genus;
};

struct BranchTerm {
  FieldElem point;    // a_i
  FieldElem residue;  // alpha_i
};

struct ASModel {
  Field field;
  FieldElem alpha0;
  std::vector<BranchTerm> branch;
  int genus;

  // alpha0 x + sum alpha_i / (x - a_i)
  RatFunc f() const;
  // prod (x - a_i)
  Poly branch_poly() const;
};

using CurveModel = std::variant<OddModel, ASModel>;

// a y^2 + b y + c = 0 over a field of characteristic 2.
struct RawASCurve {
  Field field;
  FieldElem a;
  Poly b;
  Poly c;
};

struct RamificationPoint {
  std::optional<FieldElem> x;  // nullopt is the point at infinity
  int order;
};

struct RamificationData {
  std::vector<RamificationPoint> points;
  int total;
};

// Throws WrongCharacteristic, WrongDegree, NotSquarefree, InvalidArgument
// (g < 2).
OddModel validate_odd_model(const Poly& f, int g);
// Throws WrongCharacteristic, DuplicateBranchPoint, ZeroResidue,
// WrongDegree (branch length != g), InvalidArgument (g < 2).
ASModel validate_as_model(const FieldElem& alpha0, std::vector<BranchTerm> branch, int g);
RamificationData ramification_data(const ASModel& model);

int curve_genus(const CurveModel& model);
const Field& curve_field(const CurveModel& model);

// Smallest finite field random_curve accepts for genus g: 4g elements, or
// 2g in characteristic 2. 0 for the rationals.
std::uint64_t min_field_order(const Field& field, int g);
// Throws FieldTooSmall.
void require_field_size(const Field& field, int g);

// Uniform over finite fields; over Q a small fraction n/d with
// |n| <= 20, 1 <= d <= 5.
FieldElem random_element(const Field& field, std::mt19937_64& rng);
FieldElem random_nonzero(const Field& field, std::mt19937_64& rng);

// OddModel outside characteristic 2, ASModel in characteristic 2, drawn by
// rejection sampling. Throws FieldTooSmall below min_field_order.
CurveModel random_curve(const Field& field, int g, std::uint64_t seed);

// A generic raw curve isomorphic to a random ASModel: random a != 0 and a
// random Artin-Schreier shift u = l x + k + sum m_i / (x - a_i) folded into
// c. Throws WrongCharacteristic, FieldTooSmall.
RawASCurve random_raw_as_curve(const Field& field, int g, std::uint64_t seed);

// ------------------------------------------------------- normal form

struct TransformStep {
  enum class Kind {
    kScaleY,          // y_old = value * y_new
    kShiftY,          // y_old = y_new + value
    kDivideEquation,  // equation /= value
  };
  Kind kind;
  RatFunc value;
  std::string reason;
};

struct TransformLog {
  std::vector<TransformStep> steps;
};

std::string_view step_kind_name(TransformStep::Kind kind);

// coeff2 y^2 + coeff1 y + coeff0, coefficients in k(x).
struct QuadraticInY {
  RatFunc coeff2;
  RatFunc coeff1;
  RatFunc coeff0;

  bool operator==(const QuadraticInY& o) const {
    return coeff2 == o.coeff2 && coeff1 == o.coeff1 && coeff0 == o.coeff0;
  }
};

QuadraticInY raw_equation(const RawASCurve& raw);
// y^2 - y - f
QuadraticInY normal_form_equation(const ASModel& model);
// Applies the logged substitutions to the raw equation in order.
QuadraticInY replay(const RawASCurve& raw, const TransformLog& log);

struct NormalFormResult {
  ASModel model;
  TransformLog log;
};

// Generic case only: b must have deg b = g >= 2 distinct roots in the field.
// Throws WrongCharacteristic, NonGenericB, DegenerateCurve,
// UnsolvableConstant (the constant term needs a root of T^2 + T = c0 that
// the field does not contain), InvalidArgument (a == 0).
NormalFormResult reduce_to_normal_form(const RawASCurve& raw);

// x -> rho + 1/x, y -> y / x^(g+1): moves the root rho of b (deg b = g + 1)
// to infinity. Throws InvalidArgument when b(rho) != 0 or deg c > 2 deg b.
RawASCurve apply_mobius(const RawASCurve& raw, const FieldElem& rho);

// a = 1, b = prod (x - a_i), c = b^2 f.
RawASCurve encode_as_raw(const ASModel& model);

// ------------------------------------------------------- formatting

// "0", "7", "2^4": the char= token of the curve grammar.
std::string char_token(const Field& field);
// "char=7;f=x^5+3*x+1" or "char=2^2;alpha0=1;terms=(0:1),(1:1)".
std::string curve_spec(const CurveModel& model);
// "x + 1/x + 1/(x+1)"
std::string normal_form_string(const ASModel& model);

}  // namespace torelli

#endif  // TORELLI_CURVES_H_
