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

#include <algorithm>
#include <set>

#include "torelli/errors.h"

namespace torelli {
namespace {

void require_char2(const Field& field) {
  if (field->characteristic() != 2) {
    throw Error(ErrorCode::kWrongCharacteristic,
                "Artin-Schreier models need characteristic 2, got " + field->spec());
  }
}

// Distinct elements, drawn without replacement.
std::vector<FieldElem> distinct_elements(const Field& field, int count,
                                         std::mt19937_64& rng) {
  std::vector<FieldElem> out;
  while (static_cast<int>(out.size()) < count) {
    FieldElem e = random_element(field, rng);
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
  }
  return out;
}

ASModel random_as_model(const Field& field, int g, std::mt19937_64& rng) {
  std::vector<FieldElem> points = distinct_elements(field, g, rng);
  std::vector<BranchTerm> branch;
  for (auto& a : points) branch.push_back({std::move(a), random_nonzero(field, rng)});
  return validate_as_model(random_nonzero(field, rng), std::move(branch), g);
}

// Smallest-code root of T^2 + T = c, if any.
std::optional<FieldElem> solve_artin_schreier_constant(const FieldElem& c) {
  const Field& field = c.field();
  for (std::uint64_t code = 0; code < field->order(); ++code) {
    const FieldElem t = field.from_code(code);
    if (t * t + t == c) return t;
  }
  return std::nullopt;
}

}  // namespace

RatFunc ASModel::f() const {
  RatFunc acc(Poly::monomial(alpha0, 1));
  for (const auto& t : branch) {
    acc += RatFunc(Poly::constant(t.residue), Poly::x_minus(t.point));
  }
  return acc;
}

Poly ASModel::branch_poly() const {
  Poly acc = Poly::constant(field.one());
  for (const auto& t : branch) acc *= Poly::x_minus(t.point);
  return acc;
}

OddModel validate_odd_model(const Poly& f, int g) {
  const Field& field = f.field();
  if (field->characteristic() == 2) {
    throw Error(ErrorCode::kWrongCharacteristic,
                "y^2 = f models need characteristic != 2, got " + field->spec());
  }
  if (g < 2) throw Error(ErrorCode::kInvalidArgument, "genus must be >= 2");
  if (f.degree() != 2 * g + 1) {
    throw Error(ErrorCode::kWrongDegree,
                "deg f = " + std::to_string(f.degree()) + ", expected 2g+1 = " +
                    std::to_string(2 * g + 1));
  }
  if (!is_squarefree(f)) {
    throw Error(ErrorCode::kNotSquarefree,
                "f = " + f.to_string() + " has a repeated root (gcd(f, f') = " +
                    poly_gcd(f, formal_derivative(f)).to_string() + ")");
  }
  return OddModel{field, f, g};
}

ASModel validate_as_model(const FieldElem& alpha0, std::vector<BranchTerm> branch, int g) {
  const Field& field = alpha0.field();
  require_char2(field);
  if (g < 2) throw Error(ErrorCode::kInvalidArgument, "genus must be >= 2");
  if (static_cast<int>(branch.size()) != g) {
    throw Error(ErrorCode::kWrongDegree, "expected " + std::to_string(g) +
                                             " branch terms, got " +
                                             std::to_string(branch.size()));
  }
  if (alpha0.is_zero()) {
    throw Error(ErrorCode::kZeroResidue, "alpha0 must be nonzero");
  }
  for (std::size_t i = 0; i < branch.size(); ++i) {
    if (!(branch[i].point.field() == field) || !(branch[i].residue.field() == field)) {
      throw Error(ErrorCode::kCtxMismatch, "branch data over a different field");
    }
    if (branch[i].residue.is_zero()) {
      throw Error(ErrorCode::kZeroResidue,
                  "alpha_" + std::to_string(i + 1) + " is zero");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (branch[i].point == branch[j].point) {
        throw Error(ErrorCode::kDuplicateBranchPoint,
                    "a_" + std::to_string(j + 1) + " = a_" + std::to_string(i + 1) +
                        " = " + branch[i].point.to_string());
      }
    }
  }
  std::sort(branch.begin(), branch.end(), [](const BranchTerm& a, const BranchTerm& b) {
    return a.point.code() < b.point.code();
  });
  return ASModel{field, alpha0, std::move(branch), g};
}

std::uint64_t min_field_order(const Field& field, int g) {
  if (!field->is_finite()) return 0;
  const auto n = static_cast<std::uint64_t>(g);
  return field->characteristic() == 2 ? 2 * n : 4 * n;
}

void require_field_size(const Field& field, int g) {
  const std::uint64_t need = min_field_order(field, g);
  if (field->is_finite() && field->order() < need) {
    throw Error(ErrorCode::kFieldTooSmall,
                field->spec() + " has " + std::to_string(field->order()) +
                    " elements; genus " + std::to_string(g) + " needs at least " +
                    std::to_string(need));
  }
}

RamificationData ramification_data(const ASModel& model) {
  RamificationData out{{}, 0};
  for (const auto& t : model.branch) out.points.push_back({t.point, 2});
  out.points.push_back({std::nullopt, 2});
  for (const auto& p : out.points) out.total += p.order;
  return out;
}

int curve_genus(const CurveModel& model) {
  return std::visit([](const auto& m) { return m.genus; }, model);
}

const Field& curve_field(const CurveModel& model) {
  return std::visit([](const auto& m) -> const Field& { return m.field; }, model);
}

FieldElem random_element(const Field& field, std::mt19937_64& rng) {
  if (field->is_finite()) return field.from_code(rng() % field->order());
  const auto num = static_cast<long>(rng() % 41) - 20;
  const auto den = static_cast<long>(rng() % 5) + 1;
  return field.from_rational(mpq_class(num, den));
}

FieldElem random_nonzero(const Field& field, std::mt19937_64& rng) {
  for (;;) {
    FieldElem e = random_element(field, rng);
    if (!e.is_zero()) return e;
  }
}

CurveModel random_curve(const Field& field, int g, std::uint64_t seed) {
  if (g < 2) throw Error(ErrorCode::kInvalidArgument, "genus must be >= 2");
  require_field_size(field, g);
  std::mt19937_64 rng(seed);
  if (field->characteristic() == 2) return random_as_model(field, g, rng);
  for (;;) {
    std::vector<FieldElem> coeffs;
    for (int i = 0; i < 2 * g + 1; ++i) coeffs.push_back(random_element(field, rng));
    coeffs.push_back(random_nonzero(field, rng));
    Poly f(field, std::move(coeffs));
    if (is_squarefree(f)) return validate_odd_model(f, g);
  }
}

RawASCurve random_raw_as_curve(const Field& field, int g, std::uint64_t seed) {
  require_char2(field);
  if (g < 2) throw Error(ErrorCode::kInvalidArgument, "genus must be >= 2");
  require_field_size(field, g);
  std::mt19937_64 rng(seed);
  const ASModel model = random_as_model(field, g, rng);
  RatFunc shift(Poly(field, {random_element(field, rng), random_element(field, rng)}));
  for (const auto& t : model.branch) {
    shift += RatFunc(Poly::constant(random_element(field, rng)), Poly::x_minus(t.point));
  }
  const FieldElem a = random_nonzero(field, rng);
  const Poly b = model.branch_poly();
  const RatFunc rhs = model.f() + shift * shift + shift;
  const RatFunc c = RatFunc(b * b) * rhs;
  if (!c.is_polynomial()) {
    throw Error(ErrorCode::kInvalidArgument, "internal: c is not a polynomial");
  }
  return RawASCurve{field, a, b.scale(sqrt_char2(a)), c.num()};
}

// ------------------------------------------------------- normal form

std::string_view step_kind_name(TransformStep::Kind kind) {
  switch (kind) {
    case TransformStep::Kind::kScaleY: return "scale_y";
    case TransformStep::Kind::kShiftY: return "shift_y";
    case TransformStep::Kind::kDivideEquation: return "divide_equation";
  }
  return "";
}

QuadraticInY raw_equation(const RawASCurve& raw) {
  return {RatFunc(Poly::constant(raw.a)), RatFunc(raw.b), RatFunc(raw.c)};
}

QuadraticInY normal_form_equation(const ASModel& model) {
  const Field& k = model.field;
  return {RatFunc(Poly::constant(k.one())), RatFunc(Poly::constant(-k.one())), -model.f()};
}

QuadraticInY replay(const RawASCurve& raw, const TransformLog& log) {
  QuadraticInY eq = raw_equation(raw);
  const RatFunc two(Poly::constant(raw.field.from_int(2)));
  for (const auto& step : log.steps) {
    const RatFunc& u = step.value;
    switch (step.kind) {
      case TransformStep::Kind::kScaleY:
        eq = {eq.coeff2 * u * u, eq.coeff1 * u, eq.coeff0};
        break;
      case TransformStep::Kind::kShiftY:
        eq = {eq.coeff2, two * eq.coeff2 * u + eq.coeff1,
              eq.coeff2 * u * u + eq.coeff1 * u + eq.coeff0};
        break;
      case TransformStep::Kind::kDivideEquation:
        eq = {eq.coeff2 / u, eq.coeff1 / u, eq.coeff0 / u};
        break;
    }
  }
  return eq;
}

NormalFormResult reduce_to_normal_form(const RawASCurve& raw) {
  const Field& k = raw.field;
  require_char2(k);
  if (raw.a.is_zero()) throw Error(ErrorCode::kInvalidArgument, "a must be nonzero");
  if (raw.b.degree() < 2) {
    throw Error(ErrorCode::kNonGenericB,
                "b = " + raw.b.to_string() + " needs degree g >= 2");
  }
  std::vector<RootMultiplicity> roots;
  try {
    roots = split_roots(raw.b);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNonSplitDenominator) throw;
    throw Error(ErrorCode::kNonGenericB, "b does not split: " + std::string(e.what()));
  }
  for (const auto& r : roots) {
    if (r.multiplicity > 1) {
      throw Error(ErrorCode::kNonGenericB,
                  "b has the repeated root " + r.root.to_string() + " (multiplicity " +
                      std::to_string(r.multiplicity) + ")");
    }
  }
  const int g = raw.b.degree();
  TransformLog log;

  // a y^2 + b y + c  ->  y^2 + b1 y + c with b1 = b / sqrt(a).
  const FieldElem inv_root_a = sqrt_char2(raw.a).inverse();
  log.steps.push_back({TransformStep::Kind::kScaleY, RatFunc(Poly::constant(inv_root_a)),
                       "y -> y/sqrt(a)"});
  const Poly b1 = raw.b.scale(inv_root_a);

  // y -> b1 y, divide by b1^2:  y^2 + y + c/b1^2.
  log.steps.push_back({TransformStep::Kind::kScaleY, RatFunc(b1), "y -> b y"});
  log.steps.push_back({TransformStep::Kind::kDivideEquation, RatFunc(b1 * b1), "divide by b^2"});
  RatFunc rhs(raw.c, b1 * b1);

  auto shift = [&](const RatFunc& u, std::string reason) {
    log.steps.push_back({TransformStep::Kind::kShiftY, u, std::move(reason)});
    rhs += u * u + u;
  };

  // Double poles: p/(x-a)^2 is cancelled by y -> y + sqrt(p)/(x-a), which
  // leaves sqrt(p)/(x-a) behind.
  for (const auto& term : partial_fractions(rhs).terms) {
    if (term.multiplicity != 2) continue;
    shift(RatFunc(Poly::constant(sqrt_char2(term.numerator)), Poly::x_minus(term.root)),
          "cancel double pole at x = " + term.root.to_string());
  }

  // Even powers at infinity: c x^(2m) is cancelled by y -> y + sqrt(c) x^m.
  for (;;) {
    const Poly poly_part = rhs.num().quo(rhs.den());
    const int d = poly_part.degree();
    if (d < 2) break;
    if (d % 2 == 1) {
      throw Error(ErrorCode::kDegenerateCurve,
                  "pole of odd order " + std::to_string(d) + " at infinity");
    }
    shift(RatFunc(Poly::monomial(sqrt_char2(poly_part.lead()), d / 2)),
          "cancel x^" + std::to_string(d) + " term");
  }

  const FieldElem c0 = rhs.num().quo(rhs.den()).coeff(0);
  if (!c0.is_zero()) {
    const auto t = solve_artin_schreier_constant(c0);
    if (!t) {
      throw Error(ErrorCode::kUnsolvableConstant,
                  "T^2 + T = " + c0.to_string() + " has no root in " + k->spec());
    }
    shift(RatFunc(Poly::constant(*t)), "cancel constant term");
  }

  const PartialFraction pf = partial_fractions(rhs);
  const FieldElem alpha0 = pf.poly_part.coeff(1);
  if (alpha0.is_zero()) {
    throw Error(ErrorCode::kDegenerateCurve, "alpha0 = 0: infinity is not a branch point");
  }
  std::vector<BranchTerm> branch;
  for (const auto& r : roots) {
    FieldElem residue = k.zero();
    for (const auto& term : pf.terms) {
      if (term.root == r.root && term.multiplicity == 1) residue = term.numerator;
    }
    if (residue.is_zero()) {
      throw Error(ErrorCode::kDegenerateCurve,
                  "residue at x = " + r.root.to_string() + " vanishes after reduction");
    }
    branch.push_back({r.root, residue});
  }
  return {validate_as_model(alpha0, std::move(branch), g), std::move(log)};
}

RawASCurve apply_mobius(const RawASCurve& raw, const FieldElem& rho) {
  require_char2(raw.field);
  const int n = raw.b.degree();
  if (n < 1 || !raw.b.eval(rho).is_zero()) {
    throw Error(ErrorCode::kInvalidArgument,
                rho.to_string() + " is not a root of b = " + raw.b.to_string());
  }
  if (raw.c.degree() > 2 * n) {
    throw Error(ErrorCode::kInvalidArgument,
                "deg c = " + std::to_string(raw.c.degree()) + " exceeds 2 deg b = " +
                    std::to_string(2 * n));
  }
  return RawASCurve{raw.field, raw.a, raw.b.taylor_shift(rho).reversed(n),
                    raw.c.taylor_shift(rho).reversed(2 * n)};
}

RawASCurve encode_as_raw(const ASModel& model) {
  const Poly b = model.branch_poly();
  const RatFunc c = RatFunc(b * b) * model.f();
  return RawASCurve{model.field, model.field.one(), b, c.num()};
}

// ------------------------------------------------------- formatting

std::string char_token(const Field& field) {
  if (field->kind() == FieldCtx::Kind::kExtension) {
    return std::to_string(field->characteristic()) + "^" + std::to_string(field->degree());
  }
  return std::to_string(field->characteristic());
}

std::string curve_spec(const CurveModel& model) {
  if (const auto* odd = std::get_if<OddModel>(&model)) {
    return "char=" + char_token(odd->field) + ";f=" + odd->f.to_string();
  }
  const auto& as = std::get<ASModel>(model);
  std::string out = "char=" + char_token(as.field) + ";alpha0=" + as.alpha0.to_string() +
                    ";terms=";
  for (std::size_t i = 0; i < as.branch.size(); ++i) {
    if (i > 0) out += ",";
    out += "(" + as.branch[i].point.to_string() + ":" + as.branch[i].residue.to_string() + ")";
  }
  return out;
}

std::string normal_form_string(const ASModel& model) {
  auto coefficient = [](const FieldElem& c) {
    return c.is_compound() ? "(" + c.to_string() + ")" : c.to_string();
  };
  std::string out = model.alpha0.is_one() ? "x" : coefficient(model.alpha0) + "*x";
  for (const auto& t : model.branch) {
    const Poly lin = Poly::x_minus(t.point);
    const std::string den = lin.is_compound() ? "(" + lin.to_string() + ")" : lin.to_string();
    out += " + " + coefficient(t.residue) + "/" + den;
  }
  return out;
}

}  // namespace torelli
