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

#include "torelli/tangent.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "torelli/errors.h"

namespace torelli {
namespace {

// Numerators of a section's parts are written over `den`, `width` slots each.
struct Frame {
  Poly den;
  int width;
};

Frame omega_frame(const CurveModel& model) {
  if (const auto* odd = std::get_if<OddModel>(&model)) {
    const Poly den = odd->f.monic();
    return {den, den.degree() + 1};
  }
  const Poly den = std::get<ASModel>(model).branch_poly();
  return {den, den.degree() + 1};
}

Frame omega2_frame(const CurveModel& model) {
  if (const auto* odd = std::get_if<OddModel>(&model)) {
    const Poly den = odd->f.monic();
    return {den, den.degree() + 1};
  }
  const Poly b = std::get<ASModel>(model).branch_poly();
  const Poly den = b * b;
  return {den, den.degree() + 1};
}

void append_numerator(Vec& out, const RatFunc& part, const Frame& frame) {
  const Field& k = frame.den.field();
  if (part.is_zero()) {
    out.insert(out.end(), static_cast<std::size_t>(frame.width), k.zero());
    return;
  }
  const auto [cofactor, rem] = frame.den.divmod(part.den());
  if (!rem.is_zero()) {
    throw Error(ErrorCode::kDenominatorOverflow,
                "denominator " + part.den().to_string() + " does not divide " +
                    frame.den.to_string());
  }
  const Poly num = part.num() * cofactor;
  if (num.degree() >= frame.width) {
    throw Error(ErrorCode::kDenominatorOverflow,
                "numerator " + num.to_string() + " exceeds the coordinate frame");
  }
  for (int i = 0; i < frame.width; ++i) out.push_back(num.coeff(i));
}

Vec frame_coordinates(const Section& s, const Frame& frame) {
  Vec out;
  out.reserve(2 * static_cast<std::size_t>(frame.width));
  append_numerator(out, s.elem.even(), frame);
  append_numerator(out, s.elem.odd(), frame);
  return out;
}

void check_branch_denominator(const RatFunc& r, const Poly& branch) {
  Poly d = r.den();
  while (d.degree() > 0) {
    const Poly g = poly_gcd(d, branch);
    if (g.degree() == 0) {
      throw Error(ErrorCode::kPoleAtBranch,
                  "factor " + d.to_string() + " of the denominator is off the branch locus");
    }
    d = d.quo(g);
  }
}

Section zero_section(const std::shared_ptr<const FunctionField>& ff, int dx_power) {
  return {FFElem(ff, RatFunc(ff->field), RatFunc(ff->field)), dx_power};
}

Matrix perturbed(const Matrix& m, std::mt19937_64& rng) {
  std::vector<std::size_t> rows(m.rows()), cols(m.cols());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  std::shuffle(rows.begin(), rows.end(), rng);
  std::shuffle(cols.begin(), cols.end(), rng);
  Matrix out(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const FieldElem scale = random_nonzero(m.field(), rng);
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(rows[r], cols[c]) * scale;
  }
  return out;
}

}  // namespace

std::shared_ptr<const FunctionField> make_function_field(const CurveModel& model) {
  if (const auto* odd = std::get_if<OddModel>(&model)) {
    return std::make_shared<const FunctionField>(
        FunctionField{odd->field, RatFunc(odd->f), false, odd->f});
  }
  const auto& as = std::get<ASModel>(model);
  return std::make_shared<const FunctionField>(
      FunctionField{as.field, as.f(), true, as.branch_poly()});
}

// ------------------------------------------------------------------ FFElem

FFElem::FFElem(std::shared_ptr<const FunctionField> ff, RatFunc even, RatFunc odd)
    : ff_(std::move(ff)), even_(std::move(even)), odd_(std::move(odd)) {}

FFElem FFElem::from_x(std::shared_ptr<const FunctionField> ff, RatFunc even) {
  const Field k = ff->field;
  return FFElem(std::move(ff), std::move(even), RatFunc(k));
}

FFElem FFElem::y(std::shared_ptr<const FunctionField> ff) {
  const Field k = ff->field;
  return FFElem(std::move(ff), RatFunc(k), RatFunc(Poly::constant(k.one())));
}

void FFElem::check_same(const FFElem& b) const {
  if (ff_ != b.ff_ && !(*ff_ == *b.ff_)) {
    throw Error(ErrorCode::kModelMismatch, "elements of different function fields");
  }
}

FFElem FFElem::operator+(const FFElem& b) const {
  check_same(b);
  return FFElem(ff_, even_ + b.even_, odd_ + b.odd_);
}

FFElem FFElem::operator-(const FFElem& b) const {
  check_same(b);
  return FFElem(ff_, even_ - b.even_, odd_ - b.odd_);
}

FFElem FFElem::operator-() const { return FFElem(ff_, -even_, -odd_); }

FFElem FFElem::operator*(const FFElem& b) const {
  check_same(b);
  const RatFunc oo = odd_ * b.odd_;
  RatFunc even = even_ * b.even_ + oo * ff_->f;
  RatFunc odd = even_ * b.odd_ + b.even_ * odd_;
  if (ff_->artin_schreier) odd += oo;
  return FFElem(ff_, std::move(even), std::move(odd));
}

FFElem FFElem::scale(const FieldElem& c) const {
  return FFElem(ff_, even_.scale(c), odd_.scale(c));
}

bool FFElem::operator==(const FFElem& b) const {
  return (ff_ == b.ff_ || *ff_ == *b.ff_) && even_ == b.even_ && odd_ == b.odd_;
}

std::string FFElem::to_string() const {
  if (odd_.is_zero()) return even_.to_string();
  std::string odd = odd_.to_string();
  if (odd_.num().is_compound() && odd_.is_polynomial()) odd = "(" + odd + ")";
  const std::string y_term = odd == "1" ? "y" : odd + "*y";
  if (even_.is_zero()) return y_term;
  return even_.to_string() + " + " + y_term;
}

FFElem ff_mul(const FFElem& a, const FFElem& b) { return a * b; }

Section Section::operator+(const Section& b) const {
  if (dx_power != b.dx_power) {
    throw Error(ErrorCode::kInvalidArgument, "adding sections of different dx powers");
  }
  return {elem + b.elem, dx_power};
}

Section ff_differential(const FFElem& a) {
  const auto& ff = a.function_field();
  const RatFunc df = formal_derivative(ff->f);
  RatFunc even = formal_derivative(a.even());
  RatFunc odd = formal_derivative(a.odd());
  if (!a.odd().is_zero()) {
    if (ff->artin_schreier) {
      // (2y - 1) y' = f' and 2 = 0.
      even -= a.odd() * df;
    } else {
      const RatFunc two_f = ff->f.scale(ff->field.from_int(2));
      odd += a.odd() * df / two_f;
    }
  }
  check_branch_denominator(even, ff->branch_poly);
  check_branch_denominator(odd, ff->branch_poly);
  return {FFElem(ff, std::move(even), std::move(odd)), 1};
}

Section differentiate_coefficient(const Section& s) {
  return {ff_differential(s.elem).elem, s.dx_power + 1};
}

std::string_view space_label_name(SpaceLabel label) {
  switch (label) {
    case SpaceLabel::kH0L: return "H0_L";
    case SpaceLabel::kH0Omega: return "H0_omega";
    case SpaceLabel::kH0OmegaLdual: return "H0_omega_Ldual";
    case SpaceLabel::kH0Omega2Ambient: return "H0_omega2_ambient";
  }
  return "";
}

// ------------------------------------------------------------------ bases

SpaceBasis basis_H0_omega(const CurveModel& model) {
  const auto ff = make_function_field(model);
  const Field& k = ff->field;
  SpaceBasis basis{SpaceLabel::kH0Omega, {}, {}};
  if (const auto* odd = std::get_if<OddModel>(&model)) {
    // x^i dx / y = (x^i / f) y dx
    for (int i = 0; i < odd->genus; ++i) {
      basis.sections.push_back(
          {FFElem(ff, RatFunc(k), RatFunc(Poly::monomial(k.one(), i), odd->f)), 1});
      basis.names.push_back(i == 0 ? "dx/y" : "x^" + std::to_string(i) + " dx/y");
    }
    return basis;
  }
  const auto& as = std::get<ASModel>(model);
  for (std::size_t i = 0; i < as.branch.size(); ++i) {
    basis.sections.push_back(
        {FFElem::from_x(ff, RatFunc(Poly::constant(k.one()), Poly::x_minus(as.branch[i].point))),
         1});
    basis.names.push_back("dx/(x-a" + std::to_string(i + 1) + ")");
  }
  return basis;
}

LBases basis_H0_L_and_omega_Ldual(const CurveModel& model) {
  const auto ff = make_function_field(model);
  const Field& k = ff->field;
  LBases out{{SpaceLabel::kH0L, {}, {}}, {SpaceLabel::kH0OmegaLdual, {}, {}}};
  out.h0_l.sections.push_back({FFElem::from_x(ff, RatFunc(Poly::constant(k.one()))), 0});
  out.h0_l.names.push_back("1");
  if (const auto* odd = std::get_if<OddModel>(&model)) {
    out.h0_l.sections.push_back({FFElem::from_x(ff, RatFunc(Poly::x(k))), 0});
    out.h0_l.names.push_back("x");
    for (int j = 0; j + 2 <= odd->genus; ++j) {
      out.h0_omega_ldual.sections.push_back(
          {FFElem(ff, RatFunc(k), RatFunc(Poly::monomial(k.one(), j), odd->f)), 1});
      out.h0_omega_ldual.names.push_back(j == 0 ? "dx/y" : "x^" + std::to_string(j) + " dx/y");
    }
    return out;
  }
  const auto& as = std::get<ASModel>(model);
  const Poly first = Poly::x_minus(as.branch[0].point);
  out.h0_l.sections.push_back({FFElem::from_x(ff, RatFunc(first)), 0});
  out.h0_l.names.push_back("x-a1");
  for (std::size_t i = 1; i < as.branch.size(); ++i) {
    out.h0_omega_ldual.sections.push_back(
        {FFElem::from_x(ff, RatFunc(Poly::constant(k.one()),
                                    first * Poly::x_minus(as.branch[i].point))),
         1});
    out.h0_omega_ldual.names.push_back("dx/((x-a1)(x-a" + std::to_string(i + 1) + "))");
  }
  return out;
}

// ------------------------------------------------------------ coordinates

LinMap coordinatize_omega2(const CurveModel& model, const std::vector<Section>& sections) {
  const Frame frame = omega2_frame(model);
  Matrix m(frame.den.field(), 0, 2 * static_cast<std::size_t>(frame.width));
  for (const auto& s : sections) {
    if (s.dx_power != 2) {
      throw Error(ErrorCode::kInvalidArgument, "quadratic differentials need dx power 2");
    }
    m.append_row(frame_coordinates(s, frame));
  }
  return {{}, std::string(space_label_name(SpaceLabel::kH0Omega2Ambient)), std::move(m)};
}

Matrix omega_coordinates(const CurveModel& model, const std::vector<Section>& sections) {
  const Frame frame = omega_frame(model);
  const SpaceBasis basis = basis_H0_omega(model);
  const Field& k = frame.den.field();
  Matrix basis_rows(k, 0, 2 * static_cast<std::size_t>(frame.width));
  for (const auto& s : basis.sections) basis_rows.append_row(frame_coordinates(s, frame));
  Matrix out(k, 0, basis.dim());
  for (const auto& s : sections) {
    if (s.dx_power != 1) {
      throw Error(ErrorCode::kInvalidArgument, "differentials need dx power 1");
    }
    auto coords = solve_left(basis_rows, frame_coordinates(s, frame));
    if (!coords) {
      throw Error(ErrorCode::kNotInSpan, s.elem.to_string() + " dx is not in H0(omega)");
    }
    out.append_row(*coords);
  }
  return out;
}

// ------------------------------------------------------------------- maps

LinMap mult_map(const CurveModel& model) {
  const SpaceBasis omega = basis_H0_omega(model);
  std::vector<Section> products;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < omega.dim(); ++i) {
    for (std::size_t j = i; j < omega.dim(); ++j) {
      products.push_back(omega.sections[i] * omega.sections[j]);
      labels.push_back("(" + omega.names[i] + ")*(" + omega.names[j] + ")");
    }
  }
  LinMap out = coordinatize_omega2(model, products);
  out.domain_labels = std::move(labels);
  return out;
}

LinMap mu0_map(const CurveModel& model) {
  const LBases b = basis_H0_L_and_omega_Ldual(model);
  std::vector<Section> products;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < b.h0_l.dim(); ++a) {
    for (std::size_t s = 0; s < b.h0_omega_ldual.dim(); ++s) {
      products.push_back(b.h0_l.sections[a] * b.h0_omega_ldual.sections[s]);
      labels.push_back(b.h0_l.names[a] + " (x) " + b.h0_omega_ldual.names[s]);
    }
  }
  return {std::move(labels), std::string(space_label_name(SpaceLabel::kH0Omega)),
          omega_coordinates(model, products)};
}

std::vector<Vec> kernel_mu0(const CurveModel& model) {
  return left_null_space(mu0_map(model).matrix);
}

namespace {

// Shared driver for the two routes of mu1 on kernel vectors.
LinMap mu1_rows(const CurveModel& model, const std::vector<Vec>& ker_basis, bool leibniz) {
  const LBases b = basis_H0_L_and_omega_Ldual(model);
  const Matrix mu0 = mu0_map(model).matrix;
  const std::size_t inner = b.h0_omega_ldual.dim();
  const auto ff = make_function_field(model);
  std::vector<Section> images;
  for (std::size_t v = 0; v < ker_basis.size(); ++v) {
    const Vec& vec = ker_basis[v];
    const Vec image = mu0.left_multiply(vec);
    if (std::any_of(image.begin(), image.end(), [](const FieldElem& e) { return !e.is_zero(); })) {
      throw Error(ErrorCode::kNotInKernel,
                  "vector " + std::to_string(v) + " is not in ker mu0");
    }
    Section acc = zero_section(ff, 2);
    for (std::size_t idx = 0; idx < vec.size(); ++idx) {
      if (vec[idx].is_zero()) continue;
      const Section& r = b.h0_l.sections[idx / inner];
      const Section& s = b.h0_omega_ldual.sections[idx % inner];
      if (leibniz) {
        acc = acc + (r * differentiate_coefficient(s)).scale(-vec[idx]);
      } else {
        acc = acc + (ff_differential(r.elem) * s).scale(vec[idx]);
      }
    }
    images.push_back(std::move(acc));
  }
  LinMap out = coordinatize_omega2(model, images);
  for (std::size_t v = 0; v < ker_basis.size(); ++v) {
    out.domain_labels.push_back("k" + std::to_string(v + 1));
  }
  return out;
}

}  // namespace

LinMap mu1_image(const CurveModel& model, const std::vector<Vec>& ker_basis) {
  return mu1_rows(model, ker_basis, false);
}

LinMap mu1_image_leibniz(const CurveModel& model, const std::vector<Vec>& ker_basis) {
  return mu1_rows(model, ker_basis, true);
}

// ----------------------------------------------------------------- report

bool RankChecks::all() const {
  return coker_mu0_zero && kernel_verified && mu1_sign_identity && rank_invariant &&
         containment.value_or(true) && parity_additive.value_or(true);
}

RankDims expected_dims(int g, bool char2) {
  if (char2) return {2 * g - 1, g - 2, g - 2, 2 * g - 1, g - 2};
  return {2 * g - 1, g - 2, g - 2, 3 * g - 3, 0};
}

RankReport rank_report(const CurveModel& model, std::uint64_t audit_seed) {
  const Field& k = curve_field(model);
  const int g = curve_genus(model);
  const bool char2 = k->characteristic() == 2;

  RankReport report;
  report.genus = g;
  report.characteristic = std::to_string(k->characteristic());
  report.field = k->spec();
  report.expected = expected_dims(g, char2);

  const LinMap mult = mult_map(model);
  const LinMap mu0 = mu0_map(model);
  const std::vector<Vec> ker = left_null_space(mu0.matrix);
  const LinMap mu1 = mu1_image(model, ker);
  const Matrix combined = mult.matrix.stacked(mu1.matrix);

  report.observed.mult_rank = static_cast<int>(rank(mult.matrix));
  report.observed.ker_mu0_dim = static_cast<int>(ker.size());
  report.observed.im_mu1_dim = static_cast<int>(rank(mu1.matrix));
  report.observed.combined_rank = static_cast<int>(rank(combined));
  report.observed.cokernel_dim = (3 * g - 3) - report.observed.combined_rank;
  const int mu0_rank = static_cast<int>(rank(mu0.matrix));
  report.coker_mu0_dim = g - mu0_rank;

  RankChecks& checks = report.checks;
  checks.coker_mu0_zero = report.coker_mu0_dim == 0;
  checks.kernel_verified = std::all_of(ker.begin(), ker.end(), [&](const Vec& v) {
    const Vec image = mu0.matrix.left_multiply(v);
    return std::all_of(image.begin(), image.end(), [](const FieldElem& e) { return e.is_zero(); });
  });
  checks.mu1_sign_identity = mu1_image_leibniz(model, ker).matrix == mu1.matrix;

  std::mt19937_64 rng(audit_seed);
  checks.rank_invariant = true;
  for (const Matrix* m : {&mult.matrix, &mu0.matrix, &mu1.matrix, &combined}) {
    if (rank(perturbed(*m, rng).transpose()) != rank(*m)) checks.rank_invariant = false;
  }

  if (char2) {
    checks.containment = true;
    for (std::size_t r = 0; r < mu1.matrix.rows(); ++r) {
      if (!in_row_span(mult.matrix, mu1.matrix.row(r))) checks.containment = false;
    }
  } else {
    const std::size_t half = combined.cols() / 2;
    const Matrix even = combined.column_slice(0, half);
    const Matrix odd = combined.column_slice(half, combined.cols());
    checks.parity_additive =
        mult.matrix.column_slice(half, combined.cols()).is_zero() &&
        mu1.matrix.column_slice(0, half).is_zero() &&
        static_cast<int>(rank(even) + rank(odd)) == report.observed.combined_rank;
  }

  report.pass = report.observed == report.expected;
  return report;
}

}  // namespace torelli
