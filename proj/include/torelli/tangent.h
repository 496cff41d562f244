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

// Function-field arithmetic on a hyperelliptic curve and the linear maps
//
//   mult : Sym^2 H0(w) -> H0(w^2)
//   mu0  : H0(L) (x) H0(w (x) L^-1) -> H0(w)
//   mu1  : ker mu0 -> H0(w^2),   r (x) s |-> dr . s
//
// realized as exact matrices, plus the rank report for the composition
// Sym^2 H0(w) -> H0(w^2) -> H0(w^2) / im mu1.
//
// Elements of the function field are e + o y with e, o in k(x), reduced by
// y^2 = f (odd characteristic) or y^2 = y + f (characteristic 2). A Section
// is such an element times (dx)^m.

#ifndef TORELLI_TANGENT_H_
#define TORELLI_TANGENT_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "torelli/curves.h"
#include "torelli/linalg.h"
#include "torelli/poly.h"

namespace torelli {

// k(x)[y] / (y^2 - s y - f) with s = 0 (OddModel) or s = 1 (ASModel).
struct FunctionField {
  Field field;
  RatFunc f;
  bool artin_schreier;
  // Product of the finite branch locus: f itself, or prod (x - a_i).
  Poly branch_poly;

  bool operator==(const FunctionField& o) const {
    return artin_schreier == o.artin_schreier && f == o.f;
  }
};

std::shared_ptr<const FunctionField> make_function_field(const CurveModel& model);

class FFElem {
 public:
  FFElem(std::shared_ptr<const FunctionField> ff, RatFunc even, RatFunc odd);
  static FFElem from_x(std::shared_ptr<const FunctionField> ff, RatFunc even);
  static FFElem y(std::shared_ptr<const FunctionField> ff);

  const std::shared_ptr<const FunctionField>& function_field() const { return ff_; }
  const RatFunc& even() const { return even_; }
  const RatFunc& odd() const { return odd_; }
  bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }

  FFElem operator+(const FFElem& b) const;
  FFElem operator-(const FFElem& b) const;
  FFElem operator*(const FFElem& b) const;
  FFElem operator-() const;
  FFElem scale(const FieldElem& c) const;

  bool operator==(const FFElem& b) const;

  std::string to_string() const;

 private:
  void check_same(const FFElem& b) const;

  std::shared_ptr<const FunctionField> ff_;
  RatFunc even_;
  RatFunc odd_;
};

// Throws ModelMismatch.
FFElem ff_mul(const FFElem& a, const FFElem& b);

// elem * (dx)^dx_power
struct Section {
  FFElem elem;
  int dx_power;

  Section operator*(const Section& b) const { return {elem * b.elem, dx_power + b.dx_power}; }
  // Throws InvalidArgument on differing dx powers.
  Section operator+(const Section& b) const;
  Section scale(const FieldElem& c) const { return {elem.scale(c), dx_power}; }
};

// d(e + o y) = (e' + o' y + o y') dx, where y' = f' y / (2f) for y^2 = f and
// y' = -f' for y^2 - y = f. Throws PoleAtBranch if a coefficient acquires a
// pole away from the branch locus.
Section ff_differential(const FFElem& a);
// For s = h (dx)^m, returns dh (dx)^m; used for the Leibniz route of mu1.
Section differentiate_coefficient(const Section& s);

enum class SpaceLabel { kH0L, kH0Omega, kH0OmegaLdual, kH0Omega2Ambient };
std::string_view space_label_name(SpaceLabel label);

struct SpaceBasis {
  SpaceLabel label;
  std::vector<Section> sections;
  std::vector<std::string> names;

  std::size_t dim() const { return sections.size(); }
};

// OddModel: x^i dx / y, i < g.  ASModel: dx / (x - a_i).
SpaceBasis basis_H0_omega(const CurveModel& model);

struct LBases {
  SpaceBasis h0_l;            // {1, x} or {1, x - a_1}
  SpaceBasis h0_omega_ldual;  // x^j dx/y (j <= g-2) or dx/((x-a_1)(x-a_i)), i >= 2
};
LBases basis_H0_L_and_omega_Ldual(const CurveModel& model);

// Rows are images of the domain basis vectors in codomain coordinates.
struct LinMap {
  std::vector<std::string> domain_labels;
  std::string codomain;
  Matrix matrix;
};

// Coordinates of quadratic differentials: the even and odd parts over the
// k(x)-basis {1, y} are written over the common denominator f (OddModel) or
// prod (x - a_i)^2 (ASModel) and their numerator coefficient vectors are
// concatenated [even | odd]. Throws DenominatorOverflow for sections whose
// denominator does not divide it, or whose numerator is too long.
LinMap coordinatize_omega2(const CurveModel& model, const std::vector<Section>& sections);
// Coordinates in basis_H0_omega. Throws NotInSpan, DenominatorOverflow.
Matrix omega_coordinates(const CurveModel& model, const std::vector<Section>& sections);

// g(g+1)/2 rows: w_i w_j for i <= j.
LinMap mult_map(const CurveModel& model);
// 2(g-1) rows: r (x) s for r in H0(L) (outer), s in H0(w (x) L^-1) (inner).
LinMap mu0_map(const CurveModel& model);
// Left null space of the mu0 matrix, leftmost-pivot basis.
std::vector<Vec> kernel_mu0(const CurveModel& model);
// Images sum c (dr) s of kernel vectors. Throws NotInKernel.
LinMap mu1_image(const CurveModel& model, const std::vector<Vec>& ker_basis);
// The Leibniz route: -sum c r (ds), equal to mu1 on the kernel.
LinMap mu1_image_leibniz(const CurveModel& model, const std::vector<Vec>& ker_basis);

struct RankDims {
  int mult_rank = 0;
  int ker_mu0_dim = 0;
  int im_mu1_dim = 0;
  int combined_rank = 0;
  int cokernel_dim = 0;

  bool operator==(const RankDims& o) const = default;
};

// Per-report verifications beyond the five dimensions.
struct RankChecks {
  bool coker_mu0_zero = false;
  bool kernel_verified = false;
  bool mu1_sign_identity = false;
  bool rank_invariant = false;
  // Characteristic 2 only: im mu1 lies in the row span of mult.
  std::optional<bool> containment;
  // Outside characteristic 2: mult even, im mu1 odd, ranks add.
  std::optional<bool> parity_additive;

  bool all() const;
};

struct RankReport {
  int genus = 0;
  std::string characteristic;
  std::string field;
  RankDims observed;
  RankDims expected;
  int coker_mu0_dim = 0;
  RankChecks checks;
  bool pass = false;
};

RankDims expected_dims(int g, bool char2);

// audit_seed drives the random permutations and scalings of the rank
// invariance oracle.
RankReport rank_report(const CurveModel& model, std::uint64_t audit_seed = 0);

}  // namespace torelli

#endif  // TORELLI_TANGENT_H_
