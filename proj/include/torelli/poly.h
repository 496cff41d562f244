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

// Dense univariate polynomials and reduced rational functions over a Field.

#ifndef TORELLI_POLY_H_
#define TORELLI_POLY_H_

#include <string>
#include <utility>
#include <vector>

#include "torelli/field.h"

namespace torelli {

class Poly {
 public:
  explicit Poly(Field field);
  // Coefficients constant term first; trailing zeros are dropped.
  Poly(Field field, std::vector<FieldElem> coeffs);

  static Poly constant(const FieldElem& c);
  static Poly monomial(const FieldElem& c, int n);
  static Poly x(const Field& field);
  // x - a
  static Poly x_minus(const FieldElem& a);

  const Field& field() const { return field_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }
  // Zero beyond the degree.
  FieldElem coeff(int i) const;
  // Throws InvalidArgument on the zero polynomial.
  FieldElem lead() const;

  Poly operator+(const Poly& b) const;
  Poly operator-(const Poly& b) const;
  Poly operator*(const Poly& b) const;
  Poly operator-() const;
  Poly scale(const FieldElem& c) const;
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  // Euclidean division; throws DivideByZero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly quo(const Poly& d) const { return divmod(d).first; }
  Poly rem(const Poly& d) const { return divmod(d).second; }
  bool divides(const Poly& b) const { return b.rem(*this).is_zero(); }

  FieldElem eval(const FieldElem& at) const;
  // Scaled to leading coefficient 1; zero stays zero.
  Poly monic() const;
  Poly pow(unsigned e) const;
  // p(x + r)
  Poly taylor_shift(const FieldElem& r) const;
  // x^n p(1/x); requires n >= degree().
  Poly reversed(int n) const;

  bool operator==(const Poly& b) const;
  bool operator!=(const Poly& b) const { return !(*this == b); }

  // Compact form, e.g. "x^5+3*x+1", "(t+1)*x^2+t".
  std::string to_string() const;
  // More than one nonzero term, or a compound single coefficient.
  bool is_compound() const;

 private:
  void trim();

  Field field_;
  std::vector<FieldElem> coeffs_;
};

// Monic gcd by Euclid. Throws BothZero.
Poly poly_gcd(const Poly& a, const Poly& b);
// Monic lcm of nonzero polynomials.
Poly poly_lcm(const Poly& a, const Poly& b);
// Coefficientwise derivative in the field's characteristic.
Poly formal_derivative(const Poly& a);
bool is_squarefree(const Poly& a);

// num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  explicit RatFunc(Field field);
  explicit RatFunc(Poly num);
  // Throws DivideByZero when den is zero.
  RatFunc(Poly num, Poly den);

  const Field& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator+(const RatFunc& b) const;
  RatFunc operator-(const RatFunc& b) const;
  RatFunc operator*(const RatFunc& b) const;
  // Throws DivideByZero.
  RatFunc operator/(const RatFunc& b) const;
  RatFunc operator-() const;
  RatFunc scale(const FieldElem& c) const;
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

  bool operator==(const RatFunc& b) const {
    return num_ == b.num_ && den_ == b.den_;
  }
  bool operator!=(const RatFunc& b) const { return !(*this == b); }

  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

enum class RatOp { kAdd, kSub, kMul, kDiv };

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, RatOp op);
// Quotient rule.
RatFunc formal_derivative(const RatFunc& r);

struct RootMultiplicity {
  FieldElem root;
  int multiplicity;
};

// Roots of a nonzero polynomial that splits into linear factors over its
// field, in ascending element order (finite fields) or ascending value (Q).
// Throws NonSplitDenominator naming the residual factor otherwise.
std::vector<RootMultiplicity> split_roots(const Poly& p);

struct PartialFractionTerm {
  FieldElem root;
  int multiplicity;
  FieldElem numerator;  // numerator / (x - root)^multiplicity
};

struct PartialFraction {
  Poly poly_part;
  // Grouped by root in split_roots order, multiplicity descending; terms
  // with a zero numerator are omitted.
  std::vector<PartialFractionTerm> terms;

  RatFunc recombine() const;
  // e.g. "x + 1/x^2 + 1/(x+1)"
  std::string to_string() const;
};

// Throws NonSplitDenominator.
PartialFraction partial_fractions(const RatFunc& r);

}  // namespace torelli

#endif  // TORELLI_POLY_H_
