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

#include "torelli/poly.h"

#include <algorithm>
#include <map>

#include "torelli/errors.h"

namespace torelli {
namespace {

void check_same_field(const Field& a, const Field& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::kCtxMismatch, "mixing " + a->spec() + " and " + b->spec());
  }
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  mpz_class m = abs(n);
  if (m > mpz_class("1000000000000")) {
    throw Error(ErrorCode::kInvalidArgument,
                "rational root search: coefficient " + m.get_str() + " too large");
  }
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      if (d * d != m) out.push_back(m / d);
    }
  }
  return out;
}

// Pulls every factor (x - r) out of p; returns the multiplicity.
int strip_root(Poly& p, const FieldElem& r) {
  int mult = 0;
  while (p.degree() > 0 && p.eval(r).is_zero()) {
    p = p.quo(Poly::x_minus(r));
    ++mult;
  }
  return mult;
}

}  // namespace

// -------------------------------------------------------------------- Poly

Poly::Poly(Field field) : field_(std::move(field)) {}

Poly::Poly(Field field, std::vector<FieldElem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) check_same_field(field_, c.field());
  trim();
}

Poly Poly::constant(const FieldElem& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const FieldElem& c, int n) {
  std::vector<FieldElem> v(n + 1, c.field().zero());
  v[n] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::x(const Field& field) { return monomial(field.one(), 1); }

Poly Poly::x_minus(const FieldElem& a) {
  return Poly(a.field(), {-a, a.field().one()});
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElem Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return field_.zero();
  return coeffs_[i];
}

FieldElem Poly::lead() const {
  if (is_zero()) throw Error(ErrorCode::kInvalidArgument, "zero polynomial has no lead");
  return coeffs_.back();
}

Poly Poly::operator+(const Poly& b) const {
  check_same_field(field_, b.field_);
  const std::size_t n = std::max(coeffs_.size(), b.coeffs_.size());
  std::vector<FieldElem> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= coeffs_.size()) {
      out.push_back(b.coeffs_[i]);
    } else if (i >= b.coeffs_.size()) {
      out.push_back(coeffs_[i]);
    } else {
      out.push_back(coeffs_[i] + b.coeffs_[i]);
    }
  }
  return Poly(field_, std::move(out));
}

Poly Poly::operator-() const {
  std::vector<FieldElem> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(-c);
  return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& b) const { return *this + (-b); }

Poly Poly::operator*(const Poly& b) const {
  check_same_field(field_, b.field_);
  if (is_zero() || b.is_zero()) return Poly(field_);
  std::vector<FieldElem> out(coeffs_.size() + b.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(field_, std::move(out));
}

Poly Poly::scale(const FieldElem& c) const {
  std::vector<FieldElem> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(a * c);
  return Poly(field_, std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  check_same_field(field_, d.field_);
  if (d.is_zero()) throw Error(ErrorCode::kDivideByZero, "polynomial division by zero");
  if (degree() < d.degree()) return {Poly(field_), *this};
  std::vector<FieldElem> r = coeffs_;
  std::vector<FieldElem> q(degree() - d.degree() + 1, field_.zero());
  const FieldElem inv_lead = d.lead().inverse();
  const int dd = d.degree();
  for (int i = degree(); i >= dd; --i) {
    if (r[i].is_zero()) continue;
    const FieldElem c = r[i] * inv_lead;
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] -= c * d.coeffs_[j];
  }
  r.resize(dd, field_.zero());
  return {Poly(field_, std::move(q)), Poly(field_, std::move(r))};
}

FieldElem Poly::eval(const FieldElem& at) const {
  check_same_field(field_, at.field());
  FieldElem acc = field_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(lead().inverse());
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(field_.one());
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::taylor_shift(const FieldElem& r) const {
  // Horner in the shifted variable.
  const Poly shifted_x(field_, {r, field_.one()});
  Poly acc(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * shifted_x + constant(coeffs_[i]);
  }
  return acc;
}

Poly Poly::reversed(int n) const {
  if (n < degree()) {
    throw Error(ErrorCode::kInvalidArgument, "reversal length below degree");
  }
  std::vector<FieldElem> out(n + 1, field_.zero());
  for (int i = 0; i <= degree(); ++i) out[n - i] = coeffs_[i];
  return Poly(field_, std::move(out));
}

bool Poly::operator==(const Poly& b) const {
  return field_ == b.field_ && coeffs_ == b.coeffs_;
}

bool Poly::is_compound() const {
  int terms = 0;
  for (const auto& c : coeffs_) terms += c.is_zero() ? 0 : 1;
  if (terms > 1) return true;
  if (terms == 0) return false;
  const FieldElem& c = coeffs_.back();
  return c.is_compound() ||
         (!field_->is_finite() && c.rational().get_den() != 1 && degree() == 0);
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    FieldElem c = coeffs_[i];
    if (c.is_zero()) continue;
    bool negative = false;
    if (!field_->is_finite() && sgn(c.rational()) < 0) {
      negative = true;
      c = -c;
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    std::string coef;
    if (i == 0 || !c.is_one()) {
      coef = c.to_string();
      if (c.is_compound()) coef = "(" + coef + ")";
    }
    out += coef;
    if (i > 0) {
      if (!coef.empty()) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace {

using ZPoly = std::vector<mpz_class>;

void make_primitive(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  mpz_class c = 0;
  for (const auto& x : p) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
  if (c == 0) return;
  if (p.back() < 0) c = -c;
  for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

ZPoly primitive_integer_part(const Poly& a) {
  mpz_class den = 1;
  for (const auto& c : a.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den().get_mpz_t());
  }
  ZPoly out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    out.push_back(mpq_class(c.rational() * den).get_num());
  }
  make_primitive(out);
  return out;
}

// Primitive remainder sequence keeps coefficient growth in check over Q.
Poly rational_gcd(const Poly& a, const Poly& b) {
  ZPoly u = primitive_integer_part(a);
  ZPoly v = primitive_integer_part(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    ZPoly r = u;
    const mpz_class lv = v.back();
    while (r.size() >= v.size()) {
      const mpz_class lr = r.back();
      const std::size_t shift = r.size() - v.size();
      for (auto& x : r) x *= lv;
      for (std::size_t i = 0; i < v.size(); ++i) r[shift + i] -= lr * v[i];
      while (!r.empty() && r.back() == 0) r.pop_back();
    }
    make_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<FieldElem> coeffs;
  coeffs.reserve(u.size());
  for (const auto& x : u) coeffs.push_back(a.field().from_rational(mpq_class(x)));
  return Poly(a.field(), std::move(coeffs)).monic();
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) {
    throw Error(ErrorCode::kBothZero, "gcd(0, 0) is undefined");
  }
  if (!a.field()->is_finite()) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    return rational_gcd(a, b);
  }
  Poly u = a;
  Poly v = b;
  while (!v.is_zero()) {
    Poly r = u.rem(v);
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  return (a * b).quo(poly_gcd(a, b)).monic();
}

Poly formal_derivative(const Poly& a) {
  if (a.degree() < 1) return Poly(a.field());
  std::vector<FieldElem> out;
  out.reserve(a.degree());
  for (int i = 1; i <= a.degree(); ++i) {
    out.push_back(a.coeffs()[i] * a.field().from_int(i));
  }
  return Poly(a.field(), std::move(out));
}

bool is_squarefree(const Poly& a) {
  if (a.degree() < 1) return true;
  return poly_gcd(a, formal_derivative(a)).degree() == 0;
}

// ----------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Field field)
    : num_(field), den_(Poly::constant(field.one())) {}

RatFunc::RatFunc(Poly num)
    : num_(std::move(num)), den_(Poly::constant(num_.field().one())) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  check_same_field(num_.field(), den_.field());
  if (den_.is_zero()) throw Error(ErrorCode::kDivideByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.field().one());
    return;
  }
  if (den_.degree() > 0) {
    const Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.quo(g);
      den_ = den_.quo(g);
    }
  }
  const FieldElem lc = den_.lead();
  if (!lc.is_one()) {
    const FieldElem inv = lc.inverse();
    num_ = num_.scale(inv);
    den_ = den_.scale(inv);
  }
}

RatFunc RatFunc::operator+(const RatFunc& b) const {
  if (den_ == b.den_) return RatFunc(num_ + b.num_, den_);
  return RatFunc(num_ * b.den_ + b.num_ * den_, den_ * b.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc out(*this);
  out.num_ = -num_;
  return out;
}

RatFunc RatFunc::operator-(const RatFunc& b) const { return *this + (-b); }

RatFunc RatFunc::operator*(const RatFunc& b) const {
  return RatFunc(num_ * b.num_, den_ * b.den_);
}

RatFunc RatFunc::operator/(const RatFunc& b) const {
  if (b.is_zero()) throw Error(ErrorCode::kDivideByZero, "division by zero rational function");
  return RatFunc(num_ * b.den_, den_ * b.num_);
}

RatFunc RatFunc::scale(const FieldElem& c) const {
  if (c.is_zero()) return RatFunc(field());
  RatFunc out(*this);
  out.num_ = num_.scale(c);
  return out;
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.is_compound()) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (den_.is_compound()) d = "(" + d + ")";
  return n + "/" + d;
}

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, RatOp op) {
  switch (op) {
    case RatOp::kAdd: return a + b;
    case RatOp::kSub: return a - b;
    case RatOp::kMul: return a * b;
    case RatOp::kDiv: return a / b;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown op");
}

RatFunc formal_derivative(const RatFunc& r) {
  const Poly& n = r.num();
  const Poly& d = r.den();
  return RatFunc(formal_derivative(n) * d - n * formal_derivative(d), d * d);
}

// ------------------------------------------------------- partial fractions

std::vector<RootMultiplicity> split_roots(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kInvalidArgument, "roots of the zero polynomial");
  const Field& field = p.field();
  Poly rest = p.monic();
  std::vector<RootMultiplicity> out;
  if (field->is_finite()) {
    if (field->order() > (std::uint64_t{1} << 22)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "root search by enumeration needs a field of order <= 2^22");
    }
    for (std::uint64_t c = 0; c < field->order() && rest.degree() > 0; ++c) {
      const FieldElem r = field.from_code(c);
      if (const int m = strip_root(rest, r); m > 0) out.push_back({r, m});
    }
  } else {
    // Rational root theorem on the primitive integer multiple of rest.
    std::map<mpq_class, int> found;
    if (const int m = strip_root(rest, field.zero()); m > 0) found[0] = m;
    if (rest.degree() > 0) {
      mpz_class lcm_den = 1;
      for (const auto& c : rest.coeffs()) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                c.rational().get_den().get_mpz_t());
      }
      const mpz_class a0 = mpq_class(rest.coeffs().front().rational() * lcm_den).get_num();
      const mpz_class an = mpq_class(rest.lead().rational() * lcm_den).get_num();
      for (const auto& u : positive_divisors(a0)) {
        for (const auto& v : positive_divisors(an)) {
          for (int sign : {1, -1}) {
            if (rest.degree() == 0) break;
            const FieldElem r = field.from_rational(mpq_class(sign * u, v));
            if (const int m = strip_root(rest, r); m > 0) found[r.rational()] += m;
          }
        }
      }
    }
    for (const auto& [q, m] : found) out.push_back({field.from_rational(q), m});
  }
  if (rest.degree() > 0) {
    throw Error(ErrorCode::kNonSplitDenominator,
                "residual factor " + rest.to_string() + " has no roots in " +
                    field->spec());
  }
  return out;
}

PartialFraction partial_fractions(const RatFunc& r) {
  auto [poly_part, rem] = r.num().divmod(r.den());
  PartialFraction out{std::move(poly_part), {}};
  if (rem.is_zero()) return out;
  for (const auto& [root, mult] : split_roots(r.den())) {
    // Cover-up at x = root: with den = (x - root)^m h, expand rem/h as a
    // power series in (x - root) to order m.
    const Poly h = r.den().quo(Poly::x_minus(root).pow(mult));
    const Poly num_s = rem.taylor_shift(root);
    const Poly h_s = h.taylor_shift(root);
    const FieldElem h0_inv = h_s.coeff(0).inverse();
    std::vector<FieldElem> series;
    for (int j = 0; j < mult; ++j) {
      FieldElem acc = num_s.coeff(j);
      for (int i = 1; i <= j; ++i) acc -= h_s.coeff(i) * series[j - i];
      series.push_back(acc * h0_inv);
    }
    for (int j = 0; j < mult; ++j) {
      if (series[j].is_zero()) continue;
      out.terms.push_back({root, mult - j, series[j]});
    }
  }
  return out;
}

RatFunc PartialFraction::recombine() const {
  RatFunc acc(poly_part);
  for (const auto& t : terms) {
    acc += RatFunc(Poly::constant(t.numerator),
                   Poly::x_minus(t.root).pow(static_cast<unsigned>(t.multiplicity)));
  }
  return acc;
}

std::string PartialFraction::to_string() const {
  std::vector<std::string> parts;
  if (!poly_part.is_zero()) parts.push_back(poly_part.to_string());
  for (const auto& t : terms) {
    std::string num = t.numerator.to_string();
    if (t.numerator.is_compound()) num = "(" + num + ")";
    const Poly lin = Poly::x_minus(t.root);
    std::string den = lin.to_string();
    if (lin.is_compound()) den = "(" + den + ")";
    if (t.multiplicity > 1) den += "^" + std::to_string(t.multiplicity);
    parts.push_back(num + "/" + den);
  }
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].front() == '-') {
      out += " - " + parts[i].substr(1);
    } else {
      out += " + " + parts[i];
    }
  }
  return out;
}

}  // namespace torelli
