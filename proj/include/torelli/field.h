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

// Exact base fields: the rationals, prime fields GF(p), and extension fields
// GF(p^k) = GF(p)[t]/(m(t)) with a deterministically chosen modulus m.
//
// Finite-field elements are stored as a single integer code: the base-p
// digits of the code are the coefficients of the residue polynomial in t,
// constant term first. Rationals use GMP fractions in lowest terms.

#ifndef TORELLI_FIELD_H_
#define TORELLI_FIELD_H_

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace torelli {

class FieldElem;

class FieldCtx {
 public:
  enum class Kind { kRationals, kPrime, kExtension };

  // Use the factories on Field; these are public for std::make_shared.
  FieldCtx();                                                  // Q
  explicit FieldCtx(std::uint64_t p);                          // GF(p)
  FieldCtx(std::uint64_t p, std::vector<std::uint64_t> modulus);  // GF(p^k)

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ != Kind::kRationals; }
  // 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }
  int degree() const { return k_; }
  // p^k; 0 for the rationals.
  std::uint64_t order() const { return order_; }
  // Monic modulus, constant term first (size k+1). Empty unless kExtension.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  // "Q", "GF(7)" or "GF(2^4)".
  std::string spec() const;

  bool operator==(const FieldCtx& other) const;

 private:
  friend class FieldElem;

  std::uint64_t add_codes(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg_code(std::uint64_t a) const;
  std::uint64_t mul_codes(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv_code(std::uint64_t a) const;
  std::uint64_t mul_codes_slow(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow_code_slow(std::uint64_t a, std::uint64_t e) const;
  void build_tables();

  Kind kind_ = Kind::kRationals;
  std::uint64_t p_ = 0;
  int k_ = 1;
  std::uint64_t order_ = 0;
  std::vector<std::uint64_t> modulus_;
  // Discrete log tables for extension fields of order <= 2^16.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

// Cheap shared handle to an immutable FieldCtx.
class Field {
 public:
  static Field rationals();
  // Throws NotPrime.
  static Field prime(std::uint64_t p);

  const FieldCtx& ctx() const { return *ctx_; }
  const FieldCtx* operator->() const { return ctx_.get(); }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(std::int64_t n) const;
  // Rationals only.
  FieldElem from_rational(const mpq_class& q) const;
  // Finite fields only; code must be < order().
  FieldElem from_code(std::uint64_t code) const;
  // The class of t in GF(p)[t]/(m). Extension fields only.
  FieldElem generator() const;
  // All elements in code order. Finite fields only.
  std::vector<FieldElem> elements() const;

  bool operator==(const Field& other) const {
    return ctx_ == other.ctx_ || *ctx_ == *other.ctx_;
  }

 private:
  friend Field make_ext_field(std::uint64_t p, int k);
  explicit Field(std::shared_ptr<const FieldCtx> ctx) : ctx_(std::move(ctx)) {}

  std::shared_ptr<const FieldCtx> ctx_;
};

// GF(p^k) with the lexicographically least monic irreducible modulus of
// degree k (lower coefficients compared as the base-p integer they spell,
// highest coefficient most significant). k == 1 yields GF(p).
// Throws NotPrime, DegreeZero, or InvalidArgument if p^k overflows.
Field make_ext_field(std::uint64_t p, int k);

bool is_prime(std::uint64_t n);

class FieldElem {
 public:
  FieldElem(Field field, std::uint64_t code);
  FieldElem(Field field, mpq_class q);

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  // Finite fields: the canonical code. Rationals: throws.
  std::uint64_t code() const;
  // Rationals: the reduced fraction. Finite fields: throws.
  const mpq_class& rational() const;
  // Residue polynomial coefficients in t (size k), constant first.
  std::vector<std::uint64_t> digits() const;

  FieldElem operator+(const FieldElem& b) const;
  FieldElem operator-(const FieldElem& b) const;
  FieldElem operator*(const FieldElem& b) const;
  // Throws DivideByZero.
  FieldElem operator/(const FieldElem& b) const;
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }
  FieldElem& operator/=(const FieldElem& b) { return *this = *this / b; }

  // Throws DivideByZero.
  FieldElem inverse() const;
  FieldElem pow(std::uint64_t e) const;

  bool operator==(const FieldElem& b) const;
  bool operator!=(const FieldElem& b) const { return !(*this == b); }

  // "5/6" over Q, "4" over GF(5), "t^2+1" over GF(p^k).
  std::string to_string() const;

  // True when printing needs parentheses as a polynomial coefficient.
  bool is_compound() const;

 private:
  void check_same_field(const FieldElem& b) const;

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

enum class ArithOp { kAdd, kSub, kMul, kDiv };

// Throws CtxMismatch or DivideByZero.
FieldElem field_arith(const FieldElem& a, const FieldElem& b, ArithOp op);

// The unique square root in a field of characteristic 2, a^(2^(k-1)).
// Throws WrongCharacteristic.
FieldElem sqrt_char2(const FieldElem& a);

}  // namespace torelli

#endif  // TORELLI_FIELD_H_
