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

#include <algorithm>
#include <utility>

#include "torelli/errors.h"

namespace torelli {
namespace {

using u128 = unsigned __int128;
// Dense polynomial over GF(p), constant term first, no trailing zeros.
using PrimePoly = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod m, m monic.
PrimePoly prime_poly_rem(PrimePoly a, const PrimePoly& m, std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  trim(a);
  while (a.size() > dm) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[shift + j] = (a[shift + j] + p - mulmod(c, m[j], p)) % p;
    }
    trim(a);
  }
  return a;
}

PrimePoly prime_poly_mulmod(const PrimePoly& a, const PrimePoly& b,
                            const PrimePoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  return prime_poly_rem(std::move(r), m, p);
}

PrimePoly prime_poly_powmod(PrimePoly base, std::uint64_t e,
                            const PrimePoly& m, std::uint64_t p) {
  PrimePoly r = {1};
  base = prime_poly_rem(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = prime_poly_mulmod(r, base, m, p);
    base = prime_poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

PrimePoly prime_poly_gcd(PrimePoly a, PrimePoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // Make b monic, then a := a mod b.
    const std::uint64_t inv = powmod(b.back(), p - 2, p);
    for (auto& c : b) c = mulmod(c, inv, p);
    a = prime_poly_rem(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin's test: m (monic, degree k) is irreducible over GF(p) iff
// t^(p^k) = t mod m and gcd(t^(p^(k/r)) - t, m) = 1 for each prime r | k.
bool is_irreducible(const PrimePoly& m, std::uint64_t p) {
  const int k = static_cast<int>(m.size()) - 1;
  if (k == 1) return true;
  if (m[0] == 0) return false;
  // frob[i] = t^(p^i) mod m.
  std::vector<PrimePoly> frob(k + 1);
  frob[0] = prime_poly_rem({0, 1}, m, p);
  for (int i = 1; i <= k; ++i) frob[i] = prime_poly_powmod(frob[i - 1], p, m, p);
  auto minus_t = [&](PrimePoly a) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
  };
  if (!minus_t(frob[k]).empty()) return false;
  for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(k))) {
    PrimePoly h = minus_t(frob[k / static_cast<int>(r)]);
    PrimePoly g = prime_poly_gcd(m, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin witnesses for 64-bit n.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------- FieldCtx

FieldCtx::FieldCtx() = default;

FieldCtx::FieldCtx(std::uint64_t p)
    : kind_(Kind::kPrime), p_(p), k_(1), order_(p) {}

FieldCtx::FieldCtx(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : kind_(Kind::kExtension),
      p_(p),
      k_(static_cast<int>(modulus.size()) - 1),
      modulus_(std::move(modulus)) {
  order_ = 1;
  for (int i = 0; i < k_; ++i) order_ *= p_;
  if (order_ <= (1u << 16)) build_tables();
}

std::string FieldCtx::spec() const {
  switch (kind_) {
    case Kind::kRationals: return "Q";
    case Kind::kPrime: return "GF(" + std::to_string(p_) + ")";
    case Kind::kExtension:
      return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
  }
  return "";
}

bool FieldCtx::operator==(const FieldCtx& other) const {
  return kind_ == other.kind_ && p_ == other.p_ && k_ == other.k_ &&
         modulus_ == other.modulus_;
}

std::uint64_t FieldCtx::add_codes(std::uint64_t a, std::uint64_t b) const {
  if (kind_ == Kind::kPrime) {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < k_; ++i) {
    const std::uint64_t da = a % p_;
    const std::uint64_t db = b % p_;
    a /= p_;
    b /= p_;
    out += ((da + db) % p_) * place;
    place *= p_;
  }
  return out;
}

std::uint64_t FieldCtx::neg_code(std::uint64_t a) const {
  if (kind_ == Kind::kPrime) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < k_; ++i) {
    const std::uint64_t d = a % p_;
    a /= p_;
    out += ((p_ - d) % p_) * place;
    place *= p_;
  }
  return out;
}

std::uint64_t FieldCtx::mul_codes(std::uint64_t a, std::uint64_t b) const {
  if (kind_ == Kind::kPrime) return mulmod(a, b, p_);
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) return exp_[log_[a] + log_[b]];
  return mul_codes_slow(a, b);
}

std::uint64_t FieldCtx::inv_code(std::uint64_t a) const {
  if (kind_ == Kind::kPrime) return powmod(a, p_ - 2, p_);
  if (!log_.empty()) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
  return pow_code_slow(a, order_ - 2);
}

std::uint64_t FieldCtx::mul_codes_slow(std::uint64_t a, std::uint64_t b) const {
  PrimePoly da(k_), db(k_);
  for (int i = 0; i < k_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  trim(da);
  trim(db);
  PrimePoly r = prime_poly_mulmod(da, db, modulus_, p_);
  std::uint64_t out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
  return out;
}

std::uint64_t FieldCtx::pow_code_slow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul_codes_slow(r, a);
    a = mul_codes_slow(a, a);
    e >>= 1;
  }
  return r;
}

void FieldCtx::build_tables() {
  const std::uint64_t n = order_ - 1;
  const std::vector<std::uint64_t> primes = prime_factors(n);
  std::uint64_t gen = 0;
  for (std::uint64_t c = 2; c < order_ && gen == 0; ++c) {
    bool primitive = true;
    for (std::uint64_t r : primes) {
      if (pow_code_slow(c, n / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) gen = c;
  }
  exp_.assign(2 * n, 0);
  log_.assign(order_, 0);
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = static_cast<std::uint32_t>(x);
    exp_[i + n] = static_cast<std::uint32_t>(x);
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_codes_slow(x, gen);
  }
}

// ------------------------------------------------------------------- Field

Field Field::rationals() { return Field(std::make_shared<const FieldCtx>()); }

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  return Field(std::make_shared<const FieldCtx>(p));
}

Field make_ext_field(std::uint64_t p, int k) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  if (k < 1) {
    throw Error(ErrorCode::kDegreeZero, "extension degree must be >= 1");
  }
  if (k == 1) return Field::prime(p);
  u128 order = 1;
  for (int i = 0; i < k; ++i) {
    order *= p;
    if (order >= (static_cast<u128>(1) << 62)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "field order " + std::to_string(p) + "^" +
                      std::to_string(k) + " is too large");
    }
  }
  const auto lower_count = static_cast<std::uint64_t>(order);
  for (std::uint64_t code = 0; code < lower_count; ++code) {
    PrimePoly m(k + 1, 0);
    std::uint64_t c = code;
    for (int i = 0; i < k; ++i) {
      m[i] = c % p;
      c /= p;
    }
    m[k] = 1;
    if (is_irreducible(m, p)) {
      return Field(std::make_shared<const FieldCtx>(p, std::move(m)));
    }
  }
  // Irreducible polynomials of every degree exist over GF(p).
  throw Error(ErrorCode::kInvalidArgument, "no irreducible modulus found");
}

FieldElem Field::zero() const {
  if (ctx_->is_finite()) return FieldElem(*this, std::uint64_t{0});
  return FieldElem(*this, mpq_class(0));
}

FieldElem Field::one() const {
  if (ctx_->is_finite()) return FieldElem(*this, std::uint64_t{1});
  return FieldElem(*this, mpq_class(1));
}

FieldElem Field::from_int(std::int64_t n) const {
  if (!ctx_->is_finite()) {
    return FieldElem(*this, mpq_class(mpz_class(std::to_string(n))));
  }
  const std::uint64_t p = ctx_->characteristic();
  const std::uint64_t mag =
      n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  std::uint64_t r = mag % p;
  if (n < 0 && r != 0) r = p - r;
  return FieldElem(*this, r);
}

FieldElem Field::from_rational(const mpq_class& q) const {
  if (ctx_->is_finite()) {
    // Map num/den into GF(p).
    const mpz_class pz(std::to_string(ctx_->characteristic()));
    mpz_class num = q.get_num() % pz;
    mpz_class den = q.get_den() % pz;
    if (num < 0) num += pz;
    if (den == 0) throw Error(ErrorCode::kDivideByZero, "denominator divisible by p");
    return FieldElem(*this, static_cast<std::uint64_t>(std::stoull(num.get_str()))) /
           FieldElem(*this, static_cast<std::uint64_t>(std::stoull(den.get_str())));
  }
  return FieldElem(*this, q);
}

FieldElem Field::from_code(std::uint64_t code) const {
  if (!ctx_->is_finite() || code >= ctx_->order()) {
    throw Error(ErrorCode::kInvalidArgument, "element code out of range");
  }
  return FieldElem(*this, code);
}

FieldElem Field::generator() const {
  if (ctx_->kind() != FieldCtx::Kind::kExtension) {
    throw Error(ErrorCode::kInvalidArgument,
                "generator t only exists in extension fields");
  }
  return FieldElem(*this, ctx_->characteristic());
}

std::vector<FieldElem> Field::elements() const {
  if (!ctx_->is_finite()) {
    throw Error(ErrorCode::kInvalidArgument, "Q has no finite element list");
  }
  std::vector<FieldElem> out;
  out.reserve(ctx_->order());
  for (std::uint64_t c = 0; c < ctx_->order(); ++c) out.emplace_back(*this, c);
  return out;
}

// --------------------------------------------------------------- FieldElem

FieldElem::FieldElem(Field field, std::uint64_t code)
    : field_(std::move(field)), value_(code) {
  if (!field_->is_finite()) value_ = mpq_class(static_cast<unsigned long>(code));
}

FieldElem::FieldElem(Field field, mpq_class q) : field_(std::move(field)) {
  if (field_->is_finite()) {
    value_ = field_.from_rational(q).value_;
  } else {
    q.canonicalize();
    value_ = std::move(q);
  }
}

bool FieldElem::is_zero() const {
  if (const auto* c = std::get_if<std::uint64_t>(&value_)) return *c == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElem::is_one() const {
  if (const auto* c = std::get_if<std::uint64_t>(&value_)) return *c == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint64_t FieldElem::code() const {
  if (const auto* c = std::get_if<std::uint64_t>(&value_)) return *c;
  throw Error(ErrorCode::kInvalidArgument, "rational elements have no code");
}

const mpq_class& FieldElem::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(ErrorCode::kInvalidArgument, "finite-field element is not rational");
}

std::vector<std::uint64_t> FieldElem::digits() const {
  std::uint64_t c = code();
  const std::uint64_t p = field_->characteristic();
  std::vector<std::uint64_t> out(field_->degree());
  for (auto& d : out) {
    d = c % p;
    c /= p;
  }
  return out;
}

void FieldElem::check_same_field(const FieldElem& b) const {
  if (!(field_ == b.field_)) {
    throw Error(ErrorCode::kCtxMismatch,
                "mixing " + field_->spec() + " and " + b.field_->spec());
  }
}

FieldElem FieldElem::operator+(const FieldElem& b) const {
  check_same_field(b);
  if (field_->is_finite()) {
    return FieldElem(field_, field_->add_codes(code(), b.code()));
  }
  FieldElem out(*this);
  std::get<mpq_class>(out.value_) += b.rational();
  return out;
}

FieldElem FieldElem::operator-() const {
  if (field_->is_finite()) return FieldElem(field_, field_->neg_code(code()));
  FieldElem out(*this);
  auto& q = std::get<mpq_class>(out.value_);
  q = -q;
  return out;
}

FieldElem FieldElem::operator-(const FieldElem& b) const {
  check_same_field(b);
  if (field_->is_finite()) {
    return FieldElem(field_, field_->add_codes(code(), field_->neg_code(b.code())));
  }
  FieldElem out(*this);
  std::get<mpq_class>(out.value_) -= b.rational();
  return out;
}

FieldElem FieldElem::operator*(const FieldElem& b) const {
  check_same_field(b);
  if (field_->is_finite()) {
    return FieldElem(field_, field_->mul_codes(code(), b.code()));
  }
  FieldElem out(*this);
  std::get<mpq_class>(out.value_) *= b.rational();
  return out;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivideByZero, "inverse of zero");
  if (field_->is_finite()) return FieldElem(field_, field_->inv_code(code()));
  FieldElem out(*this);
  auto& q = std::get<mpq_class>(out.value_);
  q = 1 / q;
  return out;
}

FieldElem FieldElem::operator/(const FieldElem& b) const {
  check_same_field(b);
  if (b.is_zero()) throw Error(ErrorCode::kDivideByZero, "division by zero");
  if (field_->is_finite()) {
    return FieldElem(field_, field_->mul_codes(code(), field_->inv_code(b.code())));
  }
  FieldElem out(*this);
  std::get<mpq_class>(out.value_) /= b.rational();
  return out;
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  FieldElem result = field_.one();
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool FieldElem::operator==(const FieldElem& b) const {
  return field_ == b.field_ && value_ == b.value_;
}

std::string FieldElem::to_string() const {
  if (!field_->is_finite()) return rational().get_str();
  if (field_->kind() == FieldCtx::Kind::kPrime) return std::to_string(code());
  const std::vector<std::uint64_t> d = digits();
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]) + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

bool FieldElem::is_compound() const {
  if (field_->kind() != FieldCtx::Kind::kExtension) return false;
  const std::vector<std::uint64_t> d = digits();
  return std::count_if(d.begin(), d.end(), [](std::uint64_t x) { return x != 0; }) > 1;
}

FieldElem field_arith(const FieldElem& a, const FieldElem& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
    case ArithOp::kDiv: return a / b;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown op");
}

FieldElem sqrt_char2(const FieldElem& a) {
  if (a.field()->characteristic() != 2) {
    throw Error(ErrorCode::kWrongCharacteristic,
                "square roots via Frobenius need characteristic 2, got " +
                    a.field()->spec());
  }
  FieldElem r = a;
  for (int i = 1; i < a.field()->degree(); ++i) r *= r;
  return r;
}

}  // namespace torelli
