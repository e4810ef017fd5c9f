#pragma once

// Finite fields F_{p^k} with fully materialized log/antilog tables.
//
// Elements are identified by their canonical code: the coefficient vector
// (c_0, ..., c_{k-1}) of the reduced representative read as a base-p
// integer, code = sum c_i p^i. All engines work on raw codes; the Fq value
// type wraps a code together with its context for ergonomic use.

#include "knotvar/bigint.hpp"

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#define KNOTVAR_ASSERT(cond, msg)                                   \
  do {                                                              \
    if (!(cond)) throw std::logic_error(std::string("knotvar: ") + (msg)); \
  } while (0)

namespace knotvar {

using Code = std::uint32_t;

inline constexpr std::uint64_t kDefaultMaxFieldOrder = std::uint64_t{1} << 20;

namespace detail {

// Polynomials over F_p as coefficient vectors, lowest degree first.
using PolyFp = std::vector<std::uint32_t>;

inline void trim(PolyFp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo a monic divisor g.
inline PolyFp poly_mod(PolyFp a, const PolyFp& g, std::uint32_t p) {
  trim(a);
  const std::size_t dg = g.size() - 1;
  while (a.size() > dg) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      std::uint64_t sub = lead * g[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

inline PolyFp poly_from_code(std::uint64_t code, std::uint32_t p, unsigned len) {
  PolyFp out(len);
  for (unsigned i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return out;
}

/// Exhaustive divisor scan over monic polynomials of degree 1..deg/2.
inline bool is_irreducible(const PolyFp& f, std::uint32_t p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  if (deg == 0) return false;
  for (unsigned d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = upow(p, d);
    for (std::uint64_t c = 0; c < count; ++c) {
      PolyFp g = poly_from_code(c, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

class FieldCtx {
 public:
  std::uint32_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint32_t q() const { return q_; }
  /// Monic modulus, lowest coefficient first (size k+1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Code generator() const { return generator_; }

  static constexpr Code zero() { return 0; }
  static constexpr Code one() { return 1; }

  bool valid(Code a) const { return a < q_; }

  Code add(Code a, Code b) const {
    if (k_ == 1) {
      Code s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
    return add_digits(a, b);
  }
  Code neg(Code a) const { return neg_[a]; }
  Code sub(Code a, Code b) const { return add(a, neg_[b]); }
  Code mul(Code a, Code b) const {
    if (k_ == 1) return static_cast<Code>(std::uint64_t{a} * b % p_);
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Code inv(Code a) const {
    if (a == 0) throw std::domain_error("inversion of zero in F_" + std::to_string(q_));
    std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : (q_ - 1) - l];
  }
  /// Binary exponentiation; negative exponents go through the inverse.
  Code pow(Code a, std::int64_t e) const {
    if (e < 0) {
      a = inv(a);
      e = -e;
    }
    Code r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Code frobenius(Code a) const { return pow(a, p_); }
  /// Image of the integer n under Z -> F_p -> F_q.
  Code from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Code>(r);
  }
  /// Discrete log with respect to generator(); a must be nonzero.
  std::uint32_t log(Code a) const {
    if (a == 0) throw std::domain_error("log of zero");
    return log_[a];
  }
  Code exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }

  std::vector<std::uint32_t> coeffs(Code a) const {
    return detail::poly_from_code(a, p_, k_);
  }
  Code from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() != k_) throw std::invalid_argument("coefficient vector has wrong length");
    std::uint64_t code = 0;
    for (unsigned i = k_; i-- > 0;) {
      if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
      code = code * p_ + c[i];
    }
    return static_cast<Code>(code);
  }

  /// Human-readable form, e.g. "2x+1" (prime fields print the residue).
  std::string format(Code a) const {
    if (k_ == 1) return std::to_string(a);
    auto c = coeffs(a);
    std::string out;
    for (unsigned i = k_; i-- > 0;) {
      if (c[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

  std::string modulus_string() const {
    std::string out;
    for (unsigned i = k_ + 1; i-- > 0;) {
      std::uint32_t c = modulus_[i];
      if (c == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0 || c != 1) out += std::to_string(c);
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

  static Field build(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    return Field(new FieldCtx(p, std::move(modulus)));
  }

 private:
  FieldCtx(std::uint32_t p, std::vector<std::uint32_t> modulus)
      : p_(p), k_(static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {
    q_ = static_cast<std::uint32_t>(upow(p_, k_));
    neg_.resize(q_);
    for (Code a = 0; a < q_; ++a) {
      auto c = coeffs(a);
      for (auto& x : c) x = (p_ - x) % p_;
      neg_[a] = from_coeffs(c);
    }
    if (k_ > 1 && q_ <= 256) {
      add_table_.resize(std::size_t{q_} * q_);
      for (Code a = 0; a < q_; ++a)
        for (Code b = 0; b < q_; ++b) add_table_[std::size_t{a} * q_ + b] = add_digits(a, b);
    }
    build_log_tables();
  }

  Code add_digits(Code a, Code b) const {
    std::uint64_t out = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
      std::uint32_t s = (a % p_) + (b % p_);
      if (s >= p_) s -= p_;
      out += s * scale;
      scale *= p_;
      a /= p_;
      b /= p_;
    }
    return static_cast<Code>(out);
  }

  // Multiplication before tables exist: schoolbook product reduced mod the modulus.
  Code slow_mul(Code a, Code b) const {
    auto x = coeffs(a), y = coeffs(b);
    detail::PolyFp prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; j < k_; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_);
    auto r = detail::poly_mod(prod, modulus_, p_);
    r.resize(k_, 0);
    return from_coeffs(r);
  }
  Code slow_pow(Code a, std::uint64_t e) const {
    Code r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  }

  void build_log_tables() {
    const std::uint32_t order = q_ - 1;
    const auto factors = prime_factors(order);
    generator_ = 0;
    for (Code g = 1; g < q_ && generator_ == 0; ++g) {
      bool ok = order == 1 || slow_pow(g, order) == 1;
      for (auto r : factors)
        if (ok && slow_pow(g, order / r) == 1) ok = false;
      if (ok) generator_ = g;
    }
    KNOTVAR_ASSERT(generator_ != 0, "multiplicative group has no generator; modulus not irreducible");
    exp_.resize(order);
    log_.assign(q_, 0);
    Code x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
      exp_[i] = x;
      log_[x] = i;
      x = slow_mul(x, generator_);
    }
    KNOTVAR_ASSERT(x == 1, "generator order mismatch");
  }

  std::uint32_t p_;
  unsigned k_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t q_ = 0;
  Code generator_ = 0;
  std::vector<Code> neg_;
  std::vector<Code> add_table_;
  std::vector<Code> exp_;
  std::vector<std::uint32_t> log_;
};

/// Monic irreducible polynomials of degree k over F_p in lexicographic order of
/// (c_{k-1}, ..., c_0); stops after `limit` results.
inline std::vector<std::vector<std::uint32_t>> irreducible_monics(std::uint32_t p, unsigned k,
                                                                  std::size_t limit) {
  std::vector<std::vector<std::uint32_t>> out;
  const std::uint64_t count = upow(p, k);
  for (std::uint64_t c = 0; c < count && out.size() < limit; ++c) {
    auto f = detail::poly_from_code(c, p, k);
    f.push_back(1);
    if (detail::is_irreducible(f, p)) out.push_back(std::move(f));
  }
  return out;
}

inline void check_field_params(std::uint64_t p, unsigned k, std::uint64_t max_order) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > max_order)
      throw std::out_of_range("field order " + std::to_string(p) + "^" + std::to_string(k) +
                              " exceeds bound " + std::to_string(max_order));
  }
}

/// F_{p^k} with the lexicographically `index`-th irreducible modulus (0 = smallest).
inline Field make_field(std::uint64_t p, unsigned k, std::size_t index = 0,
                        std::uint64_t max_order = kDefaultMaxFieldOrder) {
  check_field_params(p, k, max_order);
  auto mods = irreducible_monics(static_cast<std::uint32_t>(p), k, index + 1);
  if (mods.size() <= index) throw std::out_of_range("not enough irreducible polynomials");
  return FieldCtx::build(static_cast<std::uint32_t>(p), std::move(mods[index]));
}

inline Field make_field_with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus,
                                     std::uint64_t max_order = kDefaultMaxFieldOrder) {
  if (modulus.size() < 2 || modulus.back() != 1)
    throw std::invalid_argument("modulus must be monic of degree >= 1");
  check_field_params(p, static_cast<unsigned>(modulus.size() - 1), max_order);
  for (auto c : modulus)
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  if (!detail::is_irreducible(modulus, static_cast<std::uint32_t>(p)))
    throw std::invalid_argument("modulus is reducible");
  return FieldCtx::build(static_cast<std::uint32_t>(p), std::move(modulus));
}

inline Field make_field_of_order(std::uint64_t q, std::size_t index = 0,
                                 std::uint64_t max_order = kDefaultMaxFieldOrder) {
  PrimePower pp;
  if (!as_prime_power(q, pp)) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return make_field(pp.p, pp.k, index, max_order);
}

/// Value wrapper binding a code to its field.
class Fq {
 public:
  Fq(const FieldCtx& ctx, Code code) : ctx_(&ctx), code_(code) {
    if (!ctx.valid(code)) throw std::out_of_range("element code out of range");
  }
  static Fq from_int(const FieldCtx& ctx, std::int64_t n) { return Fq(ctx, ctx.from_int(n)); }

  Code code() const { return code_; }
  const FieldCtx& ctx() const { return *ctx_; }
  bool is_zero() const { return code_ == 0; }

  friend Fq operator+(Fq a, Fq b) { return Fq(a.same(b), a.ctx_->add(a.code_, b.code_)); }
  friend Fq operator-(Fq a, Fq b) { return Fq(a.same(b), a.ctx_->sub(a.code_, b.code_)); }
  friend Fq operator*(Fq a, Fq b) { return Fq(a.same(b), a.ctx_->mul(a.code_, b.code_)); }
  friend Fq operator/(Fq a, Fq b) {
    return Fq(a.same(b), a.ctx_->mul(a.code_, a.ctx_->inv(b.code_)));
  }
  Fq operator-() const { return Fq(*ctx_, ctx_->neg(code_)); }
  Fq inv() const { return Fq(*ctx_, ctx_->inv(code_)); }
  Fq pow(std::int64_t e) const { return Fq(*ctx_, ctx_->pow(code_, e)); }

  friend bool operator==(Fq a, Fq b) {
    a.same(b);
    return a.code_ == b.code_;
  }

  std::string str() const { return ctx_->format(code_); }

 private:
  const FieldCtx& same(const Fq& o) const {
    KNOTVAR_ASSERT(ctx_ == o.ctx_, "mixing elements of different fields");
    return *ctx_;
  }
  const FieldCtx* ctx_;
  Code code_;
};

/// |{x in F_q : x^l = 1}| by enumeration.
inline std::uint64_t unity_root_count(const FieldCtx& ctx, std::uint64_t l) {
  if (l == 0) throw std::invalid_argument("l must be positive");
  std::uint64_t n = 0;
  for (Code x = 1; x < ctx.q(); ++x)
    if (ctx.pow(x, static_cast<std::int64_t>(l)) == 1) ++n;
  return n;
}

/// Closed form of the same count: gcd(l, q-1).
inline std::uint64_t unity_root_count_gcd(std::uint64_t q, std::uint64_t l) {
  if (l == 0) throw std::invalid_argument("l must be positive");
  return std::gcd(l, q - 1);
}

inline bool in_omega(const FieldCtx& ctx, Code t, std::int64_t m, std::int64_t n) {
  return t != 0 && ctx.pow(t, m * n) == 1 && ctx.pow(t, n) != 1 && ctx.pow(t, m) != 1;
}

/// {t in F_q^* : t^{nm} = 1, t^n != 1, t^m != 1}, ascending by code.
inline std::vector<Code> omega_set(const FieldCtx& ctx, std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("m, n must be positive");
  if (std::gcd(m, n) != 1) throw std::invalid_argument("omega_set requires gcd(m,n) = 1");
  std::vector<Code> out;
  for (Code t = 1; t < ctx.q(); ++t)
    if (in_omega(ctx, t, m, n)) out.push_back(t);
  return out;
}

inline bool char_divides(const FieldCtx& ctx, std::int64_t l) { return l % ctx.p() == 0; }

}  // namespace knotvar
