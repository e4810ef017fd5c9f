#pragma once

// GL1, GL2, AGL1, AGL2 over a finite field.
//
// An affine element is stored as (translation alpha, linear part A), acting
// as the block matrix [[1, 0], [alpha, A]]; the product is
// (alpha, A) * (beta, B) = (alpha + A beta, A B).

#include "knotvar/bigint.hpp"
#include "knotvar/ffield.hpp"

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotvar {

inline constexpr std::uint64_t kDefaultMaxGroupOrder = std::uint64_t{1} << 30;

/// Enumeration bound; KNOTVAR_MAX_GROUP_ORDER overrides the default.
inline std::uint64_t max_group_order() {
  if (const char* env = std::getenv("KNOTVAR_MAX_GROUP_ORDER")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxGroupOrder;
}

/// 2x2 matrices over a field, entries as codes, row-major (a b / c d).
struct Mat2 {
  Code a = 1, b = 0, c = 0, d = 1;
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

namespace mat2 {

inline Mat2 identity() { return {1, 0, 0, 1}; }
inline Mat2 scalar(Code s) { return {s, 0, 0, s}; }
inline Mat2 zero() { return {0, 0, 0, 0}; }

inline Mat2 mul(const FieldCtx& f, const Mat2& x, const Mat2& y) {
  return {f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
          f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)), f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
}
inline Mat2 add(const FieldCtx& f, const Mat2& x, const Mat2& y) {
  return {f.add(x.a, y.a), f.add(x.b, y.b), f.add(x.c, y.c), f.add(x.d, y.d)};
}
inline Mat2 neg(const FieldCtx& f, const Mat2& x) { return {f.neg(x.a), f.neg(x.b), f.neg(x.c), f.neg(x.d)}; }
inline Code det(const FieldCtx& f, const Mat2& x) { return f.sub(f.mul(x.a, x.d), f.mul(x.b, x.c)); }
inline Code trace(const FieldCtx& f, const Mat2& x) { return f.add(x.a, x.d); }
inline bool is_scalar(const Mat2& x) { return x.b == 0 && x.c == 0 && x.a == x.d; }

inline Mat2 inverse(const FieldCtx& f, const Mat2& x) {
  Code di = f.inv(det(f, x));
  return {f.mul(x.d, di), f.mul(f.neg(x.b), di), f.mul(f.neg(x.c), di), f.mul(x.a, di)};
}

inline Mat2 pow(const FieldCtx& f, Mat2 x, std::uint64_t e) {
  Mat2 r = identity();
  while (e) {
    if (e & 1u) r = mul(f, r, x);
    x = mul(f, x, x);
    e >>= 1u;
  }
  return r;
}

/// Phi_l(X) = I + X + ... + X^{l-1} by Horner.
inline Mat2 phi(const FieldCtx& f, const Mat2& x, std::uint64_t l) {
  if (l == 0) return zero();
  Mat2 s = identity();
  for (std::uint64_t i = 1; i < l; ++i) s = add(f, mul(f, s, x), identity());
  return s;
}

inline std::uint64_t encode(const FieldCtx& f, const Mat2& x) {
  const std::uint64_t q = f.q();
  return x.a + q * (x.b + q * (x.c + q * std::uint64_t{x.d}));
}
inline Mat2 decode(const FieldCtx& f, std::uint64_t code) {
  const std::uint64_t q = f.q();
  Mat2 m;
  m.a = static_cast<Code>(code % q);
  code /= q;
  m.b = static_cast<Code>(code % q);
  code /= q;
  m.c = static_cast<Code>(code % q);
  code /= q;
  m.d = static_cast<Code>(code % q);
  return m;
}

}  // namespace mat2

/// Scalar Phi_l(x) = 1 + x + ... + x^{l-1}.
inline Code phi_scalar(const FieldCtx& f, Code x, std::uint64_t l) {
  Code s = 0;
  for (std::uint64_t i = 0; i < l; ++i) s = f.add(f.mul(s, x), 1);
  return s;
}

class GroupDescriptor {
 public:
  GroupDescriptor(Field ctx, unsigned rank, bool affine) : ctx_(std::move(ctx)), rank_(rank), affine_(affine) {
    if (!ctx_) throw std::invalid_argument("group needs a field");
    if (rank_ != 1 && rank_ != 2) throw std::invalid_argument("only ranks 1 and 2 are supported");
  }
  static GroupDescriptor gl1(Field f) { return {std::move(f), 1, false}; }
  static GroupDescriptor gl2(Field f) { return {std::move(f), 2, false}; }
  static GroupDescriptor agl1(Field f) { return {std::move(f), 1, true}; }
  static GroupDescriptor agl2(Field f) { return {std::move(f), 2, true}; }

  const FieldCtx& field() const { return *ctx_; }
  const Field& field_ptr() const { return ctx_; }
  unsigned rank() const { return rank_; }
  bool affine() const { return affine_; }

  std::string name() const {
    return std::string(affine_ ? "AGL" : "GL") + std::to_string(rank_) + "(F_" + std::to_string(ctx_->q()) + ")";
  }

  /// |GL1| = q-1, |GL2| = (q^2-1)(q^2-q), affine groups multiply by q^r.
  BigInt order() const {
    const BigInt q = ctx_->q();
    BigInt lin = rank_ == 1 ? BigInt(q - 1) : BigInt((q * q - 1) * (q * q - q));
    return affine_ ? lin * ipow(q, rank_) : lin;
  }

  /// Size of the code space [0, q^{r^2 + r*affine}).
  BigInt code_space() const { return ipow(BigInt(ctx_->q()), rank_ * rank_ + (affine_ ? rank_ : 0)); }

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
    return a.ctx_ == b.ctx_ && a.rank_ == b.rank_ && a.affine_ == b.affine_;
  }

 private:
  Field ctx_;
  unsigned rank_;
  bool affine_;
};

struct GroupElement {
  const FieldCtx* ctx = nullptr;
  unsigned rank = 1;
  bool affine = false;
  Mat2 lin;                       // rank 1 uses lin.a only (b = c = 0, d = 1)
  std::array<Code, 2> tr{0, 0};   // unused entries stay 0

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

namespace detail {
inline void check_member(const GroupDescriptor& d, const GroupElement& g) {
  if (g.ctx != &d.field() || g.rank != d.rank() || g.affine != d.affine())
    throw std::invalid_argument("element does not belong to " + d.name());
}
}  // namespace detail

inline GroupElement identity(const GroupDescriptor& d) {
  GroupElement g;
  g.ctx = &d.field();
  g.rank = d.rank();
  g.affine = d.affine();
  return g;
}

/// Builds an element from entries; throws when the linear part is singular.
inline GroupElement make_element(const GroupDescriptor& d, Mat2 lin, std::array<Code, 2> tr = {0, 0}) {
  GroupElement g = identity(d);
  const FieldCtx& f = d.field();
  if (d.rank() == 1) {
    lin.b = lin.c = 0;
    lin.d = 1;
    tr[1] = 0;
  }
  if (!d.affine()) tr = {0, 0};
  for (Code c : {lin.a, lin.b, lin.c, lin.d, tr[0], tr[1]})
    if (!f.valid(c)) throw std::out_of_range("entry out of range");
  if (mat2::det(f, lin) == 0) throw std::invalid_argument("linear part is singular");
  g.lin = lin;
  g.tr = tr;
  return g;
}

inline GroupElement gmul(const GroupDescriptor& d, const GroupElement& g, const GroupElement& h) {
  detail::check_member(d, g);
  detail::check_member(d, h);
  const FieldCtx& f = d.field();
  GroupElement r = g;
  r.lin = mat2::mul(f, g.lin, h.lin);
  if (d.affine()) {
    // alpha + A beta
    r.tr[0] = f.add(g.tr[0], f.add(f.mul(g.lin.a, h.tr[0]), f.mul(g.lin.b, h.tr[1])));
    r.tr[1] = f.add(g.tr[1], f.add(f.mul(g.lin.c, h.tr[0]), f.mul(g.lin.d, h.tr[1])));
  }
  return r;
}

inline GroupElement ginv(const GroupDescriptor& d, const GroupElement& g) {
  detail::check_member(d, g);
  const FieldCtx& f = d.field();
  GroupElement r = g;
  r.lin = mat2::inverse(f, g.lin);
  if (d.affine()) {
    r.tr[0] = f.neg(f.add(f.mul(r.lin.a, g.tr[0]), f.mul(r.lin.b, g.tr[1])));
    r.tr[1] = f.neg(f.add(f.mul(r.lin.c, g.tr[0]), f.mul(r.lin.d, g.tr[1])));
  }
  return r;
}

inline GroupElement gpow(const GroupDescriptor& d, GroupElement g, std::uint64_t e) {
  GroupElement r = identity(d);
  while (e) {
    if (e & 1u) r = gmul(d, r, g);
    g = gmul(d, g, g);
    e >>= 1u;
  }
  return r;
}

/// Canonical code: linear entries (row-major) in base q, then the translation.
inline std::uint64_t gencode(const GroupDescriptor& d, const GroupElement& g) {
  detail::check_member(d, g);
  if (d.code_space() > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw std::out_of_range("group codes exceed 64 bits");
  const FieldCtx& f = d.field();
  const std::uint64_t q = f.q();
  std::uint64_t lin = d.rank() == 1 ? g.lin.a : mat2::encode(f, g.lin);
  if (!d.affine()) return lin;
  std::uint64_t scale = d.rank() == 1 ? q : q * q * q * q;
  std::uint64_t tr = d.rank() == 1 ? g.tr[0] : g.tr[0] + q * g.tr[1];
  return lin + scale * tr;
}

inline GroupElement gdecode(const GroupDescriptor& d, std::uint64_t code) {
  if (BigInt(code) >= d.code_space()) throw std::out_of_range("code outside the group's code space");
  const FieldCtx& f = d.field();
  const std::uint64_t q = f.q();
  const std::uint64_t scale = d.rank() == 1 ? q : q * q * q * q;
  Mat2 lin;
  std::array<Code, 2> tr{0, 0};
  std::uint64_t lc = code % scale, tc = code / scale;
  if (d.rank() == 1) {
    lin = {static_cast<Code>(lc), 0, 0, 1};
    tr[0] = static_cast<Code>(tc);
  } else {
    lin = mat2::decode(f, lc);
    tr = {static_cast<Code>(tc % q), static_cast<Code>(tc / q)};
  }
  if (mat2::det(f, lin) == 0) throw std::invalid_argument("code does not encode a group element");
  return make_element(d, lin, tr);
}

inline void check_enumeration_bound(const GroupDescriptor& d, std::uint64_t bound) {
  if (d.order() > BigInt(bound))
    throw std::out_of_range("|" + d.name() + "| = " + d.order().str() + " exceeds enumeration bound " +
                            std::to_string(bound));
}

/// Visits every element once in increasing code order.
template <typename Fn>
void for_each_element(const GroupDescriptor& d, Fn&& fn) {
  check_enumeration_bound(d, max_group_order());
  const FieldCtx& f = d.field();
  const std::uint64_t q = f.q();
  const std::uint64_t lin_space = d.rank() == 1 ? q : q * q * q * q;
  const std::uint64_t tr_space = d.affine() ? (d.rank() == 1 ? q : q * q) : 1;
  std::vector<Mat2> linear;
  for (std::uint64_t c = 0; c < lin_space; ++c) {
    Mat2 m = d.rank() == 1 ? Mat2{static_cast<Code>(c), 0, 0, 1} : mat2::decode(f, c);
    if (mat2::det(f, m) != 0) linear.push_back(m);
  }
  GroupElement g = identity(d);
  for (std::uint64_t t = 0; t < tr_space; ++t) {
    g.tr = {static_cast<Code>(t % q), static_cast<Code>(d.rank() == 1 ? 0 : t / q)};
    for (const Mat2& m : linear) {
      g.lin = m;
      fn(static_cast<const GroupElement&>(g));
    }
  }
}

inline std::vector<GroupElement> genumerate(const GroupDescriptor& d) {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(d.order()));
  for_each_element(d, [&](const GroupElement& g) { out.push_back(g); });
  return out;
}

/// Invertible 2x2 matrices over the field, ascending by code.
inline std::vector<Mat2> gl2_elements(const FieldCtx& f) {
  const std::uint64_t q = f.q();
  std::vector<Mat2> out;
  out.reserve(static_cast<std::size_t>((q * q - 1) * (q * q - q)));
  for (std::uint64_t c = 0; c < q * q * q * q; ++c) {
    Mat2 m = mat2::decode(f, c);
    if (mat2::det(f, m) != 0) out.push_back(m);
  }
  return out;
}

}  // namespace knotvar
