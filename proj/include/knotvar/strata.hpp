#pragma once

// Stratification of {(A0,B0) in GL2(F_q)^2 : A0^n = B0^m} by eigendata, the
// cusp-curve parametrization, and Frobenius-orbit audits.

#include "knotvar/bigint.hpp"
#include "knotvar/closedform.hpp"
#include "knotvar/ffield.hpp"
#include "knotvar/knot.hpp"
#include "knotvar/matgroups.hpp"
#include "knotvar/parallel.hpp"
#include "knotvar/repcount.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace knotvar {

/// am + bn = 1 with the smallest nonzero |a| (ties go to positive a).
inline std::pair<std::int64_t, std::int64_t> bezout(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("bezout: arguments must be positive");
  if (std::gcd(m, n) != 1) throw std::invalid_argument("bezout: arguments not coprime");
  std::int64_t r0 = m, r1 = n, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t qt = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - qt * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - qt * s1);
  }
  std::int64_t a = ((s0 % n) + n) % n;  // m^{-1} mod n
  if (a == 0) a = n;
  if (a - n != 0 && n - a < a) a -= n;
  return {a, (1 - a * m) / n};
}

/// t -> (t^m, t^n), a point of x^n = y^m.
inline std::pair<Code, Code> cusp_param(const FieldCtx& f, std::int64_t m, std::int64_t n, Code t) {
  if (t == 0 || !f.valid(t)) throw std::invalid_argument("cusp_param: t must be a nonzero field element");
  return {f.pow(t, m), f.pow(t, n)};
}

/// (x, y) -> x^a y^b with am + bn = 1.
inline Code cusp_inv(const FieldCtx& f, std::int64_t m, std::int64_t n, Code x, Code y) {
  if (!f.valid(x) || !f.valid(y)) throw std::invalid_argument("cusp_inv: entry out of range");
  if (x == 0 || y == 0) throw std::invalid_argument("cusp_inv: point must lie off the axes");
  if (f.pow(x, n) != f.pow(y, m)) throw std::invalid_argument("cusp_inv: point not on x^n = y^m");
  auto [a, b] = bezout(m, n);
  return f.mul(f.pow(x, a), f.pow(y, b));
}

/// F_{q^2} = F_q[y]/(y^2 - s y - r). Codes u + q v stand for u + v y, so F_q
/// embeds with identical codes.
class QuadExt {
 public:
  explicit QuadExt(Field base) : f_(std::move(base)) {
    const FieldCtx& f = *f_;
    q_ = f.q();
    size_ = q_ * q_;
    bool found = false;
    for (Code s = 0; s < q_ && !found; ++s)
      for (Code r = 1; r < q_ && !found; ++r) {
        bool root = false;
        for (Code x = 0; x < q_ && !root; ++x) root = f.sub(f.mul(x, x), f.add(f.mul(s, x), r)) == 0;
        if (!root) {
          s_ = s;
          r_ = r;
          found = true;
        }
      }
    KNOTVAR_ASSERT(found, "no irreducible quadratic");
    const std::uint32_t order = size_ - 1;
    std::vector<std::uint64_t> ps = prime_factors(order);
    for (std::uint32_t g = 2; g < size_; ++g) {
      bool primitive = true;
      for (auto p : ps) primitive = primitive && slow_pow(g, order / p) != 1;
      if (primitive) {
        exp_.resize(order);
        log_.assign(size_, 0);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < order; ++i) {
          exp_[i] = x;
          log_[x] = i;
          x = slow_mul(x, g);
        }
        break;
      }
    }
    KNOTVAR_ASSERT(!exp_.empty(), "no primitive element");
  }

  const FieldCtx& base() const { return *f_; }
  std::uint32_t size() const { return size_; }
  std::uint32_t order() const { return size_ - 1; }
  bool in_base(std::uint32_t z) const { return z < q_; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    return f_->add(x % q_, y % q_) + q_ * f_->add(x / q_, y / q_);
  }
  std::uint32_t neg(std::uint32_t x) const { return f_->neg(x % q_) + q_ * f_->neg(x / q_); }
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return add(x, neg(y)); }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    if (x == 0 || y == 0) return 0;
    return exp_[(std::uint64_t{log_[x]} + log_[y]) % order()];
  }
  std::uint32_t inv(std::uint32_t x) const {
    if (x == 0) throw std::domain_error("inverse of zero");
    return exp_[(order() - log_[x]) % order()];
  }
  std::uint32_t div(std::uint32_t x, std::uint32_t y) const { return mul(x, inv(y)); }
  std::uint32_t log(std::uint32_t x) const {
    if (x == 0) throw std::domain_error("log of zero");
    return log_[x];
  }
  std::uint32_t exp(std::int64_t e) const {
    std::int64_t o = order();
    return exp_[static_cast<std::size_t>(((e % o) + o) % o)];
  }
  std::uint32_t pow(std::uint32_t x, std::int64_t e) const {
    if (x == 0) {
      if (e < 0) throw std::domain_error("negative power of zero");
      return e == 0 ? 1 : 0;
    }
    std::int64_t o = order();
    return exp(static_cast<std::int64_t>((static_cast<__int128>(log_[x]) * (e % o)) % o));
  }
  std::uint32_t frobenius(std::uint32_t x) const { return pow(x, q_); }
  /// x^k == 1 for x != 0.
  bool is_root_of_unity(std::uint32_t x, std::uint64_t k) const {
    return (static_cast<unsigned __int128>(log(x)) * k) % order() == 0;
  }

  std::string format(std::uint32_t z) const {
    if (in_base(z)) return f_->format(z);
    return f_->format(z % q_) + "+" + f_->format(z / q_) + "*y";
  }

 private:
  std::uint32_t slow_mul(std::uint32_t x, std::uint32_t y) const {
    const FieldCtx& f = *f_;
    Code u1 = x % q_, v1 = x / q_, u2 = y % q_, v2 = y / q_;
    Code vv = f.mul(v1, v2);
    Code u = f.add(f.mul(u1, u2), f.mul(r_, vv));
    Code v = f.add(f.add(f.mul(u1, v2), f.mul(u2, v1)), f.mul(s_, vv));
    return u + q_ * v;
  }
  std::uint32_t slow_pow(std::uint32_t x, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1u) r = slow_mul(r, x);
      x = slow_mul(x, x);
      e >>= 1u;
    }
    return r;
  }

  Field f_;
  std::uint32_t q_ = 0, size_ = 0;
  Code s_ = 0, r_ = 0;
  std::vector<std::uint32_t> exp_, log_;
};

struct StratumLabel {
  StratumFamily family = StratumFamily::B2;
  bool twisted = false;  // eigendata defined over F_{q^2} only

  unsigned fiber_exp() const { return fiber_exponent(family); }
  std::string twist_name() const { return twisted ? "quadratic" : "split"; }
  std::string str() const { return std::string(family_name(family)) + "/" + twist_name(); }
  friend bool operator==(const StratumLabel&, const StratumLabel&) = default;
};

/// Eigenvalues are F_{q^2} codes (QuadExt encoding).
struct EigenData {
  std::array<std::uint32_t, 2> eig_a{}, eig_b{};
  bool diag_a = false, diag_b = false;
  bool rational_a = false, rational_b = false;
  bool omega_scalar = false;
  Code omega = 0;  // (0,0)-entry of A0^n, meaningful when omega_scalar
};

struct Classification {
  StratumLabel label;
  EigenData eigen;
};

namespace detail {

using Vec2q = std::array<std::uint32_t, 2>;

struct MatInfo {
  Mat2 M;
  bool scalar = false;
  bool distinct = false;
  std::array<std::uint32_t, 2> eig{};
  std::array<Vec2q, 2> lines{};
  int nlines = 0;
};

/// Roots of x^2 - T x + D over F_{q^2}, indexed by T + q D.
class RootTable {
 public:
  explicit RootTable(const QuadExt& E) : q_(E.base().q()), roots_(std::size_t{q_} * q_, {0, 0}) {
    const FieldCtx& f = E.base();
    for (std::uint32_t z = 1; z < E.size(); ++z) {
      if (E.in_base(z)) {
        for (Code w = z; w < q_; ++w) put(f.add(z, w), f.mul(z, w), z, w);
      } else {
        std::uint32_t c = E.frobenius(z);
        if (z < c) put(E.add(z, c), E.mul(z, c), z, c);
      }
    }
  }
  const std::array<std::uint32_t, 2>& roots(Code T, Code D) const { return roots_[T + std::size_t{q_} * D]; }

 private:
  void put(std::uint32_t T, std::uint32_t D, std::uint32_t a, std::uint32_t b) {
    KNOTVAR_ASSERT(T < q_ && D < q_, "root table index");
    roots_[T + std::size_t{q_} * D] = {a, b};
  }
  std::uint32_t q_;
  std::vector<std::array<std::uint32_t, 2>> roots_;
};

}  // namespace detail

/// Shared context for classifying pairs over one field and one relation.
class StrataContext {
 public:
  StrataContext(Field f, std::int64_t n, std::int64_t m)
      : f_(std::move(f)), E_(f_), roots_(E_), n_(n), m_(m) {
    if (n < 1 || m < 1) throw std::invalid_argument("exponents must be positive");
    std::tie(a_, b_) = bezout(m, n);
  }

  const FieldCtx& field() const { return *f_; }
  const QuadExt& ext() const { return E_; }
  std::int64_t n() const { return n_; }
  std::int64_t m() const { return m_; }

  detail::MatInfo info(const Mat2& M) const {
    const FieldCtx& f = *f_;
    detail::MatInfo r;
    r.M = M;
    r.scalar = mat2::is_scalar(M);
    r.eig = roots_.roots(mat2::trace(f, M), mat2::det(f, M));
    r.distinct = r.eig[0] != r.eig[1];
    if (r.scalar) return r;
    for (int i = 0; i < (r.distinct ? 2 : 1); ++i) {
      std::uint32_t l = r.eig[i];
      detail::Vec2q v{M.b, E_.sub(l, M.a)};
      if (v[0] == 0 && v[1] == 0) v = {E_.sub(l, M.d), M.c};
      r.lines[r.nlines++] = v;
    }
    return r;
  }

  /// t = lambda^a eta^b in F_{q^2}.
  std::uint32_t cusp_t(std::uint32_t lambda, std::uint32_t eta) const {
    return E_.mul(E_.pow(lambda, a_), E_.pow(eta, b_));
  }

  /// t in Omega computed in F_{q^2}: t^{nm} = 1, t^n != 1, t^m != 1.
  bool in_omega(std::uint32_t t) const {
    auto nn = static_cast<std::uint64_t>(n_), mm = static_cast<std::uint64_t>(m_);
    return E_.is_root_of_unity(t, nn * mm) && !E_.is_root_of_unity(t, nn) && !E_.is_root_of_unity(t, mm);
  }

  Classification classify(const detail::MatInfo& A, const detail::MatInfo& B) const {
    Classification c;
    EigenData& e = c.eigen;
    e.eig_a = A.eig;
    e.eig_b = B.eig;
    e.diag_a = A.scalar || A.distinct;
    e.diag_b = B.scalar || B.distinct;
    e.rational_a = E_.in_base(A.eig[0]) && E_.in_base(A.eig[1]);
    e.rational_b = E_.in_base(B.eig[0]) && E_.in_base(B.eig[1]);
    const Mat2 An = mat2::pow(*f_, A.M, static_cast<std::uint64_t>(n_));
    e.omega_scalar = mat2::is_scalar(An);
    e.omega = An.a;

    if (A.scalar && B.scalar) {
      std::uint32_t t = cusp_t(A.M.a, B.M.a);
      c.label = {in_omega(t) ? StratumFamily::B1 : StratumFamily::B2, !E_.in_base(t)};
      return c;
    }
    const detail::Vec2q* common = nullptr;
    if (A.scalar) {
      common = &B.lines[0];
    } else if (B.scalar) {
      common = &A.lines[0];
    } else {
      for (int i = 0; i < A.nlines && !common; ++i)
        if (invariant(B.M, A.lines[i])) common = &A.lines[i];
    }
    if (common) {
      std::uint32_t l1 = eigenvalue_on(A.M, *common), h1 = eigenvalue_on(B.M, *common);
      std::uint32_t t1 = cusp_t(l1, h1);
      std::uint32_t l2 = E_.sub(mat2::trace(*f_, A.M), l1), h2 = E_.sub(mat2::trace(*f_, B.M), h1);
      if (e.diag_a && e.diag_b && !A.scalar && !B.scalar && shared_lines(A, B) == 1) {
        if (!e.omega_scalar || e.omega != 1) {
          c.label.family = StratumFamily::D3;
        } else {
          int ones = (l1 == 1) + (l2 == 1) + (h1 == 1) + (h2 == 1);
          bool both_on_common = l1 == 1 && h1 == 1;
          c.label.family = ones == 0 ? StratumFamily::D1
                           : (ones == 1 || both_on_common) ? StratumFamily::D2
                                                           : StratumFamily::D3;
        }
        c.label.twisted = !E_.in_base(t1);
        return c;
      }
      if (e.diag_a && e.diag_b) {
        std::uint32_t t2 = cusp_t(l2, h2);
        int k = static_cast<int>(in_omega(t1)) + static_cast<int>(in_omega(t2));
        static constexpr StratumFamily fam[] = {StratumFamily::A3, StratumFamily::A2, StratumFamily::A1};
        c.label = {fam[k], !E_.in_base(t1)};
      } else {
        c.label = {in_omega(t1) ? StratumFamily::C1 : StratumFamily::C2, !E_.in_base(t1)};
      }
      return c;
    }
    c.label.twisted = !(e.rational_a && e.rational_b);
    if (!e.omega_scalar || e.omega != 1) {
      c.label.family = StratumFamily::IRR5;
    } else {
      bool a1 = A.eig[0] == 1 || A.eig[1] == 1, b1 = B.eig[0] == 1 || B.eig[1] == 1;
      c.label.family = a1 ? (b1 ? StratumFamily::IRR4 : StratumFamily::IRR3)
                          : (b1 ? StratumFamily::IRR2 : StratumFamily::IRR1);
    }
    return c;
  }

 private:
  detail::Vec2q apply(const Mat2& M, const detail::Vec2q& v) const {
    return {E_.add(E_.mul(M.a, v[0]), E_.mul(M.b, v[1])), E_.add(E_.mul(M.c, v[0]), E_.mul(M.d, v[1]))};
  }
  int shared_lines(const detail::MatInfo& A, const detail::MatInfo& B) const {
    int k = 0;
    for (int i = 0; i < A.nlines; ++i) k += invariant(B.M, A.lines[i]);
    return k;
  }
  bool invariant(const Mat2& M, const detail::Vec2q& v) const {
    auto w = apply(M, v);
    return E_.mul(w[0], v[1]) == E_.mul(w[1], v[0]);
  }
  std::uint32_t eigenvalue_on(const Mat2& M, const detail::Vec2q& v) const {
    auto w = apply(M, v);
    return v[0] != 0 ? E_.div(w[0], v[0]) : E_.div(w[1], v[1]);
  }

  Field f_;
  QuadExt E_;
  detail::RootTable roots_;
  std::int64_t n_, m_, a_ = 1, b_ = 0;
};

/// Classifies one pair; throws when A0^n != B0^m.
inline Classification classify(const Field& f, const Mat2& A0, const Mat2& B0, std::int64_t n, std::int64_t m) {
  const FieldCtx& F = *f;
  if (mat2::det(F, A0) == 0 || mat2::det(F, B0) == 0) throw std::invalid_argument("classify: singular matrix");
  if (!(mat2::pow(F, A0, static_cast<std::uint64_t>(n)) == mat2::pow(F, B0, static_cast<std::uint64_t>(m))))
    throw std::invalid_argument("classify: A0^n != B0^m");
  StrataContext ctx(f, n, m);
  return ctx.classify(ctx.info(A0), ctx.info(B0));
}

struct StratumRow {
  StratumLabel label;
  std::uint64_t base_pairs = 0;
  BigInt points;  // base_pairs * q^fiber_exp
};

struct SchurReport {
  std::uint64_t irr_pairs = 0;
  std::uint64_t twisted_irr_pairs = 0;
  std::uint64_t nonscalar_power = 0;  // A0^n not scalar
  std::uint64_t not_diagonalizable = 0;
  std::uint64_t repeated_eigenvalues = 0;
  bool structural_ok() const { return nonscalar_power == 0 && not_diagonalizable == 0 && repeated_eigenvalues == 0; }
};

struct StratifiedResult {
  std::uint32_t q = 0;
  std::int64_t n = 0, m = 0;
  std::vector<StratumRow> rows;  // every label, ordered family then twist
  BigInt total_points;
  BigInt kernel_total;                   // sum of q^dim Ker(Lambda) computed directly
  std::uint64_t exponent_mismatches = 0;  // pairs whose label exponent differs from dim Ker
  SchurReport schur;

  const StratumRow& row(StratumFamily f, bool twisted) const {
    return rows[static_cast<std::size_t>(f) * 2 + (twisted ? 1 : 0)];
  }
  std::uint64_t base_pairs(StratumFamily f) const { return row(f, false).base_pairs + row(f, true).base_pairs; }
  BigInt points(StratumFamily f) const { return row(f, false).points + row(f, true).points; }
};

namespace detail {

struct StrataTally {
  std::array<std::uint64_t, 2 * kAllFamilies.size()> base{};
  KernelHistogram kernel{};
  std::uint64_t mismatches = 0;
  SchurReport schur;

  void merge(const StrataTally& o) {
    for (std::size_t i = 0; i < base.size(); ++i) base[i] += o.base[i];
    for (std::size_t i = 0; i < kernel.size(); ++i) kernel[i] += o.kernel[i];
    mismatches += o.mismatches;
    schur.irr_pairs += o.schur.irr_pairs;
    schur.twisted_irr_pairs += o.schur.twisted_irr_pairs;
    schur.nonscalar_power += o.schur.nonscalar_power;
    schur.not_diagonalizable += o.schur.not_diagonalizable;
    schur.repeated_eigenvalues += o.schur.repeated_eigenvalues;
  }
};

inline void check_strata_domain(const FieldCtx& f, std::int64_t n, std::int64_t m, bool force,
                                std::uint32_t max_q) {
  if (f.q() > max_q)
    throw std::out_of_range("stratified count: q = " + std::to_string(f.q()) + " exceeds " + std::to_string(max_q));
  if (n < 1 || m < 1) throw std::invalid_argument("exponents must be positive");
  if (force) return;
  const auto p = static_cast<std::int64_t>(f.p());
  if (p == 2 || n % p == 0 || m % p == 0) throw HypothesisError("stratified count needs char not dividing 2nm");
  if (n % 2 == 0 || m % 2 == 0) throw HypothesisError("stratified count needs n, m odd");
  if (std::gcd(n, m) != 1) throw HypothesisError("stratified count needs gcd(n,m) = 1");
}

}  // namespace detail

/// Classifies every linear pair with A0^n = B0^m and tallies per label.
inline StratifiedResult stratified_count(const Field& field, std::int64_t n, std::int64_t m,
                                         const CountOptions& opt = {}, bool force = false) {
  const FieldCtx& f = *field;
  detail::check_strata_domain(f, n, m, force, opt.reduced_max_q);
  StrataContext ctx(field, n, m);
  std::vector<Mat2> gl2 = gl2_elements(f);
  std::vector<detail::MatInfo> info;
  std::vector<Mat2> phin, phim;
  info.reserve(gl2.size());
  std::vector<std::pair<std::uint64_t, std::uint32_t>> ka, kb;
  for (std::uint32_t i = 0; i < gl2.size(); ++i) {
    info.push_back(ctx.info(gl2[i]));
    phin.push_back(mat2::phi(f, gl2[i], static_cast<std::uint64_t>(n)));
    phim.push_back(mat2::phi(f, gl2[i], static_cast<std::uint64_t>(m)));
    ka.emplace_back(mat2::encode(f, mat2::pow(f, gl2[i], static_cast<std::uint64_t>(n))), i);
    kb.emplace_back(mat2::encode(f, mat2::pow(f, gl2[i], static_cast<std::uint64_t>(m))), i);
  }
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  std::vector<std::array<std::size_t, 4>> buckets;
  for (std::size_t i = 0, j = 0; i < ka.size() && j < kb.size();) {
    if (ka[i].first < kb[j].first) {
      ++i;
    } else if (kb[j].first < ka[i].first) {
      ++j;
    } else {
      std::size_t i1 = i, j1 = j;
      while (i1 < ka.size() && ka[i1].first == ka[i].first) ++i1;
      while (j1 < kb.size() && kb[j1].first == kb[j].first) ++j1;
      buckets.push_back({i, i1, j, j1});
      i = i1;
      j = j1;
    }
  }
  detail::report(opt, "stratify: q=" + std::to_string(f.q()) + ", " + std::to_string(buckets.size()) + " buckets");

  auto tally = parallel_reduce<detail::StrataTally>(
      buckets.size(), opt.threads, detail::StrataTally{},
      [&](std::size_t bi, detail::StrataTally& t) {
        const auto& bk = buckets[bi];
        for (std::size_t i = bk[0]; i < bk[1]; ++i) {
          const auto& A = info[ka[i].second];
          for (std::size_t j = bk[2]; j < bk[3]; ++j) {
            const auto& B = info[kb[j].second];
            Classification c = ctx.classify(A, B);
            t.base[static_cast<std::size_t>(c.label.family) * 2 + (c.label.twisted ? 1 : 0)]++;
            unsigned kd = 4 - block_rank(f, phin[ka[i].second], phim[kb[j].second]);
            t.kernel[kd]++;
            if (kd != c.label.fiber_exp()) t.mismatches++;
            if (is_irreducible_family(c.label.family)) {
              t.schur.irr_pairs++;
              if (c.label.twisted) t.schur.twisted_irr_pairs++;
              if (!c.eigen.omega_scalar) t.schur.nonscalar_power++;
              if (!(c.eigen.diag_a && c.eigen.diag_b)) t.schur.not_diagonalizable++;
              if (c.eigen.eig_a[0] == c.eigen.eig_a[1] || c.eigen.eig_b[0] == c.eigen.eig_b[1])
                t.schur.repeated_eigenvalues++;
            }
          }
        }
      },
      [](detail::StrataTally& into, const detail::StrataTally& from) { into.merge(from); });

  StratifiedResult r;
  r.q = f.q();
  r.n = n;
  r.m = m;
  const BigInt q = f.q();
  for (auto fam : kAllFamilies)
    for (bool tw : {false, true}) {
      StratumRow row;
      row.label = {fam, tw};
      row.base_pairs = tally.base[static_cast<std::size_t>(fam) * 2 + (tw ? 1 : 0)];
      row.points = BigInt(row.base_pairs) * ipow(q, fiber_exponent(fam));
      r.total_points += row.points;
      r.rows.push_back(row);
    }
  for (unsigned k = 0; k < tally.kernel.size(); ++k) r.kernel_total += BigInt(tally.kernel[k]) * ipow(q, k);
  r.exponent_mismatches = tally.mismatches;
  r.schur = tally.schur;
  return r;
}

/// CSV: label,twist,base_pairs,fiber_exp,points.
inline void write_stratified_csv(std::ostream& os, const StratifiedResult& r) {
  os << "label,twist,base_pairs,fiber_exp,points\n";
  for (const auto& row : r.rows)
    os << family_name(row.label.family) << ',' << row.label.twist_name() << ',' << row.base_pairs << ','
       << row.label.fiber_exp() << ',' << to_decimal(row.points) << '\n';
}

/// Runs the stratification and enforces the scalar-power assertion on irreducible pairs.
inline SchurReport schur_audit(const Field& f, std::int64_t n, std::int64_t m, const CountOptions& opt = {},
                               bool force = false) {
  SchurReport rep = stratified_count(f, n, m, opt, force).schur;
  if (rep.nonscalar_power != 0)
    throw std::logic_error("schur_audit: " + std::to_string(rep.nonscalar_power) +
                           " irreducible pairs with non-scalar A0^n");
  return rep;
}

struct Agl1Strata {
  BigInt outside_omega;  // (q - 1 - |Omega|) q
  BigInt inside_omega;   // |Omega| q^2
  BigInt total() const { return outside_omega + inside_omega; }
};

/// AGL1 points split by whether the cusp parameter lies in Omega.
inline Agl1Strata agl1_stratified_count(const FieldCtx& f, std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("exponents must be positive");
  if (std::gcd(n, m) != 1) throw HypothesisError("agl1 strata need gcd(n,m) = 1");
  if (n % f.p() == 0 || m % f.p() == 0) throw HypothesisError("agl1 strata need char not dividing nm");
  Agl1Strata r;
  const BigInt q = f.q();
  for (Code a = 1; a < f.q(); ++a)
    for (Code b = 1; b < f.q(); ++b) {
      if (f.pow(a, n) != f.pow(b, m)) continue;
      Code t = cusp_inv(f, m, n, a, b);
      if (in_omega(f, t, m, n))
        r.inside_omega += q * q;
      else
        r.outside_omega += q;
    }
  return r;
}

struct PmAudit {
  std::uint32_t q = 0;
  std::uint64_t stable_point_pairs = 0, expected_point_pairs = 0;
  std::uint64_t stable_line_pairs = 0, expected_line_pairs = 0;
  std::uint64_t regular_semisimple = 0, expected_regular_semisimple = 0;
  bool ok() const {
    return stable_point_pairs == expected_point_pairs && stable_line_pairs == expected_line_pairs &&
           regular_semisimple == expected_regular_semisimple;
  }
};

/// Frobenius-orbit censuses for the symmetric-square lemmas.
inline PmAudit pm_class_audit(const Field& field, std::uint32_t max_q = kReducedMaxQ) {
  const FieldCtx& f = *field;
  if (f.q() > max_q) throw std::out_of_range("pm_class_audit: q exceeds " + std::to_string(max_q));
  QuadExt E(field);
  detail::RootTable roots(E);
  PmAudit a;
  const std::uint64_t q = f.q();
  a.q = f.q();
  a.expected_point_pairs = (q - 1) * (q - 1);
  a.expected_line_pairs = q * q;
  a.expected_regular_semisimple = q * q * (q - 1) * (q - 1) - q * (q - 1);

  for (std::uint32_t x = 1; x < E.size(); ++x)
    for (std::uint32_t y = x + 1; y < E.size(); ++y) {
      std::uint32_t fx = E.frobenius(x), fy = E.frobenius(y);
      if ((fx == x && fy == y) || (fx == y && fy == x)) a.stable_point_pairs++;
    }

  // P^1(F_{q^2}): index z < q^2 is (1:z), index q^2 is infinity.
  const std::uint32_t inf = E.size();
  auto frob_line = [&](std::uint32_t L) { return L == inf ? inf : E.frobenius(L); };
  for (std::uint32_t L1 = 0; L1 <= inf; ++L1)
    for (std::uint32_t L2 = L1 + 1; L2 <= inf; ++L2) {
      std::uint32_t f1 = frob_line(L1), f2 = frob_line(L2);
      if ((f1 == L1 && f2 == L2) || (f1 == L2 && f2 == L1)) a.stable_line_pairs++;
    }

  for (const Mat2& M : gl2_elements(f)) {
    const auto& r = roots.roots(mat2::trace(f, M), mat2::det(f, M));
    if (r[0] != r[1]) a.regular_semisimple++;
  }
  return a;
}

}  // namespace knotvar
