#pragma once

// Exact point counts of {(A,B) in G^2 : A^n = B^m} over finite fields.

#include "knotvar/bigint.hpp"
#include "knotvar/closedform.hpp"
#include "knotvar/ffield.hpp"
#include "knotvar/knot.hpp"
#include "knotvar/matgroups.hpp"
#include "knotvar/parallel.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace knotvar {

inline constexpr std::uint64_t kDefaultNaiveBound = 100'000'000;
inline constexpr std::uint64_t kFiberBound = std::uint64_t{1} << 27;
inline constexpr std::uint32_t kReducedMaxQ = 64;

struct CountOptions {
  unsigned threads = 1;
  std::ostream* progress = nullptr;  // single-line updates, typically std::cerr
  std::uint64_t naive_bound = kDefaultNaiveBound;
  std::uint32_t reduced_max_q = kReducedMaxQ;
};

namespace detail {

inline void report(const CountOptions& o, const std::string& s) {
  if (o.progress) *o.progress << s << '\n' << std::flush;
}

inline void check_exponents(std::uint64_t n, std::uint64_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("exponents must be positive");
}

}  // namespace detail

/// Double loop over G x G.
inline BigInt count_naive(const GroupDescriptor& d, std::uint64_t n, std::uint64_t m, const CountOptions& opt = {}) {
  detail::check_exponents(n, m);
  const BigInt ord = d.order();
  if (ord * ord > BigInt(opt.naive_bound))
    throw std::out_of_range("count_naive: |G|^2 = " + to_decimal(ord * ord) + " exceeds bound " +
                            std::to_string(opt.naive_bound));
  std::vector<GroupElement> elems = genumerate(d);
  std::vector<std::uint64_t> pn, pm;
  pn.reserve(elems.size());
  pm.reserve(elems.size());
  for (const auto& g : elems) {
    pn.push_back(gencode(d, gpow(d, g, n)));
    pm.push_back(gencode(d, gpow(d, g, m)));
  }
  detail::report(opt, "count_naive: " + d.name() + " |G|=" + to_decimal(ord));
  std::uint64_t total = parallel_reduce<std::uint64_t>(
      pn.size(), opt.threads, 0,
      [&](std::size_t i, std::uint64_t& acc) {
        for (std::uint64_t b : pm) acc += (pn[i] == b);
      },
      [](std::uint64_t& into, const std::uint64_t& from) { into += from; });
  return BigInt(total);
}

/// Meet in the middle on the n-th and m-th power maps.
inline BigInt count_power_fibers(const GroupDescriptor& d, std::uint64_t n, std::uint64_t m,
                                 const CountOptions& opt = {}) {
  detail::check_exponents(n, m);
  check_enumeration_bound(d, std::min<std::uint64_t>(kFiberBound, max_group_order()));
  std::unordered_map<std::uint64_t, std::uint64_t> fa;
  std::vector<std::uint64_t> bm;
  bm.reserve(static_cast<std::size_t>(d.order()));
  for_each_element(d, [&](const GroupElement& g) {
    ++fa[gencode(d, gpow(d, g, n))];
    bm.push_back(gencode(d, gpow(d, g, m)));
  });
  detail::report(opt, "count_power_fibers: " + d.name() + " " + std::to_string(fa.size()) + " n-th powers");
  BigInt total = 0;
  for (std::uint64_t c : bm) {
    auto it = fa.find(c);
    if (it != fa.end()) total += it->second;
  }
  return total;
}

/// Rank over F_q of the 2x4 block [P | -Q].
inline unsigned block_rank(const FieldCtx& f, const Mat2& P, const Mat2& Q) {
  const Code c[2][4] = {{P.a, P.b, Q.a, Q.b}, {P.c, P.d, Q.c, Q.d}};
  bool any = false;
  for (int j = 0; j < 4; ++j) any = any || c[0][j] != 0 || c[1][j] != 0;
  if (!any) return 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (f.mul(c[0][i], c[1][j]) != f.mul(c[0][j], c[1][i])) return 2;
  return 1;
}

/// dim Ker of (alpha, beta) -> Phi_n(A0) alpha - Phi_m(B0) beta.
inline unsigned kernel_dim(const FieldCtx& f, const Mat2& A0, const Mat2& B0, std::uint64_t n, std::uint64_t m) {
  detail::check_exponents(n, m);
  if (mat2::det(f, A0) == 0 || mat2::det(f, B0) == 0) throw std::invalid_argument("kernel_dim: singular matrix");
  if (!(mat2::pow(f, A0, n) == mat2::pow(f, B0, m))) throw std::invalid_argument("kernel_dim: A0^n != B0^m");
  return 4 - block_rank(f, mat2::phi(f, A0, n), mat2::phi(f, B0, m));
}

/// Histogram of dim Ker(Lambda) over linear pairs, index = dimension.
using KernelHistogram = std::array<std::uint64_t, 5>;

namespace detail {

struct PowerEntry {
  std::uint64_t key;  // code of the power
  std::uint64_t phi;  // code of Phi
  std::uint64_t mult;
  friend bool operator<(const PowerEntry& x, const PowerEntry& y) {
    return x.key != y.key ? x.key < y.key : x.phi < y.phi;
  }
};

inline std::vector<PowerEntry> compress(std::vector<PowerEntry> v) {
  std::sort(v.begin(), v.end());
  std::vector<PowerEntry> out;
  for (const auto& e : v) {
    if (!out.empty() && out.back().key == e.key && out.back().phi == e.phi)
      out.back().mult += e.mult;
    else
      out.push_back(e);
  }
  return out;
}

inline std::vector<PowerEntry> power_table(const FieldCtx& f, unsigned rank, std::uint64_t e) {
  std::vector<PowerEntry> v;
  if (rank == 1) {
    for (Code a = 1; a < f.q(); ++a) v.push_back({f.pow(a, static_cast<std::int64_t>(e)), phi_scalar(f, a, e), 1});
  } else {
    for (const Mat2& a : gl2_elements(f))
      v.push_back({mat2::encode(f, mat2::pow(f, a, e)), mat2::encode(f, mat2::phi(f, a, e)), 1});
  }
  return compress(std::move(v));
}

struct Bucket {
  std::size_t a0, a1, b0, b1;
};

inline std::vector<Bucket> match_buckets(const std::vector<PowerEntry>& A, const std::vector<PowerEntry>& B) {
  std::vector<Bucket> out;
  std::size_t i = 0, j = 0;
  while (i < A.size() && j < B.size()) {
    if (A[i].key < B[j].key) {
      ++i;
    } else if (B[j].key < A[i].key) {
      ++j;
    } else {
      std::size_t i1 = i, j1 = j;
      while (i1 < A.size() && A[i1].key == A[i].key) ++i1;
      while (j1 < B.size() && B[j1].key == B[j].key) ++j1;
      out.push_back({i, i1, j, j1});
      i = i1;
      j = j1;
    }
  }
  return out;
}

}  // namespace detail

/// Kernel-dimension histogram over {(A0,B0) in GL_r^2 : A0^n = B0^m}, r in {1,2}.
inline KernelHistogram kernel_histogram(const FieldCtx& f, unsigned rank, std::uint64_t n, std::uint64_t m,
                                        const CountOptions& opt = {}) {
  detail::check_exponents(n, m);
  if (rank != 1 && rank != 2) throw std::invalid_argument("rank must be 1 or 2");
  if (rank == 2 && f.q() > opt.reduced_max_q)
    throw std::out_of_range("reduced count: q = " + std::to_string(f.q()) + " exceeds bound " +
                            std::to_string(opt.reduced_max_q));
  auto A = detail::power_table(f, rank, n);
  auto B = detail::power_table(f, rank, m);
  auto buckets = detail::match_buckets(A, B);
  detail::report(opt, "reduced: q=" + std::to_string(f.q()) + " rank " + std::to_string(rank) + ", " +
                          std::to_string(buckets.size()) + " buckets");
  return parallel_reduce<KernelHistogram>(
      buckets.size(), opt.threads, KernelHistogram{},
      [&](std::size_t idx, KernelHistogram& h) {
        const auto& bk = buckets[idx];
        std::uint64_t b_total = 0;
        for (std::size_t j = bk.b0; j < bk.b1; ++j) b_total += B[j].mult;
        for (std::size_t i = bk.a0; i < bk.a1; ++i) {
          const auto& a = A[i];
          if (rank == 1) {
            for (std::size_t j = bk.b0; j < bk.b1; ++j) {
              unsigned r = (a.phi != 0 || B[j].phi != 0) ? 1 : 0;
              h[2 - r] += a.mult * B[j].mult;
            }
            continue;
          }
          const Mat2 P = mat2::decode(f, a.phi);
          if (mat2::det(f, P) != 0) {
            h[2] += a.mult * b_total;
            continue;
          }
          for (std::size_t j = bk.b0; j < bk.b1; ++j)
            h[4 - block_rank(f, P, mat2::decode(f, B[j].phi))] += a.mult * B[j].mult;
        }
      },
      [](KernelHistogram& into, const KernelHistogram& from) {
        for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
      });
}

/// Counts via linear parts: affine groups contribute q^dim Ker(Lambda) per linear pair.
inline BigInt count_reduced(const GroupDescriptor& d, std::uint64_t n, std::uint64_t m, const CountOptions& opt = {}) {
  const FieldCtx& f = d.field();
  KernelHistogram h = kernel_histogram(f, d.rank(), n, m, opt);
  BigInt total = 0;
  for (unsigned k = 0; k < h.size(); ++k) total += BigInt(h[k]) * (d.affine() ? ipow(BigInt(f.q()), k) : BigInt(1));
  return total;
}

inline BigInt count_agl2_reduced(const Field& f, std::uint64_t n, std::uint64_t m, const CountOptions& opt = {}) {
  return count_reduced(GroupDescriptor::agl2(f), n, m, opt);
}

enum class Tier { Naive, Fibers, Reduced };

inline Tier parse_tier(const std::string& s) {
  if (s == "naive") return Tier::Naive;
  if (s == "fibers") return Tier::Fibers;
  if (s == "reduced") return Tier::Reduced;
  throw std::invalid_argument("unknown tier: " + s);
}

inline BigInt count(const GroupDescriptor& d, std::uint64_t n, std::uint64_t m, Tier tier,
                    const CountOptions& opt = {}) {
  switch (tier) {
    case Tier::Naive: return count_naive(d, n, m, opt);
    case Tier::Fibers: return count_power_fibers(d, n, m, opt);
    case Tier::Reduced: return count_reduced(d, n, m, opt);
  }
  throw std::invalid_argument("invalid tier");
}

/// Exact AGL2 count minus the closed form, for the relation A^n = B^m.
inline BigInt formula_gap(const Field& f, std::uint64_t n, std::uint64_t m, bool force = false,
                          const CountOptions& opt = {}) {
  const auto mi = static_cast<std::int64_t>(m), ni = static_cast<std::int64_t>(n);
  if (!force && !hypotheses_ok(f->q(), mi, ni, GroupKind::AGL2))
    throw HypothesisError("q=" + std::to_string(f->q()) + ": " + hypothesis_violations(f->q(), mi, ni, GroupKind::AGL2));
  return count_agl2_reduced(f, n, m, opt) - finite_value(motive_agl2(mi, ni, force), f->q(), mi, ni);
}

}  // namespace knotvar
