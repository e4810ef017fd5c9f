#pragma once

// Trend classification of point counts across prime powers.

#include "knotvar/bigint.hpp"
#include "knotvar/closedform.hpp"
#include "knotvar/ffield.hpp"
#include "knotvar/knot.hpp"
#include "knotvar/matgroups.hpp"
#include "knotvar/parallel.hpp"
#include "knotvar/repcount.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotvar {

inline constexpr std::uint64_t kPrimePowerLimit = 10'000'000;
inline constexpr std::uint64_t kEngineCrossover = 64;
inline constexpr std::uint64_t kAgl2TrendCap = 31;

/// All p^k <= limit in increasing order.
inline std::vector<PrimePower> prime_powers(std::uint64_t limit) {
  if (limit > kPrimePowerLimit) throw std::out_of_range("prime_powers: limit exceeds 10^7");
  std::vector<PrimePower> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t j = p * p; j <= limit; j += p) composite[j] = true;
    std::uint64_t q = p;
    for (unsigned k = 1;; ++k) {
      out.push_back({q, p, k});
      if (q > limit / p) break;
      q *= p;
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.q < b.q; });
  return out;
}

struct TrendRecord {
  std::uint64_t q = 0, p = 0;
  unsigned k = 0;
  std::int64_t d_n = 0, d_m = 0;
  BigInt count;
  std::optional<BigInt> predicted;  // empty when the trend polynomial is undefined
  bool right_trend = false;
  bool clean = false;
  bool hypothesis_ok = false;
  std::string provenance;  // engine | formula
};

namespace detail {

inline Field field_for(const PrimePower& pp) { return make_field(pp.p, pp.k, 0, kPrimePowerLimit); }

inline std::optional<MotiveExpr> trend_motive(std::int64_t m, std::int64_t n, GroupKind group) {
  try {
    if (group == GroupKind::AGL1) return motive_agl1(m, n);
    return motive_agl2(m, n, true);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline std::optional<BigInt> predict(const std::optional<MotiveExpr>& e, std::uint64_t q, std::int64_t d_m,
                                     std::int64_t d_n) {
  if (!e) return std::nullopt;
  try {
    return specialize(*e, d_m, d_n).eval(BigInt(q));
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// One record per prime power q <= limit.
inline std::vector<TrendRecord> trend_scan(std::int64_t m, std::int64_t n, GroupKind group, std::uint64_t limit,
                                           const CountOptions& opt = {}, std::uint64_t crossover = kEngineCrossover) {
  if (m < 1 || n < 1) throw std::invalid_argument("m, n must be positive");
  if (group != GroupKind::AGL1 && group != GroupKind::AGL2)
    throw std::invalid_argument("trend scans support agl1 and agl2");
  if (group == GroupKind::AGL2 && limit > kAgl2TrendCap)
    throw std::out_of_range("agl2 trend scans are capped at q <= " + std::to_string(kAgl2TrendCap));
  const auto pps = prime_powers(limit);
  const auto motive = detail::trend_motive(m, n, group);
  CountOptions inner = opt;
  inner.threads = 1;
  inner.progress = nullptr;

  using Indexed = std::vector<std::pair<std::size_t, TrendRecord>>;
  Indexed all = parallel_reduce<Indexed>(
      pps.size(), opt.threads, Indexed{},
      [&](std::size_t i, Indexed& acc) {
        const PrimePower& pp = pps[i];
        TrendRecord r;
        r.q = pp.q;
        r.p = pp.p;
        r.k = pp.k;
        r.d_m = xi_over(pp.q, m);
        r.d_n = xi_over(pp.q, n);
        r.right_trend = (pp.q - 1) % static_cast<std::uint64_t>(m) == 0 &&
                        (pp.q - 1) % static_cast<std::uint64_t>(n) == 0;
        r.clean = is_clean(pp.q, m, n);
        r.hypothesis_ok = hypotheses_ok(pp.q, m, n, group) && std::gcd(m, n) == 1;
        r.predicted = std::gcd(m, n) == 1 ? detail::predict(motive, pp.q, r.d_m, r.d_n) : std::nullopt;
        const bool use_formula = group == GroupKind::AGL1 && r.hypothesis_ok && pp.q > crossover && r.predicted;
        if (use_formula) {
          r.count = *r.predicted;
          r.provenance = "formula";
        } else {
          Field f = detail::field_for(pp);
          GroupDescriptor d = group == GroupKind::AGL1 ? GroupDescriptor::agl1(f) : GroupDescriptor::agl2(f);
          r.count = count_reduced(d, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m), inner);
          r.provenance = "engine";
        }
        acc.emplace_back(i, std::move(r));
      },
      [](Indexed& into, Indexed& from) {
        for (auto& e : from) into.push_back(std::move(e));
      });
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<TrendRecord> out;
  out.reserve(all.size());
  for (auto& e : all) out.push_back(std::move(e.second));
  detail::report(opt, "trend_scan: " + std::to_string(out.size()) + " prime powers");
  return out;
}

inline void write_trend_csv(std::ostream& os, const std::vector<TrendRecord>& recs) {
  os << "q,p,k,d_n,d_m,count,predicted,right_trend,clean,hypothesis_ok,provenance\n";
  for (const auto& r : recs)
    os << r.q << ',' << r.p << ',' << r.k << ',' << r.d_n << ',' << r.d_m << ',' << to_decimal(r.count) << ','
       << (r.predicted ? to_decimal(*r.predicted) : std::string()) << ',' << (r.right_trend ? 1 : 0) << ','
       << (r.clean ? 1 : 0) << ',' << (r.hypothesis_ok ? 1 : 0) << ',' << r.provenance << '\n';
}

/// Gnuplot script plotting log(count) against log(q) from the CSV.
inline void write_gnuplot(std::ostream& os, const std::string& csv_path, std::int64_t m, std::int64_t n) {
  os << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set logscale xy\n"
     << "set xlabel 'q'\n"
     << "set ylabel '#Rep'\n"
     << "set title 'torus knot (" << m << "," << n << ")'\n"
     << "plot '" << csv_path << "' using 1:($8==1 ? $6 : 1/0) with points pt 7 title 'right trend', \\\n"
     << "     '" << csv_path << "' using 1:($8==0 ? $6 : 1/0) with points pt 6 title 'other trends'\n";
}

struct ExactFraction {
  BigInt num = 0, den = 1;
  std::string str() const { return to_decimal(num) + "/" + to_decimal(den); }
  bool less_than(std::int64_t a, std::int64_t b) const { return num * b < BigInt(a) * den; }
};

inline ExactFraction make_fraction(BigInt a, BigInt b) {
  if (b == 0) throw std::domain_error("zero denominator");
  BigInt g = big_gcd(a, b);
  if (g == 0) g = 1;
  return {a / g, b / g};
}

struct TrendClass {
  std::int64_t d_m = 0, d_n = 0;
  BigInt coeff;
  std::uint64_t count_points = 0;
};

struct DensityReport {
  std::int64_t m = 0, n = 0;
  std::uint64_t limit = 0;
  std::uint64_t total = 0, right = 0;
  ExactFraction right_trend_fraction;
  std::vector<TrendClass> trends;  // ordered by (d_m, d_n)
  std::vector<std::uint64_t> right_trend_witnesses;
  std::vector<TrendRecord> records;

  nlohmann::json summary() const {
    nlohmann::json j;
    j["trends"] = nlohmann::json::array();
    for (const auto& t : trends)
      j["trends"].push_back({{"d_m", t.d_m}, {"d_n", t.d_n}, {"coeff", to_decimal(t.coeff)}, {"count_points", t.count_points}});
    j["right_trend_fraction"] = right_trend_fraction.str();
    return j;
  }
};

/// AGL1 trend census: per-(d_m, d_n) multiplicities and the exact right-trend fraction.
inline DensityReport density_report(std::int64_t m, std::int64_t n, std::uint64_t limit, const CountOptions& opt = {}) {
  DensityReport rep;
  rep.m = m;
  rep.n = n;
  rep.limit = limit;
  rep.records = trend_scan(m, n, GroupKind::AGL1, limit, opt);
  std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> classes;
  for (const auto& r : rep.records) {
    ++rep.total;
    if (r.right_trend) {
      ++rep.right;
      rep.right_trend_witnesses.push_back(r.q);
    }
    ++classes[{r.d_m, r.d_n}];
  }
  for (const auto& [key, cnt] : classes) {
    auto [dm, dn] = key;
    rep.trends.push_back({dm, dn, BigInt(dm * dn - dm - dn + 2), cnt});
  }
  rep.right_trend_fraction = rep.total ? make_fraction(rep.right, rep.total) : ExactFraction{0, 1};
  return rep;
}

struct ResidueWitness {
  std::uint64_t p = 0;
  BigInt count;
  IntPoly trend;
};

struct ResidueReport {
  std::int64_t m = 0, n = 0;
  std::uint64_t modulus = 0, limit = 0;
  std::vector<ResidueWitness> class1, class2;  // p = 1 and p = 2 mod nm
  bool insufficient1 = false, insufficient2 = false;
  std::optional<bool> polynomials_distinct;  // set when both classes have a witness

  bool ok() const {
    return !insufficient1 && !insufficient2 && (!polynomials_distinct.has_value() || *polynomials_distinct ||
                                                 m <= 2 || n <= 2);
  }
};

/// First primes in the residue classes 1 and 2 modulo nm, with AGL1 counts and trends.
inline ResidueReport residue_evidence(std::int64_t m, std::int64_t n, std::uint64_t limit, std::size_t witnesses = 3) {
  if (m < 1 || n < 1 || std::gcd(m, n) != 1) throw std::invalid_argument("residue_evidence needs coprime m, n >= 1");
  const auto nm = static_cast<std::uint64_t>(m * n);
  if (nm >= limit) throw std::invalid_argument("residue_evidence needs nm < limit");
  ResidueReport rep;
  rep.m = m;
  rep.n = n;
  rep.modulus = nm;
  rep.limit = limit;
  const MotiveExpr motive = motive_agl1(m, n);
  for (const auto& pp : prime_powers(limit)) {
    if (pp.k != 1) continue;
    const std::uint64_t r = pp.p % nm;
    auto* bucket = r == 1 % nm ? &rep.class1 : r == 2 % nm ? &rep.class2 : nullptr;
    if (!bucket || bucket->size() >= witnesses) continue;
    ResidueWitness w;
    w.p = pp.p;
    w.trend = specialize(motive, xi_over(pp.p, m), xi_over(pp.p, n));
    if (hypotheses_ok(pp.p, m, n, GroupKind::AGL1)) {
      w.count = w.trend.eval(BigInt(pp.p));
    } else {
      w.count = count_reduced(GroupDescriptor::agl1(detail::field_for(pp)), static_cast<std::uint64_t>(n),
                              static_cast<std::uint64_t>(m));
    }
    bucket->push_back(std::move(w));
  }
  rep.insufficient1 = rep.class1.size() < witnesses;
  rep.insufficient2 = rep.class2.size() < witnesses;
  if (!rep.class1.empty() && !rep.class2.empty()) rep.polynomials_distinct = !(rep.class1[0].trend == rep.class2[0].trend);
  return rep;
}

}  // namespace knotvar
