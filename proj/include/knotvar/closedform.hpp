#pragma once

// Closed-form motives of AGL1/AGL2 representation varieties of torus knots,
// stratum by stratum, as exact expressions in q, xi_m, xi_n.

#include "knotvar/bigint.hpp"
#include "knotvar/exactpoly.hpp"
#include "knotvar/knot.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace knotvar {

/// Strata of Rep(GL2) pairs by reducibility type and kernel of the affine condition.
/// D1..D3 are reducible pairs of regular semisimple matrices sharing exactly one
/// eigenline (then A0^n = B0^m is scalar); they are absent from the published
/// decomposition.
enum class StratumFamily { IRR1, IRR2, IRR3, IRR4, IRR5, A1, A2, A3, B1, B2, C1, C2, D1, D2, D3 };

inline constexpr std::array<StratumFamily, 15> kAllFamilies = {
    StratumFamily::IRR1, StratumFamily::IRR2, StratumFamily::IRR3, StratumFamily::IRR4, StratumFamily::IRR5,
    StratumFamily::A1,   StratumFamily::A2,   StratumFamily::A3,   StratumFamily::B1,   StratumFamily::B2,
    StratumFamily::C1,   StratumFamily::C2,   StratumFamily::D1,   StratumFamily::D2,   StratumFamily::D3};

/// The twelve strata of the published decomposition.
inline constexpr std::array<StratumFamily, 12> kPublishedFamilies = {
    StratumFamily::IRR1, StratumFamily::IRR2, StratumFamily::IRR3, StratumFamily::IRR4,
    StratumFamily::IRR5, StratumFamily::A1,   StratumFamily::A2,   StratumFamily::A3,
    StratumFamily::B1,   StratumFamily::B2,   StratumFamily::C1,   StratumFamily::C2};

inline const char* family_name(StratumFamily f) {
  static constexpr const char* names[] = {"IRR1", "IRR2", "IRR3", "IRR4", "IRR5", "A1", "A2", "A3",
                                          "B1",   "B2",   "C1",   "C2",   "D1",   "D2", "D3"};
  return names[static_cast<int>(f)];
}

inline StratumFamily parse_family(const std::string& s) {
  for (auto f : kAllFamilies)
    if (s == family_name(f)) return f;
  throw std::invalid_argument("unknown stratum family: " + s);
}

/// dim Ker(Lambda) on the stratum.
inline unsigned fiber_exponent(StratumFamily f) {
  static constexpr unsigned e[] = {4, 3, 3, 2, 2, 4, 3, 2, 4, 2, 3, 2, 4, 3, 2};
  return e[static_cast<int>(f)];
}

inline bool is_irreducible_family(StratumFamily f) { return static_cast<int>(f) <= 4; }

inline char family_group(StratumFamily f) {
  if (is_irreducible_family(f)) return 'I';
  switch (f) {
    case StratumFamily::A1:
    case StratumFamily::A2:
    case StratumFamily::A3: return 'A';
    case StratumFamily::B1:
    case StratumFamily::B2: return 'B';
    case StratumFamily::C1:
    case StratumFamily::C2: return 'C';
    default: return 'D';
  }
}

namespace cf {

inline MotiveExpr Q() { return MotiveExpr::q(); }
inline MotiveExpr X() { return MotiveExpr::xi_m(); }
inline MotiveExpr Y() { return MotiveExpr::xi_n(); }
/// |Omega| = (xi_m - 1)(xi_n - 1).
inline MotiveExpr omega() { return (X() - 1) * (Y() - 1); }
/// [PGL2] = q^3 - q.
inline MotiveExpr pgl2() { return Q().pow(3) - Q(); }

inline void require_coprime(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("m, n must be positive");
  if (std::gcd(m, n) != 1) throw HypothesisError("m and n must be coprime");
}

inline void require_agl2_domain(std::int64_t m, std::int64_t n, bool force) {
  require_coprime(m, n);
  if (force) return;
  if (m % 2 == 0 || n % 2 == 0) throw HypothesisError("AGL2 closed form needs m, n odd");
  if (m < 3 || n < 3) throw HypothesisError("AGL2 closed form is only claimed for m, n >= 3 (use force)");
}

}  // namespace cf

/// (xi_m xi_n - xi_n - xi_m + 2)(q^2 - q).
inline MotiveExpr motive_agl1(std::int64_t m, std::int64_t n) {
  using namespace cf;
  require_coprime(m, n);
  return (X() * Y() - Y() - X() + 2) * (Q().pow(2) - Q());
}

/// The three-summand AGL2 expression, verbatim.
inline MotiveExpr motive_agl2(std::int64_t m, std::int64_t n, bool force = false) {
  using namespace cf;
  require_agl2_domain(m, n, force);
  const MotiveExpr q = Q(), x = X(), y = Y();
  MotiveExpr first = (q.pow(7) + q.pow(6) + q.pow(5) - 5 * q.pow(4) + 2 * q.pow(3)).divided_by(4);
  MotiveExpr second =
      ((x * y - x - y) * (q - 1).pow(2) * (q - 2) * (q + 1) * q.pow(3)).divided_by(4);
  MotiveExpr inner = 2 * (x * y - x - y + 2) * (q - 1) + (q - 1) * (q - 2) * ((x - 2) * (y - 2) * q + x * y - 4);
  MotiveExpr third = ((x - 1) * (y - 1) * (q.pow(5) - q.pow(3)) * inner).divided_by(4);
  return first + second + third;
}

/// Per-stratum AGL2 motive. A3 uses the un-expanded base
/// (q-1)^2 - [(Omega^2 - Delta)/Z2] - [Omega](q-1-[Omega]). D1..D3 are not part
/// of the published formula.
inline MotiveExpr stratum_motive(StratumFamily f, std::int64_t m, std::int64_t n) {
  using namespace cf;
  require_coprime(m, n);
  const MotiveExpr q = Q(), x = X(), y = Y(), w = omega();
  const MotiveExpr p1 = q.pow(3) - 2 * q.pow(2);  // [P^1 - {0,1,inf}] q^2
  switch (f) {
    case StratumFamily::IRR1:
      return ((y - 1) * (y - 2) * (x - 1) * (x - 2) * (q.pow(5) - 2 * q.pow(4)) * pgl2()).divided_by(4);
    case StratumFamily::IRR2:
      return ((y - 1) * (y - 2) * (x - 1) * (q.pow(4) - 2 * q.pow(3)) * pgl2()).divided_by(2);
    case StratumFamily::IRR3:
      return ((x - 1) * (y - 1) * (x - 2) * (q.pow(4) - 2 * q.pow(3)) * pgl2()).divided_by(2);
    case StratumFamily::IRR4:
      return w * p1 * pgl2();
    case StratumFamily::IRR5:
      return (pgl2() * p1 * w * (q - 1 - x * y)).divided_by(4);
    case StratumFamily::A1:
      return (w * (x * y - x - y) * q.pow(4) * (q.pow(2) + q)).divided_by(2);
    case StratumFamily::A2:
      return w * (q - x * y + x + y - 2) * q.pow(3) * (q.pow(2) + q);
    case StratumFamily::A3: {
      MotiveExpr base = (q - 1).pow(2) - (w * (x * y - x - y)).divided_by(2) - w * (q - x * y + x + y - 2);
      return q.pow(2) * (q.pow(2) + q) * base;
    }
    case StratumFamily::B1:
      return w * q.pow(4);
    case StratumFamily::B2:
      return (q - 1 - w) * q.pow(2);
    case StratumFamily::C1:
      return w * q.pow(3) * (q - 1) * (q + 1);
    case StratumFamily::C2:
      return ((q - 1).pow(2) * (q + 1) - w * (q - 1) * (q + 1)) * q.pow(2);
    // Ordered triples of distinct lines (common, A-only, B-only) give [PGL2];
    // eigenvalue tuples are split by which of them equal 1.
    case StratumFamily::D1:
      return pgl2() * (y - 1) * (y - 2) * (x - 1) * (x - 2) * q.pow(4);
    case StratumFamily::D2:
      return pgl2() * (2 * (y - 1) * (x - 1) * (x - 2) + 2 * (y - 1) * (y - 2) * (x - 1) + w) * q.pow(3);
    case StratumFamily::D3:
      return pgl2() * w * (q + 2 - x * y) * q.pow(2);
  }
  throw std::invalid_argument("invalid stratum family");
}

/// A3 with the eigenvalue pairs split into Z2-invariant and anti-invariant
/// parts: unordered rational pairs carry GL2/T with T split (q^2+q points),
/// Frobenius-conjugate pairs carry GL2/T with T non-split (q^2-q points).
/// Returns {rational-eigenvalue part, conjugate-eigenvalue part}.
inline std::array<MotiveExpr, 2> a3_equivariant_parts(std::int64_t m, std::int64_t n) {
  using namespace cf;
  require_coprime(m, n);
  const MotiveExpr q = Q(), w = omega();
  MotiveExpr split = ((q - 1 - w) * (q - 2 - w) * (q.pow(2) + q) * q.pow(2)).divided_by(2);
  MotiveExpr twisted = ((q.pow(2) - q).pow(2) * q.pow(2)).divided_by(2);
  return {split, twisted};
}

inline MotiveExpr a3_equivariant_motive(std::int64_t m, std::int64_t n) {
  auto parts = a3_equivariant_parts(m, n);
  return parts[0] + parts[1];
}

/// Closing display of the irreducible stratum.
inline MotiveExpr irr_total_display(std::int64_t m, std::int64_t n) {
  using namespace cf;
  require_coprime(m, n);
  const MotiveExpr q = Q(), x = X(), y = Y();
  return (omega() * (q.pow(4) - 3 * q.pow(3) + 2 * q.pow(2)) * pgl2() * ((x - 2) * (y - 2) * q + x * y - 3))
      .divided_by(4);
}

inline MotiveExpr a_total_display(std::int64_t m, std::int64_t n) {
  using namespace cf;
  require_coprime(m, n);
  const MotiveExpr q = Q(), x = X(), y = Y(), w = omega();
  MotiveExpr inner = (w * (x * y - x - y) * (q.pow(2) - 1)).divided_by(2) + w * (q - x * y + x + y - 2) * (q - 1) +
                     (q - 1).pow(2);
  return (q.pow(2) + q) * q.pow(2) * inner;
}

inline MotiveExpr b_total_display(std::int64_t m, std::int64_t n) {
  using namespace cf;
  require_coprime(m, n);
  const MotiveExpr q = Q();
  return omega() * (q.pow(4) - q.pow(2)) + (q - 1) * q.pow(2);
}

inline MotiveExpr c_total_display(std::int64_t m, std::int64_t n) {
  using namespace cf;
  require_coprime(m, n);
  const MotiveExpr q = Q();
  return (q - 1).pow(2) * (q + 1) * q.pow(2) + omega() * (q - 1) * (q + 1) * (q.pow(3) - q.pow(2));
}

/// [Rep^irr(GL2)] = 1/4 [PGL2] |Omega| (q-2)(q-1).
inline MotiveExpr gl2_irr_motive(std::int64_t m, std::int64_t n) {
  using namespace cf;
  require_coprime(m, n);
  const MotiveExpr q = Q();
  return (pgl2() * omega() * (q - 2) * (q - 1)).divided_by(4);
}

/// Number of forbidden eigenvalue orbits removed from the fifth irreducible stratum.
inline MotiveExpr ell_orbits(std::int64_t m, std::int64_t n) {
  using namespace cf;
  require_coprime(m, n);
  const MotiveExpr x = X(), y = Y();
  return ((y - 1) * (y - 2) * (x - 1) * (x - 2)).divided_by(4) + ((y - 1) * (y - 2) * (x - 1)).divided_by(2) +
         ((x - 1) * (y - 1) * (x - 2)).divided_by(2) + (x - 1) * (y - 1);
}

/// D1 + D2 + D3: reducible pairs sharing exactly one eigenline.
inline MotiveExpr d_total(std::int64_t m, std::int64_t n) {
  return stratum_motive(StratumFamily::D1, m, n) + stratum_motive(StratumFamily::D2, m, n) +
         stratum_motive(StratumFamily::D3, m, n);
}

/// Sum of all strata with A3 replaced by its equivariant count and the D
/// strata added. Equals motive_agl2 - (q^5 - q^4) + d_total; this is the
/// expression the exact engines reproduce at clean q.
inline MotiveExpr corrected_motive_agl2(std::int64_t m, std::int64_t n, bool force = false) {
  cf::require_agl2_domain(m, n, force);
  return irr_total_display(m, n) + stratum_motive(StratumFamily::A1, m, n) +
         stratum_motive(StratumFamily::A2, m, n) + a3_equivariant_motive(m, n) + b_total_display(m, n) +
         c_total_display(m, n) + d_total(m, n);
}

/// E-polynomial route: xi_l = l.
inline IntPoly complex_specialization(const MotiveExpr& e, std::int64_t m, std::int64_t n) {
  return specialize(e, m, n);
}

/// xi_l over F_q.
inline std::int64_t xi_over(std::uint64_t q, std::int64_t l) {
  return static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(l), q - 1));
}

/// Finite-field route: xi_l = gcd(l, q-1), then evaluate at q.
inline BigInt finite_value(const MotiveExpr& e, std::uint64_t q, std::int64_t m, std::int64_t n) {
  return specialize(e, xi_over(q, m), xi_over(q, n)).eval(BigInt(q));
}

inline bool is_divisor(std::int64_t d, std::int64_t l) { return d >= 1 && l % d == 0; }

/// Trend polynomial for fixed gcd data (d_m, d_n).
inline IntPoly counting_polynomial(std::int64_t m, std::int64_t n, GroupKind group, std::int64_t d_m,
                                   std::int64_t d_n, bool force = false) {
  if (!is_divisor(d_m, m) || !is_divisor(d_n, n)) throw std::invalid_argument("d_m | m and d_n | n required");
  switch (group) {
    case GroupKind::AGL1: return specialize(motive_agl1(m, n), d_m, d_n);
    case GroupKind::AGL2: return specialize(motive_agl2(m, n, force), d_m, d_n);
    default: throw std::invalid_argument("counting polynomials exist for agl1 and agl2 only");
  }
}

/// No new nm-torsion appears in F_{q^2}: gcd(nm, q+1) = 1.
inline bool is_clean(std::uint64_t q, std::int64_t m, std::int64_t n) {
  return std::gcd(static_cast<std::uint64_t>(m * n), q + 1) == 1;
}

/// char does not divide m and does not divide n, gcd(m,n) = 1; for the rank-2
/// groups additionally char != 2 and m, n odd and >= 3.
inline bool hypotheses_ok(std::uint64_t q, std::int64_t m, std::int64_t n, GroupKind group) {
  PrimePower pp;
  if (!as_prime_power(q, pp) || m < 1 || n < 1) return false;
  const auto p = static_cast<std::int64_t>(pp.p);
  if (std::gcd(m, n) != 1 || m % p == 0 || n % p == 0) return false;
  if (group == GroupKind::AGL2 || group == GroupKind::GL2)
    return p != 2 && m % 2 == 1 && n % 2 == 1 && m >= 3 && n >= 3;
  return true;
}

/// Human-readable list of violated hypotheses (empty when none).
inline std::string hypothesis_violations(std::uint64_t q, std::int64_t m, std::int64_t n, GroupKind group) {
  std::string out;
  auto add = [&out](const std::string& s) { out += (out.empty() ? "" : "; ") + s; };
  PrimePower pp;
  if (!as_prime_power(q, pp)) return std::to_string(q) + " is not a prime power";
  const auto p = static_cast<std::int64_t>(pp.p);
  if (std::gcd(m, n) != 1) add("gcd(m,n) != 1");
  if (m % p == 0) add("char " + std::to_string(p) + " divides m");
  if (n % p == 0) add("char " + std::to_string(p) + " divides n");
  if (group == GroupKind::AGL2 || group == GroupKind::GL2) {
    if (p == 2) add("char 2");
    if (m % 2 == 0 || n % 2 == 0) add("m or n even");
    if (m < 3 || n < 3) add("m or n below 3");
  }
  return out;
}

}  // namespace knotvar
