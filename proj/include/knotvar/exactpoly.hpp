#pragma once

// Exact polynomials for motives and counting polynomials.
//
// MotiveExpr lives in Z[q, xi_m, xi_n] scaled by a positive integer
// denominator: the value is (sum of integer terms) / denominator, kept in
// lowest terms. The denominator stays 1 for everything except the quartered
// AGL2 expressions. IntPoly is a dense polynomial in one variable with
// integer coefficients.

#include "knotvar/bigint.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotvar {

/// Exponents of (q, xi_m, xi_n).
using Exps = std::array<unsigned, 3>;

class MotiveExpr {
 public:
  MotiveExpr() = default;
  MotiveExpr(long long c) : MotiveExpr(monomial(BigInt(c), {0, 0, 0})) {}  // NOLINT(implicit)

  static MotiveExpr monomial(BigInt coeff, Exps e) {
    MotiveExpr r;
    if (coeff != 0) r.terms_.emplace(e, std::move(coeff));
    return r;
  }
  static MotiveExpr constant(BigInt c) { return monomial(std::move(c), {0, 0, 0}); }
  static MotiveExpr q() { return monomial(1, {1, 0, 0}); }
  static MotiveExpr xi_m() { return monomial(1, {0, 1, 0}); }
  static MotiveExpr xi_n() { return monomial(1, {0, 0, 1}); }

  const std::map<Exps, BigInt>& terms() const { return terms_; }
  const BigInt& denominator() const { return den_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const { return den_ == 1; }

  friend MotiveExpr operator+(const MotiveExpr& a, const MotiveExpr& b) {
    MotiveExpr r;
    r.den_ = a.den_ * b.den_;
    for (const auto& [e, c] : a.terms_) r.terms_[e] += c * b.den_;
    for (const auto& [e, c] : b.terms_) r.terms_[e] += c * a.den_;
    r.normalize();
    return r;
  }
  friend MotiveExpr operator-(const MotiveExpr& a) {
    MotiveExpr r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend MotiveExpr operator-(const MotiveExpr& a, const MotiveExpr& b) { return a + (-b); }
  friend MotiveExpr operator*(const MotiveExpr& a, const MotiveExpr& b) {
    MotiveExpr r;
    r.den_ = a.den_ * b.den_;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.terms_[{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}] += ca * cb;
    r.normalize();
    return r;
  }
  MotiveExpr& operator+=(const MotiveExpr& o) { return *this = *this + o; }
  MotiveExpr& operator-=(const MotiveExpr& o) { return *this = *this - o; }
  MotiveExpr& operator*=(const MotiveExpr& o) { return *this = *this * o; }

  /// Exact division by a positive integer, absorbed into the denominator.
  MotiveExpr divided_by(const BigInt& d) const {
    if (d <= 0) throw std::invalid_argument("divisor must be positive");
    MotiveExpr r = *this;
    r.den_ *= d;
    r.normalize();
    return r;
  }

  MotiveExpr pow(unsigned e) const {
    MotiveExpr r = 1, b = *this;
    while (e) {
      if (e & 1u) r *= b;
      b *= b;
      e >>= 1u;
    }
    return r;
  }

  friend bool operator==(const MotiveExpr& a, const MotiveExpr& b) {
    return a.den_ == b.den_ && a.terms_ == b.terms_;
  }

  /// Degree in q; -1 for the zero expression.
  int degree_q() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[0]));
    return d;
  }

  /// Coefficient of q^k as an expression in xi_m, xi_n.
  MotiveExpr coefficient_q(unsigned k) const {
    MotiveExpr r;
    r.den_ = den_;
    for (const auto& [e, c] : terms_)
      if (e[0] == k) r.terms_[{0, e[1], e[2]}] = c;
    r.normalize();
    return r;
  }

  /// Substitutes integer values for all three symbols.
  BigInt evaluate_exact(const BigInt& qv, const BigInt& xm, const BigInt& xn) const {
    BigInt acc = 0;
    for (const auto& [e, c] : terms_)
      acc += c * ipow(qv, e[0]) * ipow(xm, e[1]) * ipow(xn, e[2]);
    if (acc % den_ != 0) throw std::domain_error("motive value is not integral at this point");
    return acc / den_;
  }

  /// Human-readable form, highest q-degree first, e.g. "xi_m*q^2 - q + 2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      std::string mono;
      auto factor = [&mono](const char* v, unsigned k) {
        if (k == 0) return;
        if (!mono.empty()) mono += "*";
        mono += v;
        if (k > 1) mono += "^" + std::to_string(k);
      };
      factor("xi_m", e[1]);
      factor("xi_n", e[2]);
      factor("q", e[0]);
      if (mono.empty())
        os << mag;
      else if (mag == 1)
        os << mono;
      else
        os << mag << "*" << mono;
    }
    if (den_ != 1) return "(" + os.str() + ")/" + den_.str();
    return os.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["vars"] = {"q", "xi_m", "xi_n"};
    if (den_ != 1) j["denominator"] = den_.str();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : terms_)  // std::map order is lexicographic on the triple
      arr.push_back({{"coeff", c.str()}, {"exps", {e[0], e[1], e[2]}}});
    j["terms"] = std::move(arr);
    return j;
  }

  static MotiveExpr from_json(const nlohmann::json& j) {
    if (!j.contains("terms") || !j.at("terms").is_array())
      throw std::invalid_argument("motive JSON lacks a terms array");
    if (j.contains("vars") && j.at("vars") != nlohmann::json({"q", "xi_m", "xi_n"}))
      throw std::invalid_argument("motive JSON has unexpected vars");
    MotiveExpr r;
    for (const auto& t : j.at("terms")) {
      const auto& ex = t.at("exps");
      if (!ex.is_array() || ex.size() != 3) throw std::invalid_argument("exps must have 3 entries");
      Exps e{ex[0].get<unsigned>(), ex[1].get<unsigned>(), ex[2].get<unsigned>()};
      r.terms_[e] += parse_decimal(t.at("coeff").get<std::string>());
    }
    if (j.contains("denominator")) r.den_ = parse_decimal(j.at("denominator").get<std::string>());
    if (r.den_ <= 0) throw std::invalid_argument("denominator must be positive");
    r.normalize();
    return r;
  }

 private:
  void normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second == 0)
        it = terms_.erase(it);
      else
        ++it;
    }
    if (terms_.empty()) {
      den_ = 1;
      return;
    }
    BigInt g = den_;
    for (const auto& [e, c] : terms_) {
      if (g == 1) break;
      g = big_gcd(g, c);
    }
    if (g != 1) {
      den_ /= g;
      for (auto& [e, c] : terms_) c /= g;
    }
  }

  std::map<Exps, BigInt> terms_;
  BigInt den_ = 1;
};

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly t() { return IntPoly({0, 1}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const std::vector<BigInt>& coeffs() const { return c_; }

  /// Horner evaluation.
  BigInt eval(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(r));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(r));
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(r));
  }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string str(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const BigInt& c = c_[i];
      if (c == 0) continue;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      first = false;
      if (i == 0) {
        os << mag;
        continue;
      }
      if (mag != 1) os << mag << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

/// Substitutes xi_m, xi_n; the result must have integer coefficients.
inline IntPoly specialize(const MotiveExpr& e, const BigInt& xi_m, const BigInt& xi_n) {
  std::vector<BigInt> c(static_cast<std::size_t>(std::max(e.degree_q(), -1) + 1));
  for (const auto& [ex, coeff] : e.terms()) c[ex[0]] += coeff * ipow(xi_m, ex[1]) * ipow(xi_n, ex[2]);
  for (auto& x : c) {
    if (x % e.denominator() != 0)
      throw std::domain_error("specialization has non-integral coefficients");
    x /= e.denominator();
  }
  return IntPoly(std::move(c));
}

inline BigInt eval(const IntPoly& p, const BigInt& t) { return p.eval(t); }

}  // namespace knotvar
