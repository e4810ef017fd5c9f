#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace knotvar {

/// The (m,n) torus knot, presented as <x, y | x^n = y^m>. A representation
/// is a pair (A, B) with A^n = B^m.
struct TorusKnot {
  std::int64_t m = 1;
  std::int64_t n = 1;

  bool coprime() const { return std::gcd(m, n) == 1; }
  TorusKnot swapped() const { return {n, m}; }
  std::string str() const { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }
  friend bool operator==(const TorusKnot&, const TorusKnot&) = default;
};

inline void check_knot(const TorusKnot& k) {
  if (k.m < 1 || k.n < 1) throw std::invalid_argument("knot parameters must be positive");
}

/// Raised when an input falls outside the hypotheses of the closed forms.
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class GroupKind { GL1, GL2, AGL1, AGL2 };

inline const char* group_name(GroupKind g) {
  switch (g) {
    case GroupKind::GL1: return "gl1";
    case GroupKind::GL2: return "gl2";
    case GroupKind::AGL1: return "agl1";
    case GroupKind::AGL2: return "agl2";
  }
  return "?";
}

}  // namespace knotvar
