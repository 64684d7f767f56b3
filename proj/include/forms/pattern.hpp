#pragma once

#include <variant>
#include <vector>

#include "forms/form.hpp"
#include "forms/univariate.hpp"

namespace forms {

struct ParamT {
  bool operator==(const ParamT&) const { return true; }
  bool operator<(const ParamT&) const { return false; }
};
struct ParamU {
  bool operator==(const ParamU&) const { return true; }
  bool operator<(const ParamU&) const { return false; }
};

// A pattern slot is a fixed rational or one of the two curve parameters.
using Slot = std::variant<Rational, ParamT, ParamU>;

// Compact description of an evaluation point or a parametric curve: each
// coordinate is a rational constant, T, or U. With no parameter slots this is
// a concrete point; v_t is the special case of t ones and n-t zeros.
struct PatternPoint {
  int n = 0;
  std::vector<Slot> slots;

  static PatternPoint concrete(std::vector<Rational> values);
  static PatternPoint vt(int n, int t);
  // k leading coordinates a, the rest b.
  static PatternPoint two_value(int n, int k, const Rational& a, const Rational& b);
  static PatternPoint from_slots(std::vector<Slot> slots);

  bool uses_t() const;
  bool uses_u() const;
  int param_kinds() const { return (uses_t() ? 1 : 0) + (uses_u() ? 1 : 0); }
  bool is_concrete() const { return param_kinds() == 0; }

  std::vector<Rational> point() const;  // concrete patterns only
  std::vector<Rational> instantiate(const Rational& t, const Rational& u) const;

  // All distinct permutations of the slots, in a deterministic order.
  std::vector<PatternPoint> orbit() const;

  bool operator==(const PatternPoint&) const = default;
};

// Restriction of a single monomial along a pattern: a rational coefficient
// times t^t_pow * u^u_pow. Zero constant slots annihilate the monomial.
struct MonomialRestriction {
  Rational coeff;
  int t_pow = 0;
  int u_pow = 0;
};

MonomialRestriction restrict_monomial(const Monomial& m, const PatternPoint& pattern);

using Restriction = std::variant<UnivariatePoly, BivariatePoly>;

// Substitutes the pattern into f. One parameter kind yields a univariate
// polynomial, two yield a bivariate one; concrete patterns are an error
// (use Form::evaluate).
Restriction restrict_parametric(const Form& f, const PatternPoint& pattern);

bool restriction_is_zero(const Restriction& r);

// All distinct permutations of the value multiset, as concrete points.
std::vector<std::vector<Rational>> orbit_points(int n, std::vector<Rational> values);

}  // namespace forms
