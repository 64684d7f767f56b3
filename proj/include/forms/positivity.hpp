#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forms/form.hpp"
#include "forms/pattern.hpp"

namespace forms {

enum class PsdStatus { ProvedPsd, ProvedNotPsd, Unknown };

struct Witness {
  std::vector<Rational> point;
  Rational value;  // exact, strictly negative
};

struct PsdVerdict {
  PsdStatus status = PsdStatus::Unknown;
  std::optional<Witness> witness;  // present iff ProvedNotPsd
  std::string method;
};

// a*M2^3 + b*M2*M4 + c*M6 in n variables.
struct MSexticCoeffs {
  Rational a, b, c;
  int n = 1;
};

struct MSexticStatus {
  bool psd = false;
  bool sos = false;
};

// Decides psd-ness of a symmetric quartic by the two-value reduction: for
// each k the substitution (t,...,t,u,...,u) with k copies of t leaves a
// binary quartic whose nonnegativity is decided exactly. Complete for n >= 4
// (and trivially for n <= 2); for n = 3 a failed search leaves Unknown.
PsdVerdict quartic_symmetric_psd(const Form& f);

// Exact criterion for the power-sum sextic: psd iff a t^2 + b t + c >= 0 at
// the integers 1..n; sos iff additionally nonnegative on the interval [2, n].
MSexticStatus m_sextic_status(const MSexticCoeffs& coeffs);

// True iff f vanishes exactly on every point of every orbit of every
// pattern; parametric patterns are checked by symbolic restriction.
bool verify_zero_orbits(const Form& f, const std::vector<PatternPoint>& patterns);

// ProvedPsd when all factors are, Unknown otherwise; never refutes.
PsdVerdict psd_product(const std::vector<PsdVerdict>& verdicts);

// Deterministic search for a rational point with a negative value: v_t
// orbits first, then small-integer two-value patterns, then a seeded grid.
// `budget` caps the number of evaluations.
std::optional<Witness> search_counterexample(const Form& f, long budget,
                                             unsigned long seed = 0);

// Sound sufficient test: every term even with a positive coefficient.
bool psd_by_even_support(const Form& f);

}  // namespace forms
