#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "forms/form.hpp"
#include "forms/glossary.hpp"
#include "forms/linalg.hpp"
#include "forms/pattern.hpp"
#include "forms/univariate.hpp"

namespace forms {

// All degree-d monomials congruent to a fixed parity vector componentwise.
// In an even sos decomposition every square can be assumed supported on one
// such class, so linear constraints on candidate squares stay inside it.
struct ParityClass {
  std::vector<int> parity;         // bits, length n
  std::vector<Monomial> support;   // lex order
  int index_of(const Monomial& m) const;
  bool operator==(const ParityClass&) const = default;
};

ParityClass candidate_support(int n, int d, const std::vector<int>& parity);

// A one-parameter restriction of the target form together with its verified
// value g; candidate squares restrict into the space of polynomials of
// degree <= deg(g)/2 vanishing to half order at each real root of g.
struct ShapedCurve {
  PatternPoint pattern;
  UnivariatePoly expected;
  bool operator==(const ShapedCurve&) const = default;
};

// Data-only proof plan: where the form vanishes and which square monomial is
// forced to zero anyway.
struct RefutationScript {
  Monomial target;                        // mu, degree = (form degree)/2
  int restrict_zero_count = 0;            // trailing variables zeroed first
  std::vector<PatternPoint> zero_orbits;  // concrete patterns, full orbits
  std::vector<PatternPoint> zero_curves;  // 1- or 2-parameter, restriction == 0
  std::vector<ShapedCurve> shaped_curves;
  bool operator==(const RefutationScript&) const = default;
};

struct ConstraintRow {
  Vec entries;
  std::string provenance;
};

struct ConstraintSystem {
  ParityClass cls;
  std::vector<ConstraintRow> rows;
  std::vector<std::string> warnings;  // skipped shape rules
  Mat matrix() const;
};

// Assembles the exact linear constraints on a generic class element. Every
// zero claim in the script is verified against f first; an unverifiable
// claim throws. Rows are generated in a fixed documented order so a verifier
// reproduces them bit for bit.
ConstraintSystem assemble_constraints(const Form& f, const RefutationScript& script,
                                      const ParityClass& cls);

struct FactorPairAudit {
  Monomial m1, m2;       // m1 * m2 == mu^2, m1 <= m2
  std::string status;    // "target", "eliminated: ...", or "unresolved"
};

struct RefutationCertificate {
  int n = 0;       // variable count after restriction
  int degree = 0;  // form degree after restriction
  RefutationScript script;
  ParityClass cls;
  Rational diagonal_coefficient;  // coefficient of mu^2 in f, > 0
  std::vector<Vec> kernel_basis;
  Vec forced_zero_proof;  // row combination equal to the mu-coordinate functional
  std::vector<FactorPairAudit> factor_pair_audit;
};

struct Inconclusive {
  std::string reason;
  int kernel_dim = 0;
  std::optional<Vec> surviving_kernel_vector;
  std::vector<std::pair<Monomial, Monomial>> unresolved_pairs;
};

using RefuteResult = std::variant<RefutationCertificate, Inconclusive>;

// Attempts to show f is not a sum of squares by forcing the target monomial
// out of every candidate square. Sound: a certificate implies no sos
// representation exists; Inconclusive makes no claim.
RefuteResult refute(const Form& f, const RefutationScript& script);

// Re-derives every certificate field from f and the script alone.
bool verify_certificate(const Form& f, const RefutationCertificate& cert);

// Proof plans for the named families (D, G, T, P, Q, Rdodecic, Robinson,
// MSextic(1,-5,6)).
RefutationScript builtin_script(const FormId& id);

inline bool holds_certificate(const RefuteResult& r) {
  return std::holds_alternative<RefutationCertificate>(r);
}

}  // namespace forms
