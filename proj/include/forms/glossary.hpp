#pragma once

#include <string>
#include <vector>

#include "forms/form.hpp"
#include "forms/pattern.hpp"

namespace forms {

// Tags for the named families. `pn`/`qn` are the irreducible indefinite
// quartic/sextic multipliers used by degree jumping; `MSextic` is the
// power-sum sextic a*M2^3 + b*M2*M4 + c*M6.
enum class FormTag { M, L, C, G, D, T, P, Q, Rdodecic, Robinson, pn, qn, MSextic };

std::string tag_name(FormTag tag);

struct FormId {
  FormTag tag;
  int n = 0;  // variable count (M, T, P, Q, Rdodecic, Robinson, pn, qn, MSextic)
  int m = 0;  // family parameter (L, C, G, D)
  int r = 0;  // power-sum exponent (M)
  Rational a, b, c;  // MSextic coefficients

  static FormId power_sum(int n, int r);
  static FormId make(FormTag tag, int n_or_m);
  static FormId msextic(const Rational& a, const Rational& b, const Rational& c, int n);

  std::string describe() const;
};

enum class Claim { Yes, No, Open, NotApplicable };

struct ClaimedStatus {
  Claim psd = Claim::NotApplicable;
  Claim sos = Claim::NotApplicable;
  std::string citation;
};

struct GlossaryEntry {
  FormId id;
  Form form;
  ClaimedStatus claimed;
  // Point/curve families on which the form is asserted to vanish; all are
  // checkable by exact evaluation or symbolic restriction.
  std::vector<PatternPoint> zero_patterns;
};

// Expands the named form; throws std::invalid_argument outside the allowed
// parameter ranges.
GlossaryEntry build(const FormId& id);

// x_1^r + ... + x_n^r.
Form power_sum(int n, int r);

struct IdentityReport {
  struct Item {
    std::string name;
    bool pass;
  };
  std::vector<Item> items;
  bool all_pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

// Replays every displayed polynomial identity by exact expansion.
IdentityReport verify_identities();

}  // namespace forms
