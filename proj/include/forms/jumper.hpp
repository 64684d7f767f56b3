#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forms/form.hpp"
#include "forms/glossary.hpp"
#include "forms/positivity.hpp"
#include "forms/refuter.hpp"

namespace forms {

struct SosStatus {
  enum class Kind { ProvedNotSos, ProvedSos, Literature, Unknown };
  Kind kind = Kind::Unknown;
  // Direct evidence when available; lineage-justified jumps carry none.
  std::shared_ptr<const RefutationCertificate> certificate;
  std::string justification;
};

// A form together with how we know its psd and sos statuses.
struct ProvenancedForm {
  Form form;
  PsdVerdict psd;
  SosStatus sos;
  std::vector<std::string> lineage;
};

// r = 2a + 3b with a, b >= 0; tie-break b = r mod 2. Requires r >= 2.
std::pair<int, int> decompose_r(int r);

// Multiplies by p_n^{2a} q_n^{2b}: degree rises by 4r, psd is preserved, and
// the psd-not-sos gap survives because the multipliers are squares of
// irreducible indefinite forms.
ProvenancedForm jump_pq(const ProvenancedForm& seed, int r);

// Multiplies by (x_1 ... x_n)^2: degree rises by 2n.
ProvenancedForm jump_allvars(const ProvenancedForm& seed);

struct WitnessRecipe {
  enum class Kind { DirectForm, JumpChain, Literature };
  Kind kind = Kind::Literature;
  std::optional<FormId> seed;
  int pq_r = 0;          // one pq jump with this r (0 = none)
  int allvars_count = 0; // number of all-variable jumps
  std::string citation;
  bool constructible = false;
  std::string describe() const;
};

struct ClassificationEntry {
  int n = 0;
  int two_d = 0;
  bool equal = false;  // true: every even symmetric psd form of this shape is sos
  std::string citation;
  std::optional<WitnessRecipe> witness;  // populated for strict entries
};

// The classification of (n, 2d), with a witness recipe when the inclusion is
// strict. Throws on odd or non-positive degree.
ClassificationEntry classify(int n, int two_d);

// The two equivalent routes to the answer, kept separate for cross-checking:
// the closed-form condition and the constructive seed+jump bookkeeping.
bool classify_equal_formula(int n, int two_d);
bool classify_equal_constructive(int n, int two_d);

struct Chart {
  int n_max = 0;
  int deg_max = 0;
  std::vector<ClassificationEntry> cells;  // row-major: degree 2,4,..., n 2,3,...
};

Chart chart(int n_max, int deg_max);

// Materializes a recipe into a form with full provenance (certificate for the
// seed, lineage for the jumps). Throws for literature-only recipes.
ProvenancedForm realize_witness(const WitnessRecipe& recipe);

// Seed provenance: builds the glossary form, derives psd by the module's
// exact rules, and attaches a refutation certificate.
ProvenancedForm provenanced_seed(const FormId& id);

}  // namespace forms
