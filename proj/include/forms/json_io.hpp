#pragma once

#include <string>

#include <json.hpp>

#include "forms/form.hpp"
#include "forms/glossary.hpp"
#include "forms/jumper.hpp"
#include "forms/pattern.hpp"
#include "forms/positivity.hpp"
#include "forms/refuter.hpp"

namespace forms {

using Json = nlohmann::ordered_json;

// Canonical text: 2-space indented, terms/fields in fixed order, trailing
// newline. Parsing then re-serializing is byte-identical.
std::string canonical_dump(const Json& j);

Json form_to_json(const Form& f);
Form form_from_json(const Json& j);

Json pattern_to_json(const PatternPoint& p);
PatternPoint pattern_from_json(const Json& j);

Json script_to_json(const RefutationScript& s);
RefutationScript script_from_json(const Json& j);

Json certificate_to_json(const RefutationCertificate& c);
RefutationCertificate certificate_from_json(const Json& j);

Json inconclusive_to_json(const Inconclusive& inc);
Json verdict_to_json(const PsdVerdict& v);
Json identity_report_to_json(const IdentityReport& r);
Json classification_to_json(const ClassificationEntry& e);
Json chart_to_json(const Chart& c);
std::string chart_to_text(const Chart& c);

std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

}  // namespace forms
