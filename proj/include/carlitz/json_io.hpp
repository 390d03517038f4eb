#pragma once

#include <vector>

#include "json.hpp"

#include "carlitz/division.hpp"
#include "carlitz/fq_poly.hpp"
#include "carlitz/motive.hpp"
#include "carlitz/relations.hpp"
#include "carlitz/tate_series.hpp"
#include "carlitz/tpoly.hpp"

namespace carlitz {

using Json = nlohmann::ordered_json;

// Decoders throw ConfigError on malformed input or a field mismatch.

Json to_json(const LocalElement& x);
LocalElement element_from_json(const Json& j, const FieldPtr& f);

Json to_json(const TailPtr& t);
TailPtr tail_from_json(const Json& j);

Json to_json(const TateSeries& s);
TateSeries series_from_json(const Json& j, const FieldPtr& f);

/// Coefficient list, lowest degree first.
Json to_json(const TPoly& p);
TPoly tpoly_from_json(const Json& j, const FieldPtr& f);

/// [numerator, denominator], each a list of F_p coordinate vectors.
Json to_json(const RatFun& r);

Json to_json(const NormInfo& n);

/// {"name","r","phi","psi","provenance"}. "phi" is Phi when the working
/// field holds it, else null; "phi_twisted" (Phi^(1)) is always written and
/// both carry a common denominator under "phi_den" / "phi_twisted_den".
Json to_json(const MotivePresentation& p);
/// Accepts files with only "phi": Phi^(1) is then recomputed by twisting.
MotivePresentation presentation_from_json(const Json& j, const FieldPtr& f);

Json to_json(const ReductionResult& r);

struct RelationRun {
  std::vector<LocalElement> alphas;
  SearchBounds bounds;
  SearchResult search;
  std::vector<Certification> certs;
  std::vector<EvaluatedRelation> evaluated;
  RelationReport report;
};

Json to_json(const RelationRun& run);

}  // namespace carlitz
