#pragma once

#include <json.hpp>

#include "kdelete/bound_report.hpp"
#include "kdelete/constructions.hpp"
#include "kdelete/cover.hpp"
#include "kdelete/maxcut.hpp"
#include "kdelete/oddgirth.hpp"

namespace kdelete {

/// Rationals appear as {"exact": "p/q", "decimal": <double>}.
nlohmann::json rational_json(const Rational& x);
nlohmann::json vertex_set_json(const VertexSet& s);

nlohmann::json to_json(const VertexPartition& p);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const CoverSelection& c);
nlohmann::json to_json(const ScrubReport& s);
nlohmann::json to_json(const CutResult& c);
nlohmann::json to_json(const SpectralProfile& p);
nlohmann::json to_json(const MixingReport& m);
nlohmann::json to_json(const LowerBoundCertificate& c);

/// {"k": int, "labels": [...], "internal_edges": int}; internal_edges is
/// recomputed against g and must match when present.
VertexPartition partition_from_json(const Graph& g, const nlohmann::json& j);

} // namespace kdelete
