#pragma once

// JSON forms of the toolkit's reports. Every top-level document is wrapped by envelope(),
// which adds "schema_version" and "kind".

#include "simtri/catalog.hpp"
#include "simtri/constructions.hpp"
#include "simtri/embedder.hpp"
#include "simtri/reproduce.hpp"
#include "simtri/structure.hpp"
#include "simtri/turan.hpp"

#include <json.hpp>

namespace simtri {

inline constexpr int kSchemaVersion = 1;

nlohmann::json envelope(std::string_view kind, nlohmann::json body);
/// Checks schema_version and kind; throws ParseError otherwise. Returns the body.
nlohmann::json open_envelope(const nlohmann::json& doc, std::string_view kind);

void to_json(nlohmann::json& j, const Triple& t);
void from_json(const nlohmann::json& j, Triple& t);
void to_json(nlohmann::json& j, const ThreeGraph& g);
void from_json(const nlohmann::json& j, ThreeGraph& g);
void to_json(nlohmann::json& j, const EisensteinPoint& p);
void from_json(const nlohmann::json& j, EisensteinPoint& p);

void to_json(nlohmann::json& j, const DenseCertificate& c);
void from_json(const nlohmann::json& j, DenseCertificate& c);
void to_json(nlohmann::json& j, const Realization& r);
void from_json(const nlohmann::json& j, Realization& r);
void to_json(nlohmann::json& j, const EmbeddingReport& r);
void from_json(const nlohmann::json& j, EmbeddingReport& r);

void to_json(nlohmann::json& j, const TuranCheckpoint& c);
void from_json(const nlohmann::json& j, TuranCheckpoint& c);
void to_json(nlohmann::json& j, const SearchResult& r);
void from_json(const nlohmann::json& j, SearchResult& r);

void to_json(nlohmann::json& j, const PartitionReport& r);
void from_json(const nlohmann::json& j, PartitionReport& r);
void to_json(nlohmann::json& j, const BoundCheck& c);
void from_json(const nlohmann::json& j, BoundCheck& c);
void to_json(nlohmann::json& j, const MaximizeStage& s);
void from_json(const nlohmann::json& j, MaximizeStage& s);
void to_json(nlohmann::json& j, const MaximizeResult& r);
void from_json(const nlohmann::json& j, MaximizeResult& r);

void to_json(nlohmann::json& j, const CriterionResult& r);
void from_json(const nlohmann::json& j, CriterionResult& r);
void to_json(nlohmann::json& j, const ReproduceSummary& s);
void from_json(const nlohmann::json& j, ReproduceSummary& s);

/// Catalog listing (name, source, vertices, edges in compact 1-based form, verifiable).
nlohmann::json catalog_json(const std::vector<CatalogEntry>& entries);
/// Rows {n, h, split} for 0..max_n.
nlohmann::json hsequence_json(const HSequence& seq, int max_n);
/// Summary of a validated construction (the points themselves go to the point-set file).
nlohmann::json construction_json(const ValidatedConstruction& v, const ConstructionSpec& spec, int n);

} // namespace simtri
