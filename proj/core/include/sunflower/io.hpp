#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "sunflower/amalgam.hpp"
#include "sunflower/classes.hpp"
#include "sunflower/ksets.hpp"
#include "sunflower/partitionlab.hpp"
#include "sunflower/qftype.hpp"
#include "sunflower/ramsey.hpp"
#include "sunflower/structure.hpp"
#include "sunflower/witness.hpp"

namespace sunflower {

using Json = nlohmann::json; // std::map-backed: keys come out sorted

inline constexpr int kFormatVersion = 1;

// {"signature":[{"name":"E","arity":2}],"size":5,"relations":{"E":[[0,1],...]}}
Json to_json(const Structure& s);
Structure structure_from_json(const Json& j);

// {"name":..., "signature":..., "forbidden":[Structure,...]}; a bare string is
// read as a class name.
Json to_json(const ClassSpec& k);
ClassSpec class_from_json(const Json& j);

Json to_json(const QfType& p);
QfType qftype_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);
Json to_json(const Colouring& c);
Colouring colouring_from_json(const Json& j);

// {"k":2,"sets":[[...],...]} plus "base" (Structure) when known.
Json to_json(const Presentation& p);
// Uses the embedded base when present, else `base`.
Presentation presentation_from_json(const Json& j, const Structure* base = nullptr);

Json to_json(const SunflowerCert& c);
SunflowerCert cert_from_json(const Json& j);

Json to_json(const PartitionedHypergraph& h);
PartitionedHypergraph hypergraph_from_json(const Json& j);

Json to_json(const WitnessChain& c);
WitnessChain chain_from_json(const Json& j);

Json to_json(const ExtractionTrace& t);
ExtractionTrace trace_from_json(const Json& j);

Json to_json(const Embedding& e);
Json to_json(const PartitionReport& r);
Json to_json(const ColourCopyReport& r);
Json to_json(const MinEmbeddingColouring& m);
Json to_json(const DapReport& r);
Json to_json(const SuitableParams& p);
Json to_json(const WitnessVerdict& v);

// Adds "version" to an object.
Json versioned(Json j);
Json read_json_file(const std::string& path);
// Pretty-printed, sorted keys, trailing newline.
void write_json_file(const std::string& path, const Json& j);

} // namespace sunflower
