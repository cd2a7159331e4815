#pragma once

// JSON, PACE and DOT serialisation of the toolkit's artifacts.

#include <string>

#include "json.hpp"
#include "surftw/bramble.hpp"
#include "surftw/duality_harness.hpp"
#include "surftw/extremal_family.hpp"

namespace surftw {

using Json = nlohmann::json;

/// {"darts", "edge_inv", "rotation", "signature"}; keys sorted, so dump() is
/// canonical.
Json to_json(const SurfaceMap& m);
/// Map format plus "vclass" ("element" | "centre" per vertex orbit); ids,
/// labels and marked faces only when they differ from the defaults.
Json to_json(const EmbeddedHypergraph& l);
/// Map format plus "vkind" ("lambda" | "face"), "vertex_ref" and "face_of".
Json to_json(const RadialEmbedding& r);
/// {"vertices", "edges": [{"label", "ends"}]}.
Json to_json(const Hypergraph& h);
/// {"nodes", "edges", "leaf_label": [{"node", "label"}]}.
Json to_json(const PartitioningTree& t);
/// {"bags", "edges"}.
Json to_json(const TreeDecomposition& td);
/// {"elements"}.
Json to_json(const Bramble& b);
Json to_json(const NodeCheck& n);
Json to_json(const BoundReport& r);
Json to_json(const FuzzSummary& s);
/// Report without the decompositions themselves.
Json to_json(const DualDecompositionReport& r);

/// Parsers throw BAD_INPUT on malformed documents; maps are validated.
SurfaceMap map_from_json(const Json& j);
EmbeddedHypergraph embedded_from_json(const Json& j);
Hypergraph hypergraph_from_json(const Json& j);
PartitioningTree ptree_from_json(const Json& j);
TreeDecomposition td_from_json(const Json& j);
Bramble bramble_from_json(const Json& j);

/// Whatever a document describes, as a hypergraph: an embedded hypergraph or a
/// graph map gives its underlying hypergraph.
Hypergraph any_hypergraph_from_json(const Json& j);

/// PACE .gr text of the primal graph (vertices renumbered 1..n in id order).
std::string to_pace_graph(const Hypergraph& h);
/// PACE .td text of a decomposition of `h`, with the numbering of to_pace_graph.
std::string to_pace_td(const TreeDecomposition& td, const Hypergraph& h);
/// DOT of the primal graph.
std::string to_dot(const Hypergraph& h, std::string_view name = "H");

Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace surftw
