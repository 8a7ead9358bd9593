#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jdiv/bounds.hpp"
#include "jdiv/geometry.hpp"
#include "jdiv/jensen.hpp"

namespace jdiv::io {

using json = nlohmann::json;

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double x);

/// JSON number for finite values; "inf" / "-inf" strings and null for NaN,
/// since JSON has no literal for them.
json number(double x);

// Distribution: [p1, ...] or {"labels": [...], "probs": [...]}.
Distribution distribution_from_json(const json& j);
json to_json(const Distribution& p);

// DensityMatrix: {"dim": d, "entries": [[[re, im], ...], ...]}. Plain real
// numbers are accepted in place of [re, im] pairs on input.
DensityMatrix density_from_json(const json& j);
json to_json(const DensityMatrix& rho);

// WeightedFamily: {"weights": [...], "members": [...], "kind": "classical" | "quantum"}.
std::string family_kind(const json& j);
ClassicalFamily classical_family_from_json(const json& j);
QuantumFamily quantum_family_from_json(const json& j);
json to_json(const ClassicalFamily& f);
json to_json(const QuantumFamily& f);

/// A list of points: all distributions or all density matrices.
using PointSet = std::variant<std::vector<Distribution>, std::vector<DensityMatrix>>;
PointSet points_from_json(const json& j);

// DistanceMatrix: {"n": n, "d": [[...], ...]}.
DistanceMatrix distance_matrix_from_json(const json& j);
json to_json(const DistanceMatrix& d);

// Embedding: {"coords": [[...], ...], "reconstruction_error": x}.
json to_json(const Embedding& e);
Embedding embedding_from_json(const json& j);

json to_json(const DefinitenessReport& r);
json to_json(const BoundReport& r);
json to_json(const ChainValues& c);
json to_json(const DivergenceResult& r);

/// One distribution per non-empty line, comma separated.
std::vector<Distribution> distributions_from_csv(std::string_view text);

/// Diagram CSV with header "curve,t,v,jd". Curve rows use t = 0 (lower) and
/// t = 1 (upper); homotopy rows carry their own t.
std::string diagram_csv(const DiagramPoints& d);

/// Compact JSON text with every float written as its shortest round-trip
/// decimal.
std::string dump(const json& j);

/// Parses JSON text, mapping syntax errors to ParseError.
json parse_json(std::string_view text);

}  // namespace jdiv::io
