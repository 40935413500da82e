#pragma once

// JSON payloads for polytopes, measures, functions, weights and results, plus
// OFF and CSV exports. Numbers are printed with 17 significant digits;
// identical inputs give byte-identical output.

#include "funcbody/convex_functions.hpp"
#include "funcbody/functional_bodies.hpp"
#include "funcbody/geometry_kernel.hpp"
#include "funcbody/valuation_lab.hpp"
#include "funcbody/weight_functions.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace funcbody::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws ParseError.
Json load_file(const std::string& path);
Json parse_text(const std::string& text);

/// Payload readers; all throw ParseError on malformed input and let library
/// validation errors (InvalidArgument, GeometryError) through unchanged.
Vector parse_vector(const Json& j);
/// {"vertices": [[x, y, z], ...]}
Polytope parse_polytope(const Json& j);
/// {"atoms": [{"dir": [...], "w": r}, ...]}
DiscreteSphericalMeasure parse_measure(const Json& j);
/// {"pieces": [{"a": [...], "b": r}], "domain": [{"c": [...], "d": r}], "dim": n}
/// or the named constructors {"cone": polytope, "constant": c} and
/// {"indicator": polytope, "constant": c}.
PiecewiseAffineConvex parse_function(const Json& j);
/// {"breakpoints": [...], "values": [...]} or {"tent": {"height": h, "width": w}}.
WeightFunction parse_weight(const Json& j);
/// Overrides of nodes, tolerance, max_depth and seed on top of `base`.
QuadratureConfig parse_config(const Json& j, QuadratureConfig base = {});

Json to_json(const Vector& v);
Json to_json(const Polytope& p);
Json to_json(const DiscreteSphericalMeasure& m);
Json to_json(const PiecewiseAffineConvex& u);
Json to_json(const WeightFunction& zeta);
Json to_json(const SupportBody& body);
Json to_json(const BodyResult& r);
Json to_json(const LyzMeasure& r);
Json to_json(const Report& r);

/// Deterministic serialization: keys in insertion order, two-space indent,
/// doubles as %.17g (integral values included), non-finite numbers as null.
std::string dump(const Json& j);

/// One row per direction: polar angle (n = 2), azimuth and inclination
/// (n = 3) or the raw coordinates (otherwise), followed by the support value.
void write_support_csv(const SupportBody& body, std::ostream& out);

}  // namespace funcbody::io
