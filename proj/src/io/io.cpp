#include "funcbody/io.hpp"

#include "funcbody/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace funcbody::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

std::vector<double> numbers(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<double> out;
  for (const auto& x : j) out.push_back(number(x, what));
  return out;
}

std::vector<Vector> vectors(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Vector> out;
  for (const auto& x : j) out.push_back(parse_vector(x));
  return out;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

void write(const Json& j, int indent, std::string& out) {
  const std::string pad(2 * (indent + 1), ' ');
  const std::string close(2 * indent, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(k).dump() + ": ";
        write(v, indent + 1, out);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool scalars = true;
      for (const auto& v : j) scalars = scalars && v.is_primitive();
      if (scalars) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          write(j[i], indent + 1, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        write(j[i], indent + 1, out);
      }
      out += "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_double(x) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_text(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Vector parse_vector(const Json& j) {
  const std::vector<double> xs = numbers(j, "vector");
  if (xs.empty()) throw ParseError("empty vector");
  return Eigen::Map<const Vector>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

Polytope parse_polytope(const Json& j) {
  const std::vector<Vector> pts = vectors(field(j, "vertices"), "vertices");
  if (pts.empty()) throw ParseError("polytope without vertices");
  return convex_hull(pts);
}

DiscreteSphericalMeasure parse_measure(const Json& j) {
  const Json& atoms = field(j, "atoms");
  if (!atoms.is_array()) throw ParseError("atoms must be an array");
  std::vector<Atom> out;
  int n = j.contains("dim") ? static_cast<int>(number(j.at("dim"), "dim")) : -1;
  for (const auto& a : atoms) {
    out.push_back({parse_vector(field(a, "dir")), number(field(a, "w"), "w")});
  }
  return DiscreteSphericalMeasure(std::move(out), n);
}

PiecewiseAffineConvex parse_function(const Json& j) {
  if (!j.is_object()) throw ParseError("function must be an object");
  const double c = j.contains("constant") ? number(j.at("constant"), "constant") : 0.0;
  if (j.contains("cone")) return act_add_constant(cone_function(parse_polytope(j.at("cone"))), c);
  if (j.contains("indicator")) return indicator(parse_polytope(j.at("indicator")), c);
  std::vector<AffinePiece> pieces;
  const Json& ps = field(j, "pieces");
  if (!ps.is_array()) throw ParseError("pieces must be an array");
  for (const auto& p : ps) pieces.push_back({parse_vector(field(p, "a")), number(field(p, "b"), "b")});
  std::vector<Halfspace> domain;
  if (j.contains("domain")) {
    if (!j.at("domain").is_array()) throw ParseError("domain must be an array");
    for (const auto& h : j.at("domain")) {
      domain.push_back({parse_vector(field(h, "c")), number(field(h, "d"), "d")});
    }
  }
  const int n = j.contains("dim") ? static_cast<int>(number(j.at("dim"), "dim")) : -1;
  return act_add_constant(PiecewiseAffineConvex(std::move(pieces), std::move(domain), n), c);
}

WeightFunction parse_weight(const Json& j) {
  if (j.is_object() && j.contains("tent")) {
    const Json& t = j.at("tent");
    const double h = t.contains("height") ? number(t.at("height"), "height") : 1.0;
    const double w = t.contains("width") ? number(t.at("width"), "width") : 1.0;
    return WeightFunction::tent(h, w);
  }
  return WeightFunction(numbers(field(j, "breakpoints"), "breakpoints"),
                        numbers(field(j, "values"), "values"));
}

QuadratureConfig parse_config(const Json& j, QuadratureConfig base) {
  if (!j.is_object()) throw ParseError("config must be an object");
  if (j.contains("nodes")) base.nodes = static_cast<int>(number(j.at("nodes"), "nodes"));
  if (j.contains("tolerance")) base.tolerance = number(j.at("tolerance"), "tolerance");
  if (j.contains("max_depth")) base.max_depth = static_cast<int>(number(j.at("max_depth"), "max_depth"));
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) throw ParseError("seed must be a nonnegative integer");
    base.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("directions")) base.directions = vectors(j.at("directions"), "directions");
  base.validate();
  return base;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Json to_json(const Polytope& p) {
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  return Json{{"vertices", vs}};
}

Json to_json(const DiscreteSphericalMeasure& m) {
  Json atoms = Json::array();
  for (const auto& a : m.atoms()) atoms.push_back(Json{{"dir", to_json(a.direction)}, {"w", a.weight}});
  return Json{{"atoms", atoms}};
}

Json to_json(const PiecewiseAffineConvex& u) {
  Json pieces = Json::array(), domain = Json::array();
  for (const auto& p : u.pieces()) pieces.push_back(Json{{"a", to_json(p.a)}, {"b", p.b}});
  for (const auto& h : u.domain()) domain.push_back(Json{{"c", to_json(h.normal)}, {"d", h.offset}});
  return Json{{"dim", u.dim()}, {"pieces", pieces}, {"domain", domain}};
}

Json to_json(const WeightFunction& zeta) {
  return Json{{"breakpoints", zeta.breakpoints()}, {"values", zeta.values()}};
}

Json to_json(const SupportBody& body) {
  Json dirs = Json::array();
  for (const auto& d : body.directions()) dirs.push_back(to_json(d));
  return Json{{"directions", dirs}, {"values", body.values()}};
}

Json to_json(const BodyResult& r) {
  return Json{{"support", to_json(r.body)}, {"error_estimate", r.error_estimate}};
}

Json to_json(const LyzMeasure& r) {
  Json out = to_json(r.measure);
  out["error_estimate"] = r.error_estimate;
  return out;
}

Json to_json(const Report& r) {
  Json witness = Json::object();
  for (const auto& [k, v] : r.witness) witness[k] = v;
  Json out{{"check", r.check},
           {"max_residual", r.max_residual},
           {"tolerance", r.tolerance},
           {"pass", r.pass},
           {"witness", witness}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

std::string dump(const Json& j) {
  std::string out;
  write(j, 0, out);
  out += "\n";
  return out;
}

void write_support_csv(const SupportBody& body, std::ostream& out) {
  const auto& dirs = body.directions();
  const int n = dirs.empty() ? 0 : static_cast<int>(dirs.front().size());
  if (n == 2) {
    out << "angle,support\n";
  } else if (n == 3) {
    out << "azimuth,inclination,support\n";
  } else {
    for (int i = 0; i < n; ++i) out << "z" << i << ",";
    out << "support\n";
  }
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    const Vector& z = dirs[k];
    if (n == 2) {
      out << format_double(std::atan2(z[1], z[0]));
    } else if (n == 3) {
      out << format_double(std::atan2(z[1], z[0])) << ","
          << format_double(std::acos(std::clamp(z[2] / z.norm(), -1.0, 1.0)));
    } else {
      for (int i = 0; i < n; ++i) out << (i ? "," : "") << format_double(z[i]);
    }
    out << "," << format_double(body.values()[k]) << "\n";
  }
}

}  // namespace funcbody::io
