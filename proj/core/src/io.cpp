#include "pierce/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace pierce {

namespace {

using nlohmann::json;

long long line_of_offset(const std::string& text, std::size_t offset) {
  long long line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line_of_offset(text, e.byte));
  } catch (const json::exception& e) {
    // e.g. number overflow, which carries no byte offset
    throw ParseError(e.what(), 1);
  }
}

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number", 1);
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ParseError(std::string(what) + " must be finite", 1);
  return x;
}

std::vector<double> number_list(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw ParseError(std::string(what) + " must be a non-empty array", 1);
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(finite_number(v, what));
  return out;
}

std::vector<Point> point_list(const json& j, int d, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array", 1);
  std::vector<Point> pts;
  pts.reserve(j.size());
  for (const auto& row : j) {
    std::vector<double> c = number_list(row, what);
    if (static_cast<int>(c.size()) != d)
      throw ParseError(std::string(what) + " entry has wrong dimension", 1);
    pts.push_back(Point(std::move(c)));
  }
  return pts;
}

json points_to_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(json(p.coords));
  return arr;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(cur);
  for (auto& f : fields) {
    while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.erase(f.begin());
    while (!f.empty() && (f.back() == ' ' || f.back() == '\t' || f.back() == '\r')) f.pop_back();
  }
  return fields;
}

bool has_json_ext(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

ConvexBody parse_body_spec(const std::string& text, int dim_hint) {
  const json spec = parse_json(text);
  if (!spec.is_object()) throw ParseError("body spec must be a JSON object", 1);
  if (!spec.contains("kind") || !spec.at("kind").is_string())
    throw ParseError("body spec needs a string \"kind\"", 1);
  const std::string kind = spec.at("kind").get<std::string>();
  try {
    if (kind == "ball") {
      if (!spec.contains("radius")) throw ParseError("ball spec needs \"radius\"", 1);
      const double r = finite_number(spec.at("radius"), "radius");
      int d = dim_hint;
      if (spec.contains("dim")) {
        if (!spec.at("dim").is_number_integer())
          throw ParseError("\"dim\" must be an integer", 1);
        d = spec.at("dim").get<int>();
      }
      if (d < 1) throw ParseError("ball spec needs a positive \"dim\" or a dimension hint", 1);
      return ConvexBody::ball(d, r);
    }
    if (kind == "box") {
      if (!spec.contains("half_widths")) throw ParseError("box spec needs \"half_widths\"", 1);
      return ConvexBody::box(number_list(spec.at("half_widths"), "half_widths"));
    }
    if (kind == "ellipsoid") {
      if (!spec.contains("shape")) throw ParseError("ellipsoid spec needs \"shape\"", 1);
      const json& rows = spec.at("shape");
      if (!rows.is_array() || rows.empty())
        throw ParseError("\"shape\" must be a non-empty matrix", 1);
      std::vector<std::vector<double>> shape;
      for (const auto& row : rows) shape.push_back(number_list(row, "shape"));
      return ConvexBody::ellipsoid(std::move(shape));
    }
    if (kind == "polytope") {
      if (!spec.contains("facets")) throw ParseError("polytope spec needs \"facets\"", 1);
      const json& rows = spec.at("facets");
      if (!rows.is_array() || rows.empty())
        throw ParseError("\"facets\" must be a non-empty array", 1);
      std::vector<Facet> facets;
      for (const auto& row : rows) {
        if (!row.is_object() || !row.contains("normal") || !row.contains("offset"))
          throw ParseError("each facet needs \"normal\" and \"offset\"", 1);
        Facet f;
        f.normal = Point(number_list(row.at("normal"), "normal"));
        f.offset = finite_number(row.at("offset"), "offset");
        facets.push_back(std::move(f));
      }
      const int d = facets.front().normal.dim();
      return ConvexBody::polytope(d, std::move(facets));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1);
  }
  throw ParseError("unknown body kind \"" + kind + "\"", 1);
}

std::string body_spec_to_json(const ConvexBody& body) {
  json spec;
  switch (body.kind()) {
    case BodyKind::kBall:
      spec = {{"kind", "ball"}, {"radius", body.as_ball().radius}, {"dim", body.dim()}};
      break;
    case BodyKind::kBox:
      spec = {{"kind", "box"}, {"half_widths", body.as_box().half_widths}};
      break;
    case BodyKind::kEllipsoid:
      spec = {{"kind", "ellipsoid"}, {"shape", body.as_ellipsoid().shape}};
      break;
    case BodyKind::kPolytope: {
      json rows = json::array();
      for (const auto& f : body.as_polytope().facets)
        rows.push_back({{"normal", f.normal.coords}, {"offset", f.offset}});
      spec = {{"kind", "polytope"}, {"facets", std::move(rows)}};
      break;
    }
  }
  return spec.dump();
}

Instance parse_instance_json(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("instance must be a JSON object", 1);
  if (doc.contains("schema") &&
      (!doc.at("schema").is_number_integer() || doc.at("schema").get<long long>() != 1))
    throw ParseError("unsupported schema version", 1);
  if (!doc.contains("dim") || !doc.at("dim").is_number_integer())
    throw ParseError("instance needs an integer \"dim\"", 1);
  const int d = doc.at("dim").get<int>();
  if (d < 1) throw ParseError("\"dim\" must be >= 1", 1);
  if (!doc.contains("points")) throw ParseError("instance needs \"points\"", 1);

  Instance inst;
  inst.points.dim = d;
  inst.points.points = point_list(doc.at("points"), d, "points");

  if (doc.contains("truth") && !doc.at("truth").is_null()) {
    const json& t = doc.at("truth");
    if (!t.is_object() || !t.contains("kind") || !t.at("kind").is_string())
      throw ParseError("\"truth\" needs a string \"kind\"", 1);
    const std::string kind = t.at("kind").get<std::string>();
    if (kind == "clusterable") {
      if (!t.contains("centers")) throw ParseError("clusterable truth needs \"centers\"", 1);
      inst.truth = TruthClusterable{point_list(t.at("centers"), d, "centers")};
    } else if (kind == "far") {
      if (!t.contains("epsilon") || !t.contains("spike_count"))
        throw ParseError("far truth needs \"epsilon\" and \"spike_count\"", 1);
      TruthFar far;
      far.epsilon = finite_number(t.at("epsilon"), "epsilon");
      if (!t.at("spike_count").is_number_integer())
        throw ParseError("\"spike_count\" must be an integer", 1);
      far.spike_count = t.at("spike_count").get<long long>();
      inst.truth = far;
    } else if (kind == "outliers") {
      if (!t.contains("centers") || !t.contains("outlier_indices"))
        throw ParseError("outlier truth needs \"centers\" and \"outlier_indices\"", 1);
      TruthOutliers out;
      out.centers = point_list(t.at("centers"), d, "centers");
      const json& idx = t.at("outlier_indices");
      if (!idx.is_array()) throw ParseError("\"outlier_indices\" must be an array", 1);
      for (const auto& v : idx) {
        if (!v.is_number_integer()) throw ParseError("outlier indices must be integers", 1);
        out.outlier_indices.push_back(v.get<long long>());
      }
      inst.truth = std::move(out);
    } else {
      throw ParseError("unknown truth kind \"" + kind + "\"", 1);
    }
  }
  return inst;
}

std::string instance_to_json(const Instance& inst) {
  json doc;
  doc["schema"] = 1;
  doc["dim"] = inst.points.dim;
  doc["points"] = points_to_json(inst.points.points);
  if (inst.truth) {
    json t;
    if (const auto* c = std::get_if<TruthClusterable>(&*inst.truth)) {
      t = {{"kind", "clusterable"}, {"centers", points_to_json(c->centers)}};
    } else if (const auto* f = std::get_if<TruthFar>(&*inst.truth)) {
      t = {{"kind", "far"}, {"epsilon", f->epsilon}, {"spike_count", f->spike_count}};
    } else {
      const auto& o = std::get<TruthOutliers>(*inst.truth);
      t = {{"kind", "outliers"},
           {"centers", points_to_json(o.centers)},
           {"outlier_indices", o.outlier_indices}};
    }
    doc["truth"] = std::move(t);
  }
  return doc.dump(2) + "\n";
}

Instance parse_instance_csv(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  if (lines.empty()) throw ParseError("empty file", 1);

  const std::vector<std::string> header = split_fields(lines[0]);
  const int d = static_cast<int>(header.size());
  for (int j = 0; j < d; ++j)
    if (header[j] != "x" + std::to_string(j + 1))
      throw ParseError("expected header x1,...,xd", 1);

  Instance inst;
  inst.points.dim = d;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    bool blank = true;
    for (char ch : lines[li])
      if (ch != ' ' && ch != '\t' && ch != '\r') {
        blank = false;
        break;
      }
    if (blank) continue;
    const std::vector<std::string> fields = split_fields(lines[li]);
    if (static_cast<int>(fields.size()) != d)
      throw ParseError("expected " + std::to_string(d) + " fields, got " +
                           std::to_string(fields.size()),
                       static_cast<long long>(li + 1));
    Point p(d);
    for (int j = 0; j < d; ++j) {
      const std::string& f = fields[j];
      double x = 0;
      const auto res = std::from_chars(f.data(), f.data() + f.size(), x);
      if (res.ec != std::errc{} || res.ptr != f.data() + f.size() || !std::isfinite(x))
        throw ParseError("bad number \"" + f + "\"", static_cast<long long>(li + 1));
      p[j] = x;
    }
    inst.points.points.push_back(std::move(p));
  }
  return inst;
}

std::string instance_to_csv(const Instance& inst) {
  std::string out;
  for (int j = 0; j < inst.points.dim; ++j) {
    if (j) out += ',';
    out += "x" + std::to_string(j + 1);
  }
  out += '\n';
  char buf[64];
  for (const auto& p : inst.points.points) {
    for (int j = 0; j < inst.points.dim; ++j) {
      if (j) out += ',';
      std::snprintf(buf, sizeof buf, "%.17g", p[j]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

Instance load_instance(const std::string& path) {
  const std::string text = read_file(path);
  return has_json_ext(path) ? parse_instance_json(text) : parse_instance_csv(text);
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << (has_json_ext(path) ? instance_to_json(inst) : instance_to_csv(inst));
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace pierce
