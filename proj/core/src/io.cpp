#include "toriplan/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "toriplan/error.hpp"

namespace toriplan {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string_view source, const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParse, std::string(source) + ": " + where + ": " + what);
}

json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line:column.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    fail(source, "line " + std::to_string(line) + ":" + std::to_string(column),
         "malformed JSON");
  }
}

const json& field(const json& obj, const char* name, std::string_view source) {
  if (!obj.is_object()) fail(source, "top level", "expected an object");
  const auto it = obj.find(name);
  if (it == obj.end()) fail(source, name, "missing field");
  return *it;
}

int as_int(const json& v, const std::string& where, std::string_view source) {
  if (!v.is_number_integer()) fail(source, where, "expected an integer, got " + v.dump());
  const auto value = v.get<std::int64_t>();
  if (value < -1'000'000 || value > 1'000'000) fail(source, where, "integer out of range");
  return static_cast<int>(value);
}

double as_double(const json& v, const std::string& where, std::string_view source) {
  if (!v.is_number()) fail(source, where, "expected a number, got " + v.dump());
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(source, where, "non-finite number");
  return d;
}

int parse_n(const json& root, std::string_view source) {
  const int n = as_int(field(root, "n", source), "n", source);
  if (n < 0 || n > kMaxGround) {
    fail(source, "n", "must lie in 0.." + std::to_string(kMaxGround) + ", got " + std::to_string(n));
  }
  return n;
}

SimplicialComplex complex_from_json(const json& root, std::string_view source,
                                    const std::string& prefix) {
  const int n = parse_n(root, source);
  const json& facets = field(root, "facets", source);
  if (!facets.is_array()) fail(source, prefix + "facets", "expected an array of arrays");
  std::vector<VertexSet> sets;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const std::string where = prefix + "facets[" + std::to_string(f) + "]";
    if (!facets[f].is_array()) fail(source, where, "expected an array of vertices");
    VertexSet s;
    for (std::size_t j = 0; j < facets[f].size(); ++j) {
      const std::string at = where + "[" + std::to_string(j) + "]";
      const int v = as_int(facets[f][j], at, source);
      if (v < 1 || v > n) {
        fail(source, at, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      }
      if (s.contains(v)) fail(source, at, "repeated vertex " + std::to_string(v));
      s |= VertexSet::singleton(v);
    }
    sets.push_back(s);
  }
  return SimplicialComplex::from_facets(n, sets);
}

SpherePoint point_from_json(const json& v, SphereKind sphere, const std::string& where,
                            std::string_view source) {
  if (v.is_number()) {
    if (sphere.parity != Parity::kOdd || sphere.k != 1) {
      fail(source, where, "angles are only accepted on S^1");
    }
    return SpherePoint::from_angle(as_double(v, where, source));
  }
  if (!v.is_array()) fail(source, where, "expected an angle or a coordinate vector");
  const auto dim = static_cast<std::size_t>(sphere.ambient_dim());
  if (v.size() != dim) {
    fail(source, where,
         "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(v.size()));
  }
  std::vector<double> c(dim);
  double sq = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    c[i] = as_double(v[i], where + "[" + std::to_string(i) + "]", source);
    sq += c[i] * c[i];
  }
  if (std::abs(std::sqrt(sq) - 1.0) > 1e-6) fail(source, where, "not a unit vector");
  return SpherePoint::normalized(sphere, std::move(c));
}

ProductPoint product_from_json(const json& root, const char* name, SphereKind sphere,
                               std::string_view source) {
  const json& v = field(root, name, source);
  if (!v.is_array() || v.empty()) fail(source, name, "expected a non-empty array of coordinates");
  if (v.size() > static_cast<std::size_t>(kMaxGround)) fail(source, name, "too many coordinates");
  std::vector<SpherePoint> coords;
  for (std::size_t i = 0; i < v.size(); ++i) {
    coords.push_back(point_from_json(v[i], sphere, std::string(name) + "[" + std::to_string(i) + "]",
                                     source));
  }
  return ProductPoint(sphere, std::move(coords));
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SimplicialComplex parse_complex(std::string_view text, std::string_view source) {
  return complex_from_json(parse_json(text, source), source, "");
}

Graph parse_graph(std::string_view text, std::string_view source) {
  const json root = parse_json(text, source);
  const int n = parse_n(root, source);
  const json& edges = field(root, "edges", source);
  if (!edges.is_array()) fail(source, "edges", "expected an array of pairs");
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string where = "edges[" + std::to_string(e) + "]";
    if (!edges[e].is_array() || edges[e].size() != 2) fail(source, where, "expected [u, v]");
    const int u = as_int(edges[e][0], where + "[0]", source);
    const int v = as_int(edges[e][1], where + "[1]", source);
    for (int w : {u, v}) {
      if (w < 1 || w > n) {
        fail(source, where, "vertex " + std::to_string(w) + " outside 1.." + std::to_string(n));
      }
    }
    if (u == v) fail(source, where, "loop at vertex " + std::to_string(u));
    pairs.emplace_back(u, v);
  }
  try {
    return Graph::from_edges(n, pairs);
  } catch (const Error& err) {
    fail(source, "edges", err.what());
  }
}

SimplicialComplex load_complex(const std::filesystem::path& path) {
  return parse_complex(read_text_file(path), path.string());
}

Graph load_graph(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path), path.string());
}

std::string complex_to_json(const SimplicialComplex& x) {
  json facets = json::array();
  for (VertexSet m : x.maximal_faces()) facets.push_back(m.members());
  return json{{"n", x.n()}, {"facets", std::move(facets)}}.dump();
}

PlanInput parse_plan_input(std::string_view text, SphereKind sphere, std::string_view source) {
  const json root = parse_json(text, source);
  if (!root.is_object()) fail(source, "top level", "expected an object");
  ProductPoint x = product_from_json(root, "x", sphere, source);
  ProductPoint y = product_from_json(root, "y", sphere, source);
  if (x.n() != y.n()) {
    fail(source, "y", "has " + std::to_string(y.n()) + " coordinates but x has " +
                          std::to_string(x.n()));
  }
  SimplicialComplex complex = SimplicialComplex::full(x.n());
  if (const auto it = root.find("complex"); it != root.end()) {
    complex = complex_from_json(*it, source, "complex.");
    if (complex.n() != x.n()) {
      fail(source, "complex.n", "is " + std::to_string(complex.n()) + " but the points have " +
                                    std::to_string(x.n()) + " coordinates");
    }
  }
  return PlanInput{std::move(complex), std::move(x), std::move(y)};
}

PlanInput load_plan_input(const std::filesystem::path& path, SphereKind sphere) {
  return parse_plan_input(read_text_file(path), sphere, path.string());
}

std::vector<PathSample> sample_path(const ProductPath& path, int count) {
  if (count < 2) throw Error(ErrorCode::kInvalidArgument, "need at least 2 path samples");
  std::vector<PathSample> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    out.push_back({t, path.at(t)});
  }
  return out;
}

void write_path_csv(std::ostream& out, const std::vector<PathSample>& samples) {
  if (samples.empty()) return;
  const ProductPoint& first = samples.front().p;
  out << "t";
  for (int i = 0; i < first.n(); ++i) {
    for (int c = 0; c < first[i].dim(); ++c) out << ",x" << i + 1 << "_" << c + 1;
  }
  out << "\n" << std::setprecision(17);
  for (const PathSample& s : samples) {
    out << s.t;
    for (const SpherePoint& p : s.p.coords()) {
      for (double v : p.coords()) out << "," << v;
    }
    out << "\n";
  }
}

}  // namespace toriplan
