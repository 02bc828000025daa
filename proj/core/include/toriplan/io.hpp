#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toriplan/complex.hpp"
#include "toriplan/planner.hpp"

namespace toriplan {

// Parse errors throw Error(kParse) with the source name and either a
// line:column or the offending field path ("facets[2][0]").

/// {"n": int, "facets": [[int, ...], ...]}, 1-based.
SimplicialComplex parse_complex(std::string_view text, std::string_view source = "<input>");
/// {"n": int, "edges": [[int, int], ...]}, 1-based.
Graph parse_graph(std::string_view text, std::string_view source = "<input>");

SimplicialComplex load_complex(const std::filesystem::path& path);
Graph load_graph(const std::filesystem::path& path);

/// Canonical form: maximal faces in bit order, compact.
std::string complex_to_json(const SimplicialComplex& x);

/// {"complex": {...}?, "x": [...], "y": [...]}. A point is a list of n
/// coordinates, each an angle (S^1 only) or a vector of the ambient
/// dimension with norm within 1e-6 of 1. A missing complex means the
/// full product.
struct PlanInput {
  SimplicialComplex complex;
  ProductPoint x;
  ProductPoint y;
};

PlanInput parse_plan_input(std::string_view text, SphereKind sphere,
                           std::string_view source = "<input>");
PlanInput load_plan_input(const std::filesystem::path& path, SphereKind sphere);

struct PathSample {
  double t;
  ProductPoint p;
};

/// `count` >= 2 evenly spaced samples on [0, 1], endpoints included.
std::vector<PathSample> sample_path(const ProductPath& path, int count);

/// Header "t,x1_1,...,x1_m,x2_1,...", one row per sample, 17 significant digits.
void write_path_csv(std::ostream& out, const std::vector<PathSample>& samples);

/// Whole file as a string; throws kParse when it cannot be read.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace toriplan
