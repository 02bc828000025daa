#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "toriplan/error.hpp"
#include "toriplan/io.hpp"

using namespace toriplan;

namespace {

std::string parse_error(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    return e.what();
  }
  ADD_FAILURE() << "no error raised";
  return {};
}

}  // namespace

TEST(ParseComplex, RoundTrip) {
  const SimplicialComplex x = parse_complex(R"({"n": 4, "facets": [[1,2],[2,3,4],[1]]})");
  EXPECT_EQ(x, SimplicialComplex::from_facets(4, {VertexSet{1, 2}, VertexSet{2, 3, 4}}));
  EXPECT_EQ(complex_to_json(x), R"({"facets":[[1,2],[2,3,4]],"n":4})");
  EXPECT_EQ(parse_complex(complex_to_json(x)), x);
}

TEST(ParseComplex, FieldContext) {
  EXPECT_NE(parse_error([] { parse_complex(R"({"n": 3, "facets": [[1], [2, 9]]})", "c.json"); })
                .find("c.json: facets[1][1]: vertex 9 outside 1..3"),
            std::string::npos);
  EXPECT_NE(parse_error([] { parse_complex(R"({"facets": []})"); }).find("n: missing field"),
            std::string::npos);
  EXPECT_NE(parse_error([] { parse_complex(R"({"n": 2, "facets": [[1, 1]]})"); }).find("repeated"),
            std::string::npos);
  EXPECT_NE(parse_error([] { parse_complex(R"({"n": 2, "facets": [["a"]]})"); }).find("facets[0][0]"),
            std::string::npos);
  EXPECT_NE(parse_error([] { parse_complex(R"({"n": 99, "facets": []})"); }).find("n: must lie"),
            std::string::npos);
}

TEST(ParseComplex, LineContext) {
  const std::string msg = parse_error([] { parse_complex("{\"n\": 2,\n \"facets\": [[1],\n  [2}\n", "x.json"); });
  EXPECT_NE(msg.find("x.json: line 3:"), std::string::npos) << msg;
}

TEST(ParseGraph, EdgesAndErrors) {
  const Graph g = parse_graph(R"({"n": 3, "edges": [[1,2],[3,2]]})");
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(2, 3));
  EXPECT_NE(parse_error([] { parse_graph(R"({"n": 3, "edges": [[1,1]]})"); }).find("edges[0]: loop"),
            std::string::npos);
  EXPECT_NE(parse_error([] { parse_graph(R"({"n": 3, "edges": [[1,2,3]]})"); }).find("expected [u, v]"),
            std::string::npos);
  EXPECT_NE(parse_error([] { parse_graph(R"({"n": 3, "edges": [[1,2],[2,1]]})"); }).find("edges"),
            std::string::npos);
}

TEST(ParsePlanInput, AnglesAndVectors) {
  const PlanInput a = parse_plan_input(R"({"x": [0, 1.5], "y": [3.0, 0]})", SphereKind{});
  EXPECT_EQ(a.complex, SimplicialComplex::full(2));
  EXPECT_NEAR(a.x[1][1], std::sin(1.5), 1e-15);

  const PlanInput b = parse_plan_input(
      R"({"complex": {"n": 1, "facets": [[1]]}, "x": [[0, 0.6, 0.8]], "y": [[1, 0, 0]]})",
      SphereKind{Parity::kEven, 1});
  EXPECT_EQ(b.x.n(), 1);
  EXPECT_NEAR(b.x[0][2], 0.8, 1e-15);
}

TEST(ParsePlanInput, Errors) {
  const SphereKind s2{Parity::kEven, 1};
  EXPECT_NE(parse_error([&] { parse_plan_input(R"({"x": [0.5], "y": [0]})", s2); }).find("x[0]: angles"),
            std::string::npos);
  EXPECT_NE(parse_error([&] { parse_plan_input(R"({"x": [[1, 1, 0]], "y": [[1,0,0]]})", s2); })
                .find("not a unit vector"),
            std::string::npos);
  EXPECT_NE(parse_error([] { parse_plan_input(R"({"x": [0, 1], "y": [0]})", SphereKind{}); }).find("y: has 1"),
            std::string::npos);
  EXPECT_NE(parse_error([] {
              parse_plan_input(R"({"complex": {"n": 3, "facets": []}, "x": [0], "y": [0]})", SphereKind{});
            }).find("complex.n"),
            std::string::npos);
}

TEST(PathExport, Csv) {
  const PlanResult r = plan_full_odd(ProductPoint::from_angles(std::vector<double>{0.0}),
                                     ProductPoint::from_angles(std::vector<double>{std::numbers::pi / 2}));
  const auto samples = sample_path(r.path, 3);
  ASSERT_EQ(samples.size(), 3u);
  std::ostringstream os;
  write_path_csv(os, samples);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t,x1_1,x1_2");
  std::getline(in, line);
  EXPECT_EQ(line, "0,1,0");
  std::getline(in, line);
  EXPECT_EQ(line.substr(0, 4), "0.5,");
  EXPECT_THROW(sample_path(r.path, 1), Error);
}

TEST(ReadFile, MissingFile) {
  EXPECT_THROW(read_text_file("/nonexistent/file.json"), Error);
}
