#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "doctest.h"
#include "pierce/body.hpp"
#include "pierce/gen.hpp"
#include "pierce/io.hpp"
#include "pierce/rng.hpp"

using namespace pierce;

namespace {

Instance awkward_instance() {
  Instance inst;
  inst.points.dim = 2;
  inst.points.points = {
      Point({0.1, 1.0 / 3.0}),
      Point({1e-300, -0.0}),
      Point({12345.678901234567, 3.141592653589793}),
      Point({-2.2250738585072014e-308, 1.7976931348623157e308}),
  };
  return inst;
}

std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "pierce_io_test";
  std::filesystem::create_directories(dir);
  return dir;
}

long long caught_line(const std::string& text, bool csv) {
  try {
    if (csv)
      parse_instance_csv(text);
    else
      parse_instance_json(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("instance json round-trip is lossless") {
  const ConvexBody ball = ConvexBody::ball(2, 1.0);
  const Instance gens[] = {
      gen_clusterable(ball, 2, 25, 2, 3),
      gen_far(ball, 2, 20, 2, 0.3, 4),
      gen_outliers(ball, 2, 20, 2, 0.2, 10.0, 5),
      awkward_instance(),
  };
  for (const Instance& inst : gens) {
    const Instance back = parse_instance_json(instance_to_json(inst));
    CHECK(back.points.dim == inst.points.dim);
    REQUIRE(back.points.points == inst.points.points);
    REQUIRE(back.truth.has_value() == inst.truth.has_value());
    if (!inst.truth) continue;
    REQUIRE(back.truth->index() == inst.truth->index());
    if (const auto* c = std::get_if<TruthClusterable>(&*inst.truth)) {
      CHECK(std::get<TruthClusterable>(*back.truth).centers == c->centers);
    } else if (const auto* f = std::get_if<TruthFar>(&*inst.truth)) {
      CHECK(std::get<TruthFar>(*back.truth).epsilon == f->epsilon);
      CHECK(std::get<TruthFar>(*back.truth).spike_count == f->spike_count);
    } else {
      const auto& o = std::get<TruthOutliers>(*inst.truth);
      CHECK(std::get<TruthOutliers>(*back.truth).centers == o.centers);
      CHECK(std::get<TruthOutliers>(*back.truth).outlier_indices == o.outlier_indices);
    }
  }
}

TEST_CASE("instance csv round-trip keeps points exactly and drops truth") {
  const ConvexBody ball = ConvexBody::ball(3, 2.0);
  const Instance inst = gen_clusterable(ball, 2, 40, 3, 9);
  const std::string csv = instance_to_csv(inst);
  CHECK(csv.rfind("x1,x2,x3\n", 0) == 0);
  const Instance back = parse_instance_csv(csv);
  CHECK(back.points.dim == 3);
  CHECK(back.points.points == inst.points.points);
  CHECK(!back.truth.has_value());

  const Instance awk = awkward_instance();
  CHECK(parse_instance_csv(instance_to_csv(awk)).points.points == awk.points.points);
}

TEST_CASE("csv parser tolerates blank lines and padding") {
  const Instance inst = parse_instance_csv("x1,x2\n 1.5 ,\t-2 \n\n  \n3,4\n");
  REQUIRE(inst.points.size() == 2);
  CHECK(inst.points[0] == Point({1.5, -2.0}));
  CHECK(inst.points[1] == Point({3.0, 4.0}));
}

TEST_CASE("body spec round-trips for every family") {
  const ConvexBody bodies[] = {
      ConvexBody::ball(3, 2.5),
      ConvexBody::box({1.0, 0.25, 4.0}),
      ConvexBody::ellipsoid({{2.0, 0.5}, {0.5, 1.0}}),
      ConvexBody::polytope(2, {{Point({1.0, 1.0}), 1.0},
                               {Point({-1.0, -1.0}), 1.0},
                               {Point({1.0, -1.0}), 1.0},
                               {Point({-1.0, 1.0}), 1.0}}),
  };
  Rng rng(77);
  for (const ConvexBody& body : bodies) {
    const ConvexBody back = parse_body_spec(body_spec_to_json(body));
    REQUIRE(back.kind() == body.kind());
    REQUIRE(back.dim() == body.dim());
    const Point origin(body.dim());
    for (int t = 0; t < 200; ++t) {
      Point p(body.dim());
      for (int j = 0; j < body.dim(); ++j) p[j] = rng.real(-3.0, 3.0);
      CHECK(back.contains(origin, p) == body.contains(origin, p));
    }
  }
  const ConvexBody box = parse_body_spec(body_spec_to_json(ConvexBody::box({1.0, 0.25})));
  CHECK(box.as_box().half_widths == std::vector<double>{1.0, 0.25});
  const ConvexBody ball = parse_body_spec(body_spec_to_json(ConvexBody::ball(4, 0.75)));
  CHECK(ball.as_ball().radius == 0.75);
  CHECK(ball.dim() == 4);
}

TEST_CASE("ball specs take their dimension from the hint or the dim field") {
  const ConvexBody hinted = parse_body_spec(R"({"kind":"ball","radius":1.5})", 3);
  CHECK(hinted.dim() == 3);
  CHECK(hinted.as_ball().radius == 1.5);
  const ConvexBody explicit_dim = parse_body_spec(R"({"kind":"ball","dim":2,"radius":1})", 5);
  CHECK(explicit_dim.dim() == 2);
  CHECK_THROWS_AS(parse_body_spec(R"({"kind":"ball","radius":1})"), ParseError);
}

TEST_CASE("body spec errors are located parse errors") {
  CHECK_THROWS_AS(parse_body_spec("not json at all"), ParseError);
  CHECK_THROWS_AS(parse_body_spec("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_body_spec(R"({"radius":1})"), ParseError);
  CHECK_THROWS_AS(parse_body_spec(R"({"kind":"pyramid","radius":1})"), ParseError);
  CHECK_THROWS_AS(parse_body_spec(R"({"kind":"box","half_widths":[]})"), ParseError);
  CHECK_THROWS_AS(parse_body_spec(R"({"kind":"box","half_widths":[1,-1]})"), ParseError);
  CHECK_THROWS_AS(parse_body_spec(R"({"kind":"ellipsoid"})"), ParseError);
  CHECK_THROWS_AS(parse_body_spec(R"({"kind":"ellipsoid","shape":[[1,0],[0,-1]]})"), ParseError);
  CHECK_THROWS_AS(parse_body_spec(R"({"kind":"polytope","facets":[{"normal":[1,0]}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_body_spec(R"({"kind":"ball","dim":2,"radius":1e999})"), ParseError);
}

TEST_CASE("instance parse errors carry 1-based line numbers") {
  CHECK(caught_line("{\n\"dim\": 2,\n] oops\n}", false) == 3);
  CHECK(caught_line("y1,y2\n1,2\n", true) == 1);
  CHECK(caught_line("x1,x2\n1,2\n3\n", true) == 3);
  CHECK(caught_line("x1,x2\n1,foo\n", true) == 2);
  CHECK(caught_line("x1,x2\n1,2\n3,inf\n", true) == 3);
  CHECK(caught_line("", true) == 1);
}

TEST_CASE("instance json schema and shape are validated") {
  CHECK_THROWS_AS(parse_instance_json(R"({"schema":2,"dim":1,"points":[[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_instance_json(R"({"points":[[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_instance_json(R"({"dim":0,"points":[[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_instance_json(R"({"dim":2,"points":[[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_instance_json(R"({"dim":1,"points":[[0]],"truth":{"kind":"odd"}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance_json(R"({"dim":1,"points":[["a"]]})"), ParseError);

  const Instance no_schema = parse_instance_json(R"({"dim":1,"points":[[0],[2]]})");
  CHECK(no_schema.points.size() == 2);
  const Instance v1 = parse_instance_json(R"({"schema":1,"dim":1,"points":[[3]]})");
  CHECK(v1.points[0][0] == 3.0);
  const Instance null_truth = parse_instance_json(R"({"dim":1,"points":[[0]],"truth":null})");
  CHECK(!null_truth.truth.has_value());
}

TEST_CASE("load and save dispatch on the file extension") {
  const auto dir = temp_dir();
  const ConvexBody ball = ConvexBody::ball(2, 1.0);
  const Instance inst = gen_outliers(ball, 1, 15, 2, 0.2, 9.0, 42);

  const std::string jpath = (dir / "inst.json").string();
  save_instance(inst, jpath);
  {
    std::ifstream in(jpath);
    std::string first;
    std::getline(in, first);
    CHECK(first.rfind('{', 0) == 0);
  }
  const Instance jback = load_instance(jpath);
  CHECK(jback.points.points == inst.points.points);
  CHECK(jback.truth.has_value());

  const std::string cpath = (dir / "inst.csv").string();
  save_instance(inst, cpath);
  {
    std::ifstream in(cpath);
    std::string first;
    std::getline(in, first);
    CHECK(first == "x1,x2");
  }
  const Instance cback = load_instance(cpath);
  CHECK(cback.points.points == inst.points.points);
  CHECK(!cback.truth.has_value());

  CHECK_THROWS_WITH_AS(load_instance((dir / "missing.json").string()),
                       doctest::Contains("cannot open"), std::runtime_error);
  std::filesystem::remove_all(dir);
}
