#include <string>

#include "doctest.h"
#include "json.hpp"

#include "gpd/builders.hpp"
#include "gpd/degroupoidify.hpp"
#include "gpd/errors.hpp"
#include "gpd/group.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/json_io.hpp"
#include "gpd/linalg.hpp"
#include "gpd/oscillator.hpp"
#include "gpd/span.hpp"

using namespace gpd;
using jsonio::JsonError;

TEST_CASE("groupoid documents round trip") {
  const GroupoidPtr tower = osc::fin_sets(3);
  const std::string doc = jsonio::groupoid_json(*tower);
  const GroupoidPtr back = jsonio::parse_groupoid(doc);
  CHECK(jsonio::groupoid_json(*back) == doc);
  CHECK(same_shape(*tower, *back));
  CHECK(validate_groupoid(*back).ok);
  CHECK(cardinality(*back) == Rational(8, 3));

  const GroupoidPtr s3 = group_groupoid(std::make_shared<Group>(symmetric_group(3)));
  const std::string doc2 = jsonio::groupoid_json(*s3);
  const GroupoidPtr back2 = jsonio::parse_groupoid(doc2);
  CHECK(jsonio::groupoid_json(*back2) == doc2);
  CHECK(cardinality(*back2) == Rational(1, 6));
}

TEST_CASE("span documents round trip") {
  const Span lower = osc::annihilation_span(3);
  const std::string doc = jsonio::span_json(lower);
  const Span back = jsonio::parse_span(doc);
  CHECK(jsonio::span_json(back) == doc);
  CHECK(validate_span(back).ok);

  const ClassTable rows = class_table(back.left.target);
  const ClassTable cols = class_table(back.right.target);
  const ClassTable rows0 = class_table(lower.left.target);
  const ClassTable cols0 = class_table(lower.right.target);
  CHECK(matrix_of(rows, cols, back) == matrix_of(rows0, cols0, lower));

  const Span id = identity_span(osc::fin_sets(2));
  const Span id_back = jsonio::parse_span(jsonio::span_json(id));
  const ClassTable t = class_table(id_back.left.target);
  CHECK(matrix_of(t, t, id_back) == RationalMatrix::identity(3));
}

TEST_CASE("state documents round trip") {
  for (const GroupoidOver& state : {osc::number_state(2, 3), osc::two_colored_state(3)}) {
    const std::string doc = jsonio::over_json(state);
    const GroupoidOver back = jsonio::parse_over(doc);
    CHECK(jsonio::over_json(back) == doc);
    CHECK(validate_functor(back.projection).ok);
    const ClassTable t0 = class_table(state.projection.target);
    const ClassTable t1 = class_table(back.projection.target);
    CHECK(vector_of(t1, back) == vector_of(t0, state));
  }
}

TEST_CASE("vector and matrix serialization") {
  const GroupoidPtr base = osc::fin_sets(2);
  const ClassTable table = class_table(base);

  const RationalVector v = vector_of(table, osc::number_state(1, 2));
  CHECK(jsonio::vector_json(table, v) ==
        "{\"classes\":[0,1,2],\"entries\":[\"0/1\",\"1/1\",\"0/1\"]}");

  const RationalMatrix id = RationalMatrix::identity(3);
  CHECK(jsonio::matrix_json(table, table, id) ==
        "{\"col_classes\":[0,1,2],\"entries\":[[\"1/1\",\"0/1\",\"0/1\"],"
        "[\"0/1\",\"1/1\",\"0/1\"],[\"0/1\",\"0/1\",\"1/1\"]],\"row_classes\":[0,1,2]}");
  CHECK(jsonio::matrix_csv(table, table, id) ==
        "class,0,1,2\n0,1/1,0/1,0/1\n1,0/1,1/1,0/1\n2,0/1,0/1,1/1\n");

  CHECK(jsonio::envelope("ok", "{\"x\":1}") == "{\"payload\":{\"x\":1},\"status\":\"ok\"}");
}

namespace {

nlohmann::json base_doc() {
  static const std::string text = jsonio::groupoid_json(*osc::fin_sets(2));
  return nlohmann::json::parse(text);
}

template <typename F>
void expect_shape_error(F mutate) {
  nlohmann::json doc = base_doc();
  mutate(doc);
  CHECK_THROWS_AS(jsonio::parse_groupoid(doc.dump()), JsonError);
}

}  // namespace

TEST_CASE("document shape errors") {
  CHECK_THROWS_AS(jsonio::parse_groupoid("not json"), JsonError);
  CHECK_THROWS_AS(jsonio::parse_groupoid("[1,2]"), JsonError);

  expect_shape_error([](nlohmann::json& d) { d.erase("objects"); });
  expect_shape_error([](nlohmann::json& d) { d["extra"] = 1; });
  expect_shape_error([](nlohmann::json& d) { d["objects"] = {0, 1, 3}; });
  expect_shape_error([](nlohmann::json& d) { d["morphisms"][1]["id"] = 0; });
  expect_shape_error([](nlohmann::json& d) { d["morphisms"][0]["src"] = 99; });
  expect_shape_error([](nlohmann::json& d) { d["identity"].erase("0"); });
  expect_shape_error([](nlohmann::json& d) {
    d["identity"]["01"] = d["identity"]["1"];
    d["identity"].erase("1");
  });
  expect_shape_error([](nlohmann::json& d) {
    d["inverse"]["x"] = 0;
  });
  expect_shape_error([](nlohmann::json& d) { d["inverse"]["0"] = 99; });
  expect_shape_error([](nlohmann::json& d) { d["compose"][0] = {0, 0}; });

  const std::string span_doc = jsonio::span_json(identity_span(osc::fin_sets(2)));
  nlohmann::json sd = nlohmann::json::parse(span_doc);
  sd["left"]["source"] = "left";
  CHECK_THROWS_AS(jsonio::parse_span(sd.dump()), JsonError);
  sd = nlohmann::json::parse(span_doc);
  sd.erase("right");
  CHECK_THROWS_AS(jsonio::parse_span(sd.dump()), JsonError);

  const std::string over_doc = jsonio::over_json(osc::number_state(1, 2));
  nlohmann::json od = nlohmann::json::parse(over_doc);
  od["projection"]["target"] = "total";
  CHECK_THROWS_AS(jsonio::parse_over(od.dump()), JsonError);
}

TEST_CASE("content violations are structural") {
  // Wrong endpoints on an identity entry are caught while the tables are
  // assembled; a compose row that merely points at the wrong product
  // survives assembly and falls to the validator.
  nlohmann::json doc = base_doc();
  doc["identity"]["2"] = doc["identity"]["1"];
  CHECK_THROWS_AS(jsonio::parse_groupoid(doc.dump()), StructuralError);

  doc = base_doc();
  for (auto& row : doc["compose"]) {
    if (row[2] != row[0] && row[2] != row[1]) {
      row[2] = row[1];
      break;
    }
  }
  const GroupoidPtr damaged = jsonio::parse_groupoid(doc.dump());
  CHECK_FALSE(validate_groupoid(*damaged).ok);
}

TEST_CASE("serialization bound") {
  const GroupoidPtr tower = osc::fin_sets(2);
  CHECK_THROWS_AS(jsonio::groupoid_json(*tower, 3), BoundError);
}
