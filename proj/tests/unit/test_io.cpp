#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "mediator/fixtures.hpp"
#include "mediator/io.hpp"

using namespace mediator;

namespace {

std::string data(const std::string& name) { return std::string(MEDIATOR_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("rationals travel as strings") {
  CHECK(parse_rational(Json("3/6")) == Rational(1, 2));
  CHECK(to_json(Rational(-2, 4)) == Json("-1/2"));
  CHECK_THROWS_AS(parse_rational(Json(0.5)), ParseError);
  CHECK_THROWS_AS(parse_rational(Json("1/0")), ParseError);
}

TEST_CASE("instance files round-trip byte for byte") {
  for (const char* name : {"example1_table2.json", "example1_table1.json", "example1_modified.json",
                           "negotiation_infeasible.json", "negotiation_matched.json", "coin.json"}) {
    CAPTURE(name);
    std::string text = slurp(data(name));
    Instance inst = parse_instance(parse_json_text(text));
    Json out = inst.joint_belief ? to_json(inst.model, *inst.joint_belief) : to_json(inst.model);
    CHECK(out.dump(2) + "\n" == text);
  }
}

TEST_CASE("games and kernels round-trip") {
  for (const char* name : {"prisoners_dilemma.json", "matching_pennies.json"}) {
    std::string text = slurp(data(name));
    CHECK(to_json(parse_game(parse_json_text(text))).dump(2) + "\n" == text);
  }
  Instance inst = parse_instance(read_json_file(data("example1_table2.json")));
  std::string text = slurp(data("example1_kernel.json"));
  SignalKernel k = parse_kernel(inst.model, parse_json_text(text));
  CHECK(k == fixtures::example1_kernel());
  CHECK(to_json(inst.model, k).dump(2) + "\n" == text);
}

TEST_CASE("parsed instances equal the fixtures") {
  Instance inst = parse_instance(read_json_file(data("example1_table2.json")));
  Model m = fixtures::example1_model();
  CHECK(inst.model == m);
  REQUIRE(inst.joint_belief.has_value());
  CHECK(*inst.joint_belief == fixtures::example1_table2(m));
}

TEST_CASE("phi tables") {
  Instance inst = parse_instance(read_json_file(data("example1_table2.json")));
  EdgeLabels labels = parse_phi(inst.model, read_json_file(data("example1_phi.json")));
  InfoGraph g = build_graph(inst.model);
  PLFunction phi = PLFunction::from_labels(g, labels);
  Json out = to_json(inst.model, phi);
  CHECK(PLFunction::from_labels(g, parse_phi(inst.model, out)).labels() == phi.labels());
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(read_json_file(data("does_not_exist.json")), FileNotFound);
  CHECK_THROWS_AS(parse_json_text("{ not json"), ParseError);
  CHECK_THROWS_AS(parse_instance(Json::object()), ParseError);
  CHECK_THROWS_AS(parse_instance(read_json_file(data("bad_prior.json"))), ValidationError);
}

TEST_CASE("verdict json carries the certificate") {
  Model m = fixtures::example1_model();
  Verdict v = decide_implementable(m, fixtures::example1_table2_modified(m));
  Json j = to_json(m, v);
  CHECK(j.dump().find("FLoop") != std::string::npos);
  Verdict ok = decide_implementable(m, fixtures::example1_table2(m));
  CHECK(to_json(m, ok).dump().find("tau") != std::string::npos);
}
