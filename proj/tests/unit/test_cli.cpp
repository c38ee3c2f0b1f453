#include <doctest.h>

#include <sstream>
#include <string>

#include "cli/cli.hpp"

using namespace mediator::cli;

namespace {

std::string data(const std::string& name) { return std::string(MEDIATOR_DATA_DIR) + "/" + name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(RunConfig config) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run(config, out, err);
  return {code, out.str(), err.str()};
}

RunConfig make(const std::string& sub, std::vector<std::string> inputs) {
  RunConfig c;
  c.subcommand = sub;
  c.inputs = std::move(inputs);
  return c;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(call(make("validate", {data("example1_table2.json")})).code == kOk);
  auto bad = call(make("validate", {data("bad_prior.json")}));
  CHECK(bad.code == kInputError);
  CHECK(bad.out.find("PriorNotNormalized") != std::string::npos);
  auto missing = call(make("validate", {data("missing.json")}));
  CHECK(missing.code == kInputError);
  CHECK(missing.out.find("FileNotFound") != std::string::npos);
}

TEST_CASE("decide") {
  CHECK(call(make("decide", {data("example1_table2.json")})).code == kOk);
  auto rejected = call(make("decide", {data("example1_modified.json")}));
  CHECK(rejected.code == kRejected);
  CHECK(rejected.out.find("FLoop") != std::string::npos);
  CHECK(call(make("decide", {data("negotiation_infeasible.json")})).code == kRejected);
  CHECK(call(make("decide", {data("negotiation_matched.json")})).code == kOk);
  RunConfig sub = make("decide", {data("example1_modified.json")});
  sub.players = {"2"};
  CHECK(call(sub).code == kOk);
  RunConfig text = make("decide", {data("example1_table2.json")});
  text.format = Format::Text;
  CHECK(call(text).code == kOk);
}

TEST_CASE("check") {
  RunConfig c = make("check", {data("example1_table2.json")});
  c.phi_path = data("example1_phi.json");
  CHECK(call(c).code == kOk);
  c.phi_path = data("example1_phi_bad.json");
  CHECK(call(c).code == kRejected);
}

TEST_CASE("verify and simulate") {
  RunConfig v = make("verify", {data("example1_table2.json")});
  v.kernel_path = data("example1_kernel.json");
  CHECK(call(v).code == kOk);
  v.inputs = {data("example1_table1.json")};
  CHECK(call(v).code == kMismatch);
  v.signal = "nope";
  CHECK(call(v).code == kInputError);

  RunConfig s = make("simulate", {data("example1_table2.json")});
  s.kernel_path = data("example1_kernel.json");
  s.samples = 20000;
  s.seed = 1;
  auto first = call(s);
  CHECK(first.code == kOk);
  CHECK(call(s).out == first.out);
}

TEST_CASE("multi") {
  RunConfig c = make("multi", {data("coin.json"), data("coin_belief_2_3.json"), data("coin_belief_1_3.json")});
  c.semantics = "pp";
  CHECK(call(c).code == kOk);
  RunConfig n = make("multi", {data("coin.json"), data("coin_belief_1_2.json"), data("coin_belief_1.json")});
  auto r = call(n);
  CHECK(r.code == kRejected);
  CHECK(r.out.find("NotSPP") != std::string::npos);
  n.degraded = true;
  CHECK(call(n).code == kOk);
}

TEST_CASE("potential, ckc and demos") {
  CHECK(call(make("potential", {data("prisoners_dilemma.json")})).code == kOk);
  CHECK(call(make("potential", {data("matching_pennies.json")})).code == kRejected);
  CHECK(call(make("ckc", {data("example1_table2.json")})).code == kOk);
  CHECK(call(make("demo", {"example1"})).code == kOk);
  CHECK(call(make("demo", {"negotiation"})).code == kOk);
  CHECK(call(make("demo", {"unknown"})).code == kInputError);
  CHECK(call(make("nonsense", {})).code == kInputError);
}
