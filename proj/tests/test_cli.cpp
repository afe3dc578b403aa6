#include <doctest.h>

#include <cmath>

#include "fibint/cli.hpp"
#include "test_util.hpp"

using namespace fibint;

namespace {

JobConfig base_config(const std::string& command) {
  JobConfig c;
  c.command = command;
  c.threads = 1;
  return c;
}

}  // namespace

TEST_CASE("compute reports odd classes as zero for the rank-1 orbit") {
  JobConfig c = base_config("compute");
  c.group = "A1";
  c.xi = "1,-1";
  c.k_max = 6;
  JobResult r = run_job(c);
  REQUIRE(r.exit_code == 0);
  const Json& classes = r.report["result"]["classes"];
  for (int k : {1, 3, 5}) CHECK(classes[std::to_string(k)]["terms"].empty());
  for (int k : {2, 4, 6}) CHECK_FALSE(classes[std::to_string(k)]["terms"].empty());
  CHECK(r.report["schema"] == "1");
  CHECK(r.report["config"]["seed"] == kDefaultSeed);
}

TEST_CASE("emitted polynomials re-parse to identical canonical forms") {
  JobConfig c = base_config("compute");
  c.group = "A2";
  c.xi = "3,-1,-2";
  c.k_max = 5;
  JobResult r = run_job(c);
  REQUIRE(r.exit_code == 0);
  for (const auto& [k, pj] : r.report["result"]["classes"].items()) {
    Poly parsed = poly_from_json(pj);
    CHECK(poly_to_json(parsed) == pj);
  }

  DetRng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    Poly p = testutil::random_poly(rng, 4, 5, 6);
    CHECK(poly_from_json(poly_to_json(p)) == p);
  }
}

TEST_CASE("identical configs give byte-identical reports modulo the timestamp") {
  JobConfig c = base_config("fullness");
  c.group = "A3";
  c.xi = "1,1,-1,-1";
  c.cutoff = 4;
  JobResult a = run_job(c);
  JobResult b = run_job(c);
  CHECK(strip_timestamp(a.report).dump(2) == strip_timestamp(b.report).dump(2));
  CHECK(a.report["result"]["full_up_to_cutoff"] == false);
  CHECK(a.report["result"]["missing_degrees"] == Json::array({3}));

  JobConfig o = base_config("oracle");
  o.group = "SU2";
  o.xi = "1,-1";
  o.samples = 5000;
  o.k_max = 4;
  JobResult oa = run_job(o);
  JobResult ob = run_job(o);
  CHECK(strip_timestamp(oa.report).dump(2) == strip_timestamp(ob.report).dump(2));
}

TEST_CASE("error reports carry the taxonomy and exit codes") {
  JobConfig c = base_config("compute");
  c.group = "A2";
  c.xi = "0,1,-1";  // not dominant
  JobResult r = run_job(c);
  CHECK(r.exit_code == 1);
  CHECK(r.report["error"]["type"] == "domain_error");
  std::string msg = r.report["error"]["message"];
  CHECK(msg.find("dominant") != std::string::npos);

  c.group = "E8";
  c.xi = "1,-1";
  r = run_job(c);
  CHECK(r.exit_code == 1);
  CHECK(r.report["error"]["type"] == "config_error");

  JobConfig m = base_config("molien");
  m.group = "B7";
  JobResult rm = run_job(m);
  CHECK(rm.exit_code == 1);
  CHECK(rm.report["error"]["type"] == "resource_error");

  JobConfig bad = base_config("frobnicate");
  JobResult rb = run_job(bad);
  CHECK(rb.exit_code == 1);
  CHECK(rb.report["error"]["type"] == "config_error");
}

TEST_CASE("oracle command passes on the rank-1 chain and reports the constant") {
  JobConfig c = base_config("oracle");
  c.group = "SU2";
  c.xi = "1,-1";
  c.x_eval = "1,-1";
  c.samples = 50000;
  c.k_max = 6;
  c.threads = 2;
  JobResult r = run_job(c);
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["result"]["verdict"] == "PASS");
  double fitted = r.report["result"]["fit"]["fitted_constant"];
  CHECK(std::abs(fitted - 0.5) < 0.02);
}

TEST_CASE("oracle estimates-only mode for orthogonal groups") {
  JobConfig c = base_config("oracle");
  c.group = "SO3";
  c.xi = "2,-1,-1";
  c.samples = 2000;
  c.k_max = 2;
  JobResult r = run_job(c);
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["result"]["verdict"] == "ESTIMATES_ONLY");
  CHECK(r.report["result"]["fit"].is_null());
}

TEST_CASE("molien command emits the dimension table") {
  JobConfig c = base_config("molien");
  c.group = "A2";
  c.max_degree = 6;
  JobResult r = run_job(c);
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["result"]["invariant_dims"] ==
        Json::array({1, 0, 1, 1, 1, 1, 2}));
}

TEST_CASE("product command checks both computation paths") {
  JobConfig c = base_config("product");
  c.group = "A1xA1";
  c.xi = "1,-1,1,-1";
  c.cutoff = 4;
  JobResult r = run_job(c);
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["result"]["paths_agree"] == true);
  CHECK(r.report["result"]["convolution"]["algebra_dims"] ==
        Json::array({1, 0, 2, 0, 3}));
}

TEST_CASE("fullness surfaces standard generator membership") {
  JobConfig c = base_config("fullness");
  c.group = "D4";
  c.xi = "1,1,1,1";
  c.cutoff = 4;
  JobResult r = run_job(c);
  REQUIRE(r.exit_code == 0);
  const Json& membership = r.report["result"]["generator_membership"];
  CHECK(membership["p1"] == true);
  CHECK(membership.contains("euler"));
}
