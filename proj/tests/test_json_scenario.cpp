#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "xmodcat/catalog.hpp"
#include "xmodcat/cohomology.hpp"
#include "xmodcat/json_io.hpp"
#include "xmodcat/scenario.hpp"

using namespace xmodcat;
using io::Json;
using testing::error_kind;

TEST_CASE("modules survive a JSON round trip") {
  for (const auto& nm : catalog_modules()) {
    INFO(nm.name);
    const Json j = io::to_json(*nm.module);
    const auto back = io::module_from_json(Json::parse(j.dump()), "module");
    CHECK(back == *nm.module);
  }
}

TEST_CASE("cochains survive a JSON round trip") {
  const auto q = testing::z2_module(cyclic_group(2), {0, 1});
  const auto b = testing::z2_module(cyclic_group(4), {0, 3, 2, 1});
  for (const auto& f : enumerate_2cocycles(q, b)) CHECK(io::cochain2_from_json(io::to_json(f), q, b, "f") == f);
  Cochain3 h = Cochain3::zero(q, b);
  h.c(1, 1) = 2;
  h.k(1, 1, 1) = 3;
  CHECK(io::cochain3_from_json(io::to_json(h), "h") == h);
}

TEST_CASE("schema errors name the offending path") {
  Json j = io::to_json(*catalog_module("Z2->Z4"));
  j["d"] = Json::array({0, 7});
  try {
    io::module_from_json(j, "inputs.module");
    FAIL("accepted an out-of-range d");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SchemaError);
    CHECK(std::string(e.what()).find("inputs.module.d") != std::string::npos);
  }
  j = io::to_json(*catalog_module("Z2->Z4"));
  j.erase("B");
  CHECK(error_kind([&] { io::module_from_json(j, "m"); }) == ErrorKind::SchemaError);
  CHECK(error_kind([&] { io::group_from_json(Json{{"name", "Z0"}}, "g"); }) == ErrorKind::SchemaError);
}

TEST_CASE("malformed JSON reports its location and exits 2") {
  const auto out = run_scenario_text("{\"kind\": \"validate\",\n  \"inputs\": [1, 2,, 3]}");
  CHECK(out.exit_code == 2);
  CHECK(out.report["status"] == "input-error");
  CHECK(out.report["error"].dump().find("line") != std::string::npos);
  CHECK(error_kind([] { io::parse("[1,"); }) == ErrorKind::ParseError);
}

TEST_CASE("scenario exit codes") {
  const Json base = {{"schema_version", 1},
                     {"kind", "validate"},
                     {"name", "t"},
                     {"inputs", {{"module", "S3/A3"}}}};
  CHECK(run_scenario(base).exit_code == 0);

  Json unknown = base;
  unknown["kind"] = "nonsense";
  CHECK(run_scenario(unknown).exit_code == 2);

  Json schema = base;
  schema["inputs"]["module"] = Json{{"B", {{"name", "Z2"}}}};
  CHECK(run_scenario(schema).exit_code == 2);

  Json claim = base;
  claim["expect"] = {{"validated", false}};
  const auto failed = run_scenario(claim);
  CHECK(failed.exit_code == 1);
  CHECK(failed.report["status"] == "fail");

  const Json big = {{"schema_version", 1},
                    {"kind", "cohomology-h2"},
                    {"name", "guarded"},
                    {"inputs",
                     {{"Q", {{"group", {{"name", "V4"}}}}}, {"B", {{"group", {{"name", "Z4"}}}}}, {"cross_check", true}}}};
  CHECK(run_scenario(big).exit_code == 0);
  RunOptions tight;
  tight.guard = 8;
  CHECK(run_scenario(big, tight).exit_code == 3);
}

TEST_CASE("reports do not depend on the thread count") {
  const Json s = {{"schema_version", 1},
                  {"kind", "schreier"},
                  {"name", "threads"},
                  {"inputs", {{"module", "Z4(-)->0"}, {"Q", {{"group", {{"name", "Z2"}}}, {"gamma", {{"name", "Z2"}}}}}, {"psi", {0, 0}}}}};
  RunOptions one, many;
  one.threads = 1;
  many.threads = 4;
  const auto a = run_scenario(s, one), b = run_scenario(s, many);
  CHECK(a.exit_code == 0);
  CHECK(a.report.dump() == b.report.dump());
}
