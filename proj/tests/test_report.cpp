#include <doctest.h>

#include "pdslab/report.hpp"

using namespace pdslab;

namespace {

Json strip_timing(Json j) {
  j.erase("timing_ms");
  return j;
}

}  // namespace

TEST_CASE("verify-pds reports") {
  RunResult r = cmd_verify_pds({1, "0", "0", "0", 1});
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report["schema"] == kReportSchema);
  CHECK(r.report["result"]["params"]["k"] == 6);

  r = cmd_verify_pds({2, "01", "0w", "1", 1});
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report["result"]["params"]["lambda"] == 12);
  CHECK(r.report["result"]["params"]["mu"] == 20);

  r = cmd_verify_pds({1, "0", "w", "0", 1});
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report["verdicts"]["degenerate"] == true);

  CHECK_THROWS_AS(cmd_verify_pds({2, "0", "0w", "1", 1}), InputError);
  CHECK_THROWS_AS(cmd_verify_pds({2, "01", "0w", "x", 1}), InputError);
}

TEST_CASE("scheme reports") {
  RunResult r = cmd_scheme({2, "00", "00", 4, true});
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report["verdicts"]["fusions_passed"] == "15/15");
  CHECK(r.report["result"]["certificate"]["fusions"][1]["partition"] == Json::parse("[[1,2,3],[4]]"));
  r = cmd_scheme({2, "11", "0w", 3, true});
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report["verdicts"]["fusions_passed"] == "5/5");
  CHECK_THROWS_AS(cmd_scheme({1, "0", "w", 4, false}), InputError);
}

TEST_CASE("regular reports") {
  FamilySpec s;
  s.family = Family::A;
  s.e = "11";
  s.a = "00";
  s.v = "11";
  s.b = "10";
  RegularOptions o;
  o.family = s;
  RunResult r = cmd_regular(o);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report["result"]["invariants"]["class"] == 2);
  CHECK(r.report["result"]["invariants"]["eq2_match"] == true);
  CHECK(r.report["result"]["pullback"].size() == 4);

  RegularOptions bad;
  bad.custom = R"({"e":"00","a":"00","tau":{"kind":"tau","v":"11"},
                   "K_gens":["1000","w000","0100","0w00","0010","00w0","0001"],"h":"000w"})";
  r = cmd_regular(bad);
  CHECK(r.exit_code == kExitFailure);
  CHECK(r.report["verdicts"]["failed_check"] == "condition (b)");

  RegularOptions search;
  search.search = R"({"kind":"rho","a":"w0"})";
  search.e = "01";
  search.a = "w0";
  r = cmd_regular(search);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report["verdicts"]["found"] == true);

  RegularOptions none;
  CHECK_THROWS_AS(cmd_regular(none), InputError);
  RegularOptions junk;
  junk.custom = "{";
  CHECK_THROWS_AS(cmd_regular(junk), InputError);
}

TEST_CASE("reports are deterministic") {
  const Json a = strip_timing(cmd_scheme({2, "01", "1w", 4, true}).report);
  const Json b = strip_timing(cmd_scheme({2, "01", "1w", 4, true}).report);
  CHECK(a.dump() == b.dump());
}

TEST_CASE("json helpers") {
  const FamilySpec s = family_spec_from_json(Json::parse(R"({"family":"A","n":2,"e":"11","a":"00","v":"11","b":"10"})"));
  CHECK(s.family == Family::A);
  CHECK(s.v == "11");
  CHECK_THROWS_AS(family_spec_from_json(Json::parse(R"({"family":"A","n":3,"e":"11"})")), InputError);
  const GroupContext ctx = GroupContext::parse("00");
  CHECK(map_from_json(ctx, Json::parse(R"({"kind":"rho","a":"w0"})")).descriptor().kind == "rho");
  CHECK_THROWS_AS(map_from_json(ctx, Json::parse(R"({"kind":"sigma"})")), InputError);
  CHECK(parse_pullback("all") == Pullback::all);
  CHECK_THROWS_AS(parse_pullback("some"), InputError);
}
