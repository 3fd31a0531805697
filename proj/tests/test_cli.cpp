#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jordan/campaigns.hpp"
#include "jordan/errors.hpp"

using namespace jordan;

namespace {

RunConfig make(const std::string& command, const std::string& algebra, int trials, std::uint64_t seed = 7) {
  RunConfig c;
  c.command = command;
  c.algebra = algebra;
  c.trials = trials;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("every command is deterministic for a fixed seed") {
  const std::vector<RunConfig> configs = {
      make("verify-core", "H(3,O)", 20),     make("lemma1", "H(3,H)", 20),
      make("homogeneity", "H(3,O)", 3),      make("bit-symmetry", "spin(5)", 10),
      make("reducible-demo", "sum(H(2,R),H(2,R))", 200), make("bioct", "", 5),
      make("rank", "H(4,C)", 3)};
  for (RunConfig c : configs) {
    CAPTURE(c.command);
    for (const char* format : {"json", "csv"}) {
      const std::string a = render(run_campaign(c), format);
      const std::string b = render(run_campaign(c), format);
      CHECK(a == b);
    }
    c.threads = 3;
    const std::string threaded = render(run_campaign(c), "json");
    c.threads = 1;
    CHECK(threaded == render(run_campaign(c), "json"));
  }
}

TEST_CASE("different seeds give different reports") {
  CHECK(render(run_campaign(make("lemma1", "H(3,C)", 5, 1)), "json") !=
        render(run_campaign(make("lemma1", "H(3,C)", 5, 2)), "json"));
}

TEST_CASE("report carries config and version") {
  const CampaignResult r = run_campaign(make("verify-core", "H(3,O)", 100));
  CHECK(r.passed);
  CHECK(r.report["version"] == kVersion);
  CHECK(r.report["config"]["algebra"] == "H(3,O)");
  CHECK(r.report["config"]["trials"] == 100);
  CHECK(r.report["records"].size() == 100);
}

TEST_CASE("empty runs pass") {
  const CampaignResult core = run_campaign(make("verify-core", "spin(5)", 0));
  CHECK(core.passed);
  CHECK(core.report["records"].empty());
  const CampaignResult b = run_campaign(make("bioct", "", 0));
  CHECK(b.passed);
  CHECK(b.report["checks"].empty());
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(run_campaign(make("verify-core", "H(4,O)", 1)), UnsupportedStructure);
  CHECK_THROWS_AS(run_campaign(make("verify-core", "H(3,", 1)), ParseError);
  CHECK_THROWS_AS(run_campaign(make("verify-core", "", 1)), ParseError);
  CHECK_THROWS_AS(run_campaign(make("nonsense", "H(3,R)", 1)), ParseError);
  CHECK_THROWS_AS(run_campaign(make("lemma1", "sum(spin(3),spin(3))", 1)), PreconditionError);
  CHECK_THROWS_AS(run_campaign(make("reducible-demo", "H(3,R)", 1)), PreconditionError);
  CHECK_THROWS_AS(run_campaign(make("reducible-demo", "sum(H(1,R),H(2,R))", 1)), PreconditionError);
  CHECK_THROWS_AS(run_campaign(make("rank", "H(3,R)", -1)), ParseError);
}

TEST_CASE("campaign verdicts") {
  CHECK(run_campaign(make("lemma1", "H(3,C)", 100)).passed);
  CHECK(run_campaign(make("homogeneity", "H(3,C)", 30)).passed);
  const CampaignResult octo = run_campaign(make("homogeneity", "H(3,O)", 5));
  CHECK(octo.report["best_effort"] == true);
  const CampaignResult demo = run_campaign(make("reducible-demo", "sum(H(2,R),H(2,R))", 500));
  CHECK(demo.passed);
  CHECK(demo.report["witnesses_found"] == 0);
  CHECK(demo.report["search_witnesses"] == 0);
}

TEST_CASE("csv layout") {
  const std::string csv = render(run_campaign(make("rank", "spin(4)", 2)), "csv");
  CHECK(csv == "trial,orthogonal_rank,expected\n0,2,2\n1,2,2\n");
  CHECK_THROWS_AS(render(run_campaign(make("rank", "spin(4)", 1)), "xml"), ParseError);
}
