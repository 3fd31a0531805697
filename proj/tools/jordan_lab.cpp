// jordan-lab: seeded verification campaigns.
//
//   jordan-lab verify-core --algebra "H(3,O)" --trials 1000 --seed 7
//   jordan-lab reducible-demo --algebra "sum(H(2,R),H(2,R))"
//
// Exit status: 0 all checks pass, 1 a check failed, 2 configuration error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "jordan/campaigns.hpp"
#include "jordan/errors.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kConfig = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euclidean Jordan algebra and bioctonionic plane verification campaigns"};
  app.set_version_flag("--version", jordan::kVersion);
  app.require_subcommand(1);

  jordan::RunConfig config;
  for (const auto& name : jordan::campaign_commands()) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " campaign");
    sub->add_option("--algebra", config.algebra, "descriptor: spin(n), H(n,R|C|H|O), sum(a,b,...)");
    sub->add_option("--trials", config.trials, "trial count (default " + std::to_string(jordan::default_trials(name)) + ")");
    sub->add_option("--seed", config.seed, "master seed");
    sub->add_option("--tol", config.tolerance, "tolerance override");
    sub->add_option("--out", config.out, "output file (default stdout)");
    sub->add_option("--format", config.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", config.threads, "worker threads (0: all cores)");
    sub->callback([&config, name] { config.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kConfig;
  }

  jordan::CampaignResult result;
  try {
    result = jordan::run_campaign(config);
  } catch (const jordan::ParseError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const jordan::UnsupportedStructure& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const jordan::PreconditionError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kConfig;
  }

  const std::string text = jordan::render(result, config.format);
  if (config.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(config.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << config.out << "\n";
      return kConfig;
    }
    f << text;
  }
  std::cerr << result.verdict << (result.passed ? "  [pass]" : "  [FAIL]") << "\n";
  return result.passed ? kPass : kFail;
}
