// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "commands.hpp"
#include "heiscf/domain.hpp"
#include "heiscf/lab/random.hpp"

namespace {

using namespace heiscf::cli;

struct Sub {
  const char* name;
  const char* help;
  CommandOutput (*run)(const RunConfig&);
};

constexpr Sub kSubs[] = {
    {"constants", "Print rad(K), R_K and rad * R_K", cmd_constants},
    {"expand", "Continued-fraction expansion of a point", cmd_expand},
    {"verify", "Continuant identities on random points", cmd_verify},
    {"measure", "Approximation constants over random points", cmd_measure},
    {"bestapprox", "Convergents against exhaustive rational search", cmd_bestapprox},
    {"count", "Structured against naive rational enumeration", cmd_count},
    {"khinchin", "Metric sums and the shrinking-target experiment", cmd_khinchin},
};

void add_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--point", cfg.point, "Rational planar point \"(u; v)\", e.g. \"(1+i; 1+4/5i)\"");
  app->add_option("--heis", cfg.heis, "Heisenberg point \"z, t\" in decimals, evaluated at --bits");
  app->add_option("--depth", cfg.depth, "Expansion depth");
  app->add_option("--bits", cfg.bits, "Working precision in bits")->check(CLI::Range(64u, 1u << 16));
  app->add_option("--seed", cfg.seed, "Master seed");
  app->add_option("--samples", cfg.samples, "Number of random samples");
  app->add_option("--m-max", cfg.m_max, "Largest |q|^2 (count) or summation limit (khinchin)");
  app->add_option("--epsilon", cfg.epsilon, "Exponent epsilon in phi(m) = C m^(-(1+epsilon)/2)");
  app->add_option("--bigc", cfg.bigc, "Constant C in phi(m)");
  app->add_option("--bound", cfg.bound, "Bound on |Q| for best approximations");
  app->add_option("--domain", cfg.domain, "Fundamental domain")->check(CLI::IsMember({"dirichlet"}));
  app->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app->add_option("--out", cfg.out, "Write output to this file instead of stdout");
  app->add_option("--threads", cfg.threads, "Worker threads (default: HEISCF_THREADS or all cores)")
      ->check(CLI::Range(1u, 1024u));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continued fractions on the Heisenberg group"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.threads = heiscf::default_threads();
  std::map<CLI::App*, const Sub*> subs;
  for (const auto& s : kSubs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    add_options(sub, cfg);
    subs[sub] = &s;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const Sub* chosen = subs.at(app.get_subcommands().front());
  cfg.command = chosen->name;
  try {
    const CommandOutput out = chosen->run(cfg);
    const std::string text = render(cfg, out);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f || !(f << text)) {
        std::cerr << "error: cannot write " << cfg.out << '\n';
        return kUsage;
      }
    }
    return out.exit_code;
  } catch (const heiscf::CertificationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCertification;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kViolation;
  }
}
