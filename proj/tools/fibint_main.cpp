#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "fibint/cli.hpp"

namespace {

int default_threads() {
  if (const char* env = std::getenv("FIBINT_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fibint: exact characteristic classes of coadjoint orbit actions, "
      "fibre integral subalgebras, and a Monte Carlo Haar oracle"};
  app.require_subcommand(1);

  fibint::JobConfig config;
  config.threads = default_threads();
  std::string config_path;

  auto add_common = [&](CLI::App* sub, bool with_group = true) {
    if (with_group) sub->add_option("--group,-g", config.group, "root system label (A2, D4, A1xA1)");
    sub->add_option("--seed", config.seed, "deterministic seed recorded in the report");
    sub->add_option("--threads", config.threads,
                    "worker cap (default: FIBINT_THREADS or hardware)");
    sub->add_option("--output,-o", config.output, "report path, '-' for stdout");
    sub->add_option("--config", config_path,
                    "JSON file with the same fields; conflicts with explicit "
                    "flags are an error");
  };

  CLI::App* compute = app.add_subcommand("compute", "characteristic classes of one orbit");
  compute->add_option("--xi", config.xi, "dominant orbit point, comma-separated rationals");
  compute->add_option("--k-max", config.k_max, "highest class degree");
  add_common(compute);

  CLI::App* fullness = app.add_subcommand("fullness", "fibre integral subalgebra vs Molien");
  fullness->add_option("--xi", config.xi, "dominant orbit point");
  fullness->add_option("--cutoff", config.cutoff, "polynomial degree cutoff");
  add_common(fullness);

  CLI::App* independence =
      app.add_subcommand("independence", "Jacobian independence of the classes");
  independence->add_option("--xi", config.xi, "dominant orbit point");
  independence->add_option("--k-max", config.k_max, "highest class degree");
  add_common(independence);

  CLI::App* semi = app.add_subcommand("semicontinuity",
                                      "containment of subalgebras of nearby orbits");
  semi->add_option("--xi", config.xi, "orbit point on the smaller face");
  semi->add_option("--eta", config.eta, "nearby orbit point on a more generic face");
  semi->add_option("--cutoff", config.cutoff, "polynomial degree cutoff");
  add_common(semi);

  CLI::App* product = app.add_subcommand(
      "product", "product orbits: direct-sum computation vs convolution");
  product->add_option("--xi", config.xi, "concatenated orbit point");
  product->add_option("--cutoff", config.cutoff, "polynomial degree cutoff");
  add_common(product);

  CLI::App* oracle =
      app.add_subcommand("oracle", "Monte Carlo Haar moments vs symbolic classes");
  oracle->add_option("--xi", config.xi, "diagonal of xi (traceless for SU)");
  oracle->add_option("--X", config.x_eval, "evaluation point X (defaults to xi)");
  oracle->add_option("--k-max", config.k_max, "highest moment order");
  oracle->add_option("--samples", config.samples, "Monte Carlo sample count");
  add_common(oracle);
  oracle->get_option("--group")->description("compact group label (SU2, SO3)");

  CLI::App* molien = app.add_subcommand("molien", "invariant dimensions per degree");
  molien->add_option("--max-degree", config.max_degree, "highest degree");
  add_common(molien);

  CLI11_PARSE(app, argc, argv);
  CLI::App* sub = app.get_subcommands().front();
  config.command = sub->get_name();

  // Optional config file; any field also given as an explicit flag is a
  // conflict, never silently overridden.
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "configuration error: cannot open config file '" << config_path
                << "'\n";
      return 1;
    }
    fibint::Json file_config;
    try {
      in >> file_config;
    } catch (const std::exception& e) {
      std::cerr << "configuration error: invalid JSON in '" << config_path
                << "': " << e.what() << "\n";
      return 1;
    }
    auto conflict = [&](const char* flag, const char* field) {
      if (file_config.contains(field) && sub->count(flag) > 0) {
        std::cerr << "configuration error: field '" << field
                  << "' is set both in --config and as a flag\n";
        return true;
      }
      return false;
    };
    if (conflict("--group", "group") || conflict("--xi", "xi") ||
        conflict("--eta", "eta") || conflict("--X", "X") ||
        conflict("--cutoff", "cutoff") || conflict("--k-max", "k_max") ||
        conflict("--max-degree", "max_degree") || conflict("--samples", "samples") ||
        conflict("--seed", "seed") || conflict("--threads", "threads") ||
        conflict("--output", "output"))
      return 1;
    try {
      if (file_config.contains("group")) config.group = file_config["group"];
      if (file_config.contains("xi")) config.xi = file_config["xi"];
      if (file_config.contains("eta")) config.eta = file_config["eta"];
      if (file_config.contains("X")) config.x_eval = file_config["X"];
      if (file_config.contains("cutoff")) config.cutoff = file_config["cutoff"];
      if (file_config.contains("k_max")) config.k_max = file_config["k_max"];
      if (file_config.contains("max_degree")) config.max_degree = file_config["max_degree"];
      if (file_config.contains("samples")) config.samples = file_config["samples"];
      if (file_config.contains("seed")) config.seed = file_config["seed"];
      if (file_config.contains("threads")) config.threads = file_config["threads"];
      if (file_config.contains("output")) config.output = file_config["output"];
    } catch (const std::exception& e) {
      std::cerr << "configuration error: bad field type in '" << config_path
                << "': " << e.what() << "\n";
      return 1;
    }
  }

  fibint::JobResult result = fibint::run_job(config);
  std::string text = result.report.dump(2);
  text.push_back('\n');
  if (config.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(config.output);
    if (!out) {
      std::cerr << "configuration error: cannot write output file '"
                << config.output << "'\n";
      return 1;
    }
    out << text;
  }
  std::cerr << result.summary << "\n";
  return result.exit_code;
}
