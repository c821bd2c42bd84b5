#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "resint/report.hpp"
#include "resint/verify.hpp"
#include "resint/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"residual intersection verifier"};
  app.set_version_flag("--version", std::string("resint ") + resint::kVersion);
  app.require_subcommand(1);

  resint::VerifyOptions opt;
  std::string format = "text";
  std::string timeout = "600s";
  std::string manifestOut;
  opt.suites.clear();

  CLI::App* verify = app.add_subcommand("verify", "run verification suites and print a report");
  verify->add_option("--n", opt.n, "matrix width (columns of the generic 2 x n matrix)")
      ->capture_default_str();
  verify->add_option("--prime", opt.prime, "coefficient field characteristic")
      ->capture_default_str();
  verify->add_option("--reduction", opt.reduction, "chain element style: sparse or generic")
      ->check(CLI::IsMember({"sparse", "generic"}))
      ->capture_default_str();
  verify->add_option("--seed", opt.seed, "seed for generic chain elements")
      ->capture_default_str();
  verify->add_option("--jmax", opt.jmax, "largest minor power exercised per link")
      ->capture_default_str();
  verify->add_option("--suite", opt.suites,
                     "suites to run: all, foundations, depth, structure, betti, asymptotics "
                     "(repeatable)");
  verify->add_option("--format", format, "report format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  verify->add_option("--cell-timeout", timeout, "per cell budget, e.g. 600s, 10m, 2h")
      ->capture_default_str();
  verify->add_flag("--heavy", opt.heavy, "enable expensive cells and sizes n >= 5");
  verify->add_option("--workers", opt.workers, "worker threads, 0 picks from hardware")
      ->capture_default_str();
  verify->add_option("--cache-dir", opt.cacheDir,
                     "basis cache directory, empty disables (default honors RESINT_CACHE_DIR)");
  verify->add_option("--manifest-out", manifestOut,
                     "also write the run manifest as JSON to this path");

  CLI11_PARSE(app, argc, argv);

  if (opt.suites.empty()) opt.suites = {"all"};
  try {
    opt.cellTimeoutSeconds = resint::parseTimeout(timeout);
    resint::VerificationReport report = resint::runVerification(opt);

    if (!manifestOut.empty()) {
      nlohmann::json full = nlohmann::json::parse(resint::emitJson(report));
      std::ofstream out(manifestOut);
      if (!out) throw std::runtime_error("cannot write " + manifestOut);
      out << full.at("manifest").dump(2) << "\n";
    }

    if (format == "json")
      std::cout << resint::emitJson(report);
    else if (format == "csv")
      std::cout << resint::emitCsv(report);
    else
      std::cout << resint::emitText(report);
    return resint::exitCode(report);
  } catch (const std::exception& e) {
    std::cerr << "resint: " << e.what() << "\n";
    return 2;
  }
}
