#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>

#include "shield/sim/run.hpp"

namespace fs = std::filesystem;
using namespace shield;

namespace {

int auditFailures(baselines::MethodId method, const sim::AuditReport& audit) {
  if (method == baselines::MethodId::dynamicSSM) return audit.contactInstants;
  if (baselines::isProvablySafe(method)) return audit.energyViolations;
  return 0; // governors without guarantees: report but never fail
}

int runCommand(const std::string& scenarioPath, const std::string& methodName, double dt,
               int horizon, const std::string& outPath, bool audit, unsigned seed,
               bool seedSet, bool dtSet, bool horizonSet) {
  sim::Scenario scenario = sim::Scenario::loadFromYamlFile(scenarioPath);
  if (dtSet) scenario.dt = dt;
  if (horizonSet) scenario.horizon = horizon;
  if (seedSet) scenario.seed = seed;
  const sim::LoadedScenario loaded = sim::loadScenario(scenario);

  const baselines::MethodId method = baselines::methodIdFromString(methodName);
  const sim::RunResult reference = sim::runScenario(loaded, baselines::MethodId::noShield);
  sim::RunResult result = method == baselines::MethodId::noShield
                              ? reference
                              : sim::runScenario(loaded, method);
  result.efficiency = reference.pathProgress > 0.0
                          ? std::clamp(100.0 * result.pathProgress / reference.pathProgress,
                                       0.0, 100.0)
                          : 100.0;
  if (!outPath.empty()) sim::writeStepLogCsv(outPath, result);

  std::cout << "scenario=" << scenario.name << " method=" << methodName
            << " efficiency=" << result.efficiency << "% progress=" << result.pathProgress
            << " mean_verify_us=" << result.meanVerifySeconds * 1e6 << "\n";

  if (audit) {
    const sim::AuditReport report = sim::auditRun(loaded, result);
    std::cout << "audit: energy_violations=" << report.energyViolations
              << " contact_instants=" << report.contactInstants << "\n";
    if (auditFailures(method, report) > 0) {
      std::cerr << "audit failed for provably-safe method " << methodName << "\n";
      return 2;
    }
  }
  return 0;
}

int compareCommand(const std::string& scenarioDir, const std::string& methodsArg,
                   const std::string& outPath) {
  std::vector<baselines::MethodId> methods;
  if (methodsArg == "all") {
    methods = baselines::allMethods();
  } else {
    std::stringstream ss(methodsArg);
    std::string tok;
    while (std::getline(ss, tok, ',')) methods.push_back(baselines::methodIdFromString(tok));
  }

  std::vector<fs::path> scenarioFiles;
  for (const auto& e : fs::directory_iterator(scenarioDir)) {
    if (e.path().extension() == ".yaml" || e.path().extension() == ".yml")
      scenarioFiles.push_back(e.path());
  }
  std::sort(scenarioFiles.begin(), scenarioFiles.end());
  if (scenarioFiles.empty()) {
    std::cerr << "no scenario files in " << scenarioDir << "\n";
    return 1;
  }

  std::vector<sim::ReportRow> rows;
  int exitCode = 0;
  for (const auto& file : scenarioFiles) {
    const sim::Scenario scenario = sim::Scenario::loadFromYamlFile(file.string());
    const sim::LoadedScenario loaded = sim::loadScenario(scenario);
    const sim::RunResult reference = sim::runScenario(loaded, baselines::MethodId::noShield);
    for (const auto method : methods) {
      sim::RunResult result = method == baselines::MethodId::noShield
                                  ? reference
                                  : sim::runScenario(loaded, method);
      result.efficiency =
          reference.pathProgress > 0.0
              ? std::clamp(100.0 * result.pathProgress / reference.pathProgress, 0.0, 100.0)
              : 100.0;
      const sim::AuditReport audit = sim::auditRun(loaded, result);
      sim::ReportRow row;
      row.scenario = scenario.name;
      row.method = baselines::toString(method);
      row.efficiency = result.efficiency;
      row.pathProgress = result.pathProgress;
      row.violations = audit.energyViolations;
      row.contactInstants = audit.contactInstants;
      row.meanVerifyMicros = result.meanVerifySeconds * 1e6;
      rows.push_back(row);
      std::cout << row.scenario << " " << row.method << " efficiency=" << row.efficiency
                << "% violations=" << row.violations << "\n";
      if (auditFailures(method, audit) > 0) {
        std::cerr << "audit failed: " << row.scenario << "/" << row.method << "\n";
        exitCode = 2;
      }
    }
  }
  sim::writeReportCsv(outPath, rows);
  std::cout << "wrote " << outPath << "\n";
  return exitCode;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"safety-shield scenario replay"};
  app.require_subcommand(1);

  std::string scenarioPath, methodName = "sara", outPath, scenarioDir, methodsArg = "all";
  std::string compareOut = "compare_results.csv";
  double dt = 0.006;
  int horizon = 180;
  unsigned seed = 0;
  bool audit = false;

  auto* run = app.add_subcommand("run", "replay one scenario with one method");
  run->add_option("--scenario", scenarioPath, "scenario YAML file")->required();
  run->add_option("--method", methodName, "method id");
  auto* dtOpt = run->add_option("--dt", dt, "control period, s");
  auto* horizonOpt = run->add_option("--horizon", horizon, "number of steps");
  run->add_option("--out", outPath, "per-step log CSV");
  run->add_flag("--audit", audit, "ground-truth audit after the run");
  auto* seedOpt = run->add_option("--seed", seed, "scenario seed override");

  auto* compare = app.add_subcommand("compare", "run every scenario x method matrix");
  compare->add_option("--scenario-dir", scenarioDir, "directory of scenario YAML files")
      ->required();
  compare->add_option("--methods", methodsArg, "comma list or 'all'");
  compare->add_option("--out", compareOut, "summary CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return runCommand(scenarioPath, methodName, dt, horizon, outPath, audit, seed,
                        seedOpt->count() > 0, dtOpt->count() > 0, horizonOpt->count() > 0);
    }
    return compareCommand(scenarioDir, methodsArg, compareOut);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
