#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parchern/errors.hpp"
#include "parchern/scenarios.hpp"

using namespace parchern;

namespace {

constexpr int kInputError = 2;

void printJson(const json& j) { std::cout << j.dump(2) << "\n"; }

int runList() {
  for (const auto& s : listScenarios()) {
    std::cout << s.name << "  " << s.summary << "\n";
    for (const auto& p : s.params)
      std::cout << "    --param " << p.name << "=<" << p.help << ">  (default " << p.defaultValue << ")\n";
    if (!s.input.empty()) std::cout << "    --input <" << s.input << ">\n";
  }
  return 0;
}

int runVerify(const std::string& scenario, const std::vector<std::string>& params, const std::string& format,
              const std::string& input) {
  ScenarioOptions options;
  for (const auto& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidInput("--param expects k=v, got \"" + kv + "\"");
    options.params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  if (!input.empty()) options.input = input;
  const Report report = runScenario(scenario, options);
  if (format == "json")
    printJson(report.toJson());
  else
    std::cout << report.toText();
  return report.passed() ? 0 : 1;
}

void registerModels(ModelRegistry& registry, const std::vector<std::string>& files) {
  for (const auto& file : files) registry.add(modelFromJson(loadJsonFile(file), std::filesystem::path(file).stem().string()));
}

int runChern(const std::string& bundleFile, const std::vector<std::string>& modelFiles, const std::string& format) {
  ModelRegistry registry;
  registerModels(registry, modelFiles);
  const ParabolicKClass f = bundleFromJson(loadJsonFile(bundleFile), registry);
  const ChowElement ch = chPar(f);
  json weights = json::object();
  for (const auto& id : f.divisor()->ids()) {
    json w = json::object();
    for (const auto& [value, mult] : weightsAlong(f, id)) w[toString(value)] = mult;
    weights[id] = w;
  }
  if (format == "json") {
    printJson({{"model", f.model()->name()}, {"rank", f.rank()}, {"chPar", elementToJson(ch)}, {"weights", weights}});
  } else {
    std::cout << "model: " << f.model()->name() << "\n"
              << "rank: " << f.rank() << "\n"
              << "chPar = " << ch.str() << "\n";
    for (auto it = weights.begin(); it != weights.end(); ++it) std::cout << "weights along " << it.key() << ": " << it.value().dump() << "\n";
  }
  return 0;
}

int runChi(const std::string& familyFile, const std::string& classFile, const std::vector<std::string>& modelFiles,
           const std::string& format) {
  ModelRegistry registry;
  registerModels(registry, modelFiles);
  const FamilyModel family = familyFromJson(loadJsonFile(familyFile), registry);
  json cls = loadJsonFile(classFile);
  if (cls.is_object() && cls.contains("class")) cls = cls["class"];
  const ChowElement x = elementFromJson(cls, family.total(), "/class");
  const ChowElement value = chi(family, x);
  if (format == "json") {
    printJson({{"family", family.name()}, {"class", elementToJson(x)}, {"chi", elementToJson(value)},
               {"inCH0", value.inDegreeZero()}});
  } else {
    std::cout << "family: " << family.name() << "\n"
              << "class = " << x.str() << "\n"
              << "chi = " << value.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact parabolic Chern character calculus"};
  app.require_subcommand(1);

  std::string format = "text";
  auto addFormat = [&format](CLI::App* cmd) {
    cmd->add_option("--report", format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  app.add_subcommand("list", "list scenarios");

  auto* verify = app.add_subcommand("verify", "run a named scenario");
  std::string scenario, input;
  std::vector<std::string> params;
  verify->add_option("scenario", scenario, "scenario name")->required();
  verify->add_option("--param", params, "scenario parameter k=v")->allow_extra_args(false);
  verify->add_option("--input", input, "input file");
  addFormat(verify);

  auto* chern = app.add_subcommand("chern", "parabolic Chern character of a bundle");
  std::string bundleFile;
  std::vector<std::string> chernModels;
  chern->add_option("bundle", bundleFile, "bundle JSON")->required();
  chern->add_option("--model", chernModels, "model JSON")->required()->allow_extra_args(false);
  addFormat(chern);

  auto* chiCmd = app.add_subcommand("chi", "relative Euler characteristic of a class");
  std::string familyFile, classFile;
  std::vector<std::string> chiModels;
  chiCmd->add_option("family", familyFile, "family JSON")->required();
  chiCmd->add_option("--class", classFile, "element JSON")->required();
  chiCmd->add_option("--model", chiModels, "model JSON referenced by name")->allow_extra_args(false);
  addFormat(chiCmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (app.got_subcommand("list")) return runList();
    if (verify->parsed()) return runVerify(scenario, params, format, input);
    if (chern->parsed()) return runChern(bundleFile, chernModels, format);
    if (chiCmd->parsed()) return runChi(familyFile, classFile, chiModels, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
