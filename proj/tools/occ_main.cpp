// occ: validate knowledge bases, replay scenarios, appraise single stimuli.
//
// Exit codes: 0 success, 1 validation error, 2 runtime error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "occ/appraisal.hpp"
#include "occ/errors.hpp"
#include "occ/harness.hpp"
#include "occ/knowledge.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

struct RunOptions {
  std::string kb;
  std::string scenario;
  std::string profile = "full22";
  std::string mode = "blend";
  std::string params;
  std::string format = "csv";
  std::string out;
};

int cmd_validate(const std::string& kb_path) {
  const occ::KnowledgeBase kb = occ::load_kb_file(kb_path);
  const auto& t = kb.tables();
  std::cout << "ok: " << t.concepts.size() << " concepts, " << t.goals.size() << " goals, "
            << t.attitudes.size() << " attitudes, " << t.standards.size() << " standards, "
            << t.relations.size() << " relations, "
            << (kb.has_user_models() ? std::to_string(t.user_models->size()) : std::string("no"))
            << " user models\n";
  return 0;
}

int cmd_run(const RunOptions& o) {
  const occ::KnowledgeBase kb = occ::load_kb_file(o.kb);
  const occ::Scenario scenario = occ::load_scenario_file(o.scenario);
  const occ::EngineParams params = o.params.empty() ? occ::EngineParams{} : occ::load_params_file(o.params);
  const auto profile = occ::profile_from_string(o.profile);
  const auto mode = occ::mode_from_string(o.mode);
  const auto format = occ::trace_format_from_string(o.format);
  if (!profile || !mode || !format) throw occ::ValidationError("invalid --profile, --mode or --format");

  const occ::Trace trace =
      occ::run_scenario(kb, scenario, occ::ExpressionProfile::get(*profile), *mode, params);
  const std::string text = occ::emit_trace(trace, *format);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw occ::Error("cannot write '" + o.out + "'");
    f << text;
  }
  return 0;
}

int cmd_appraise(const std::string& kb_path, const std::string& stimulus_path,
                 const std::string& params_path) {
  const occ::KnowledgeBase kb = occ::load_kb_file(kb_path);
  const occ::Stimulus stimulus = occ::load_stimulus_file(stimulus_path);
  const occ::EngineParams params =
      params_path.empty() ? occ::EngineParams{} : occ::load_params_file(params_path);
  const occ::History history;
  for (const auto& s : occ::appraise(stimulus, kb, history, 0, params)) {
    std::cout << occ::to_string(s.category) << ' ' << occ::format_fixed6(s.intensity.value())
              << ' ' << s.source << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"OCC appraisal engine"};
  app.require_subcommand(1);

  std::string kb_path;
  auto* validate = app.add_subcommand("validate", "Load and check a knowledge base");
  validate->add_option("--kb", kb_path, "Knowledge base file")->required();

  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "Replay a scenario and emit its trace");
  run->add_option("--kb", run_opts.kb, "Knowledge base file")->required();
  run->add_option("--scenario", run_opts.scenario, "Scenario file")->required();
  run->add_option("--profile", run_opts.profile, "full22 | ortony | ekman6")
      ->check(CLI::IsMember({"full22", "ortony", "ortony-reduced", "ekman6"}));
  run->add_option("--mode", run_opts.mode, "dominant | blend")
      ->check(CLI::IsMember({"dominant", "blend"}));
  run->add_option("--params", run_opts.params, "Engine parameter overrides");
  run->add_option("--format", run_opts.format, "jsonl | csv")->check(CLI::IsMember({"jsonl", "csv"}));
  run->add_option("--out", run_opts.out, "Output file (default stdout)");

  std::string stimulus_path;
  std::string appraise_params;
  auto* appraise = app.add_subcommand("appraise", "Categorize and quantify one stimulus");
  appraise->add_option("--kb", kb_path, "Knowledge base file")->required();
  appraise->add_option("--stimulus", stimulus_path, "Stimulus file")->required();
  appraise->add_option("--params", appraise_params, "Engine parameter overrides");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*validate) return cmd_validate(kb_path);
    if (*run) return cmd_run(run_opts);
    if (*appraise) return cmd_appraise(kb_path, stimulus_path, appraise_params);
  } catch (const occ::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
