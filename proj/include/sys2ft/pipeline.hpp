// SPDX-License-Identifier: Apache-2.0
//
// Operator commands: validate, generate, assemble, eval, report. Every command
// works under one output directory and refreshes its manifest.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sys2ft/analysis.hpp"
#include "sys2ft/assembly.hpp"
#include "sys2ft/evaluator.hpp"
#include "sys2ft/protocols.hpp"

namespace sys2ft {

struct GenerationDefaults {
  int turns_per_conversation = 10;
  int target_pool_size = 1024;
  int originals_per_conversation = 1;
  SamplingParams params;
};

struct PipelineConfig {
  std::filesystem::path dataset_path;
  Strictness strictness = Strictness::kStrict;
  std::filesystem::path output_dir = "out";
  std::uint64_t global_seed = 0;
  Protocol protocol = Protocol::kSelfQa;
  std::vector<SplitId> splits{kAllSplits.begin(), kAllSplits.end()};
  std::optional<std::filesystem::path> prompt_bank_path;
  BackendConfig backend;
  /// Mock only: answer multiple-choice prompts correctly via {oracle}.
  bool mock_oracle = false;
  GenerationDefaults generation;
  AssemblyConfig assembly;
  EvalConfig eval;

  void validate() const;
};

/// Relative paths inside the file resolve against `base_dir`. Throws ConfigError.
PipelineConfig parse_config(std::string_view toml_text, const std::filesystem::path& base_dir);
PipelineConfig load_config(const std::filesystem::path& path);

/// Everything that determines artifact bytes (output_dir and secrets excluded).
Json config_to_json(const PipelineConfig& config);
std::string config_hash(const PipelineConfig& config);

/// Seeds each stage derives from global_seed.
std::uint64_t generation_seed(const PipelineConfig& config, std::string_view news_id);
std::uint64_t assembly_seed(const PipelineConfig& config);
std::uint64_t eval_seed(const PipelineConfig& config);

namespace layout {
std::filesystem::path run_log(const std::filesystem::path& out);
std::filesystem::path pools(const std::filesystem::path& out);
std::filesystem::path training_file(const std::filesystem::path& out, std::string_view model, SplitId split,
                                    Protocol protocol, bool context_prefixed);
std::filesystem::path eval_dir(const std::filesystem::path& out, std::string_view run_id, std::int64_t step,
                               EvalMode mode);
std::filesystem::path records(const std::filesystem::path& out);
std::filesystem::path reports(const std::filesystem::path& out);
std::filesystem::path manifest(const std::filesystem::path& out);
}  // namespace layout

/// Writes <output_dir>/manifest.json: config hash, seeds and the sha256 of every artifact
/// (the run log and the manifest itself excluded). Returns the manifest.
Json write_manifest(const PipelineConfig& config);

/// Exit status as an int; the report goes to `out` as JSON or a plain table.
int cmd_validate(const std::filesystem::path& dataset_path, Strictness strictness, bool json, std::ostream& out);

struct PoolSummary {
  std::string news_id;
  SplitId split = SplitId::kMath;
  std::size_t elements = 0;
  std::size_t truncated = 0;
  std::size_t conversations = 0;
  std::size_t skipped = 0;
  bool reused = false;  // pool was already complete on disk
};

struct GenerateSummary {
  std::vector<PoolSummary> pools;
  GatewayStats gateway;
  GenerationAccounting accounting;
};

/// Generates one pool per news item of the configured splits. Complete pools on disk are kept;
/// responses already in the run log are reused, so an interrupted run resumes where it stopped.
GenerateSummary cmd_generate(const PipelineConfig& config, std::shared_ptr<ChatBackend> backend = nullptr);

struct AssembleSummary {
  struct File {
    SplitId split;
    std::filesystem::path path;
    ExportSummary exported;
  };
  std::vector<File> files;
};

AssembleSummary cmd_assemble(const PipelineConfig& config);

struct EvalRequest {
  std::string run_id;
  std::int64_t checkpoint_step = 0;
  std::int64_t param_count = 0;
  std::int64_t trained_tokens = 0;
  bool context_prefixed = false;
  std::optional<Protocol> protocol;  // defaults to the config's protocol
};

struct EvalSummary {
  EvalRun run;
  std::filesystem::path trials_path;
  std::filesystem::path report_path;
  std::vector<RunRecord> records;
  GatewayStats gateway;
};

/// Evaluates every question of the configured splits and upserts one RunRecord per split.
EvalSummary cmd_eval(const PipelineConfig& config, const EvalRequest& request,
                     std::shared_ptr<ChatBackend> backend = nullptr);

enum class ReportKind { kGap, kScaling, kShadowing, kPgr };

std::string_view to_string(ReportKind kind);
std::optional<ReportKind> parse_report_kind(std::string_view name);

/// Writes <kind>.json and <kind>.csv (plus <kind>.svg for curves) into out_dir; returns the paths.
std::vector<std::filesystem::path> cmd_report(const std::filesystem::path& records_path, ReportKind kind,
                                              const std::filesystem::path& out_dir);

void print_generate_summary(const GenerateSummary& summary, std::ostream& out);
void print_assemble_summary(const AssembleSummary& summary, std::ostream& out);
void print_eval_summary(const EvalSummary& summary, std::ostream& out);

/// Entry point behind the sys2ft executable; returns the exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sys2ft
