// SPDX-License-Identifier: Apache-2.0
//
// Post-hoc analytics over evaluation run records. Everything here is a pure
// function of its inputs.
#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sys2ft/evaluator.hpp"
#include "sys2ft/prompt_bank.hpp"

namespace sys2ft {

/// Gradient steps at which checkpoints are evaluated by default; 3840 is four epochs of 15,360 rows at 16 rows/step.
inline constexpr std::array<std::int64_t, 11> kEvalCheckpointSteps = {0,   48,   96,   144,  240, 384,
                                                                      624, 1008, 1632, 2640, 3840};

/// Forward + backward FLOPs per parameter per trained token.
inline constexpr double kDefaultFlopsPerParamToken = 6.0;

struct RunRecord {
  std::string run_id;
  std::string model_name;
  std::int64_t param_count = 0;
  Protocol protocol = Protocol::kNaive;
  SplitId split = SplitId::kMath;
  bool context_prefixed = false;
  std::int64_t checkpoint_step = 0;
  std::int64_t trained_tokens = 0;
  double accuracy = 0.0;
  EvalMode eval_mode = EvalMode::kClosedBook;

  bool operator==(const RunRecord&) const = default;
};

Json record_to_json(const RunRecord& record);
RunRecord record_from_json(const Json& j);

/// Reads and validates a records file: fields in range and (run_id, checkpoint_step, eval_mode) unique.
std::vector<RunRecord> read_records(const std::filesystem::path& path);
void validate_records(std::span<const RunRecord> records);

/// Appends a record, replacing any existing record with the same (run_id, checkpoint_step, eval_mode).
void upsert_record(const std::filesystem::path& path, const RunRecord& record);

class EmptyRun : public DataError {
 public:
  using DataError::DataError;
};

class DegenerateGap : public DataError {
 public:
  using DataError::DataError;
};

class UnpairedRun : public DataError {
 public:
  UnpairedRun(std::string run_id, const std::string& what) : DataError(what), run_id_(std::move(run_id)) {}
  const std::string& run_id() const noexcept { return run_id_; }

 private:
  std::string run_id_;
};

double estimate_train_flops(double param_count, double trained_tokens,
                            double flops_per_param_token = kDefaultFlopsPerParamToken);

/// Highest-accuracy record of the given mode; ties go to the smallest checkpoint_step.
RunRecord best_checkpoint(std::span<const RunRecord> records, EvalMode mode);

/// (acc_method - acc_pre_ft) / (acc_icl - acc_pre_ft).
double performance_gap_recovered(double acc_method, double acc_pre_ft, double acc_icl);

struct GapCell {
  std::string model_name;
  SplitId split;
  Protocol protocol;
  double icl_accuracy = 0.0;
  double ft_best_accuracy = 0.0;
  std::string ft_run_id;
  std::int64_t ft_best_step = 0;
  double gap = 0.0;
};

struct GapTable {
  std::vector<GapCell> cells;
  std::vector<std::string> missing;
};

/// FT-ICL gap per (model, split, protocol) over non-prefixed runs. The ICL accuracy for a
/// (model, split) is its icl record with the smallest checkpoint step.
GapTable gap_table(std::span<const RunRecord> records);

struct ComputePoint {
  double flops = 0.0;
  double accuracy = 0.0;
  std::string model_name;
  std::string run_id;
  std::int64_t checkpoint_step = 0;
};

/// One point per closed-book record, sorted by flops (then model, run, step).
std::vector<ComputePoint> scaling_points(std::span<const RunRecord> records,
                                         double flops_per_param_token = kDefaultFlopsPerParamToken);

struct ShadowingCurve {
  std::string model_name;
  Protocol protocol;
  SplitId split;
  std::string plain_run_id;
  std::string prefixed_run_id;
  std::vector<std::int64_t> steps;
  std::vector<std::optional<double>> plain;
  std::vector<std::optional<double>> prefixed;
  RunRecord best_plain;
  RunRecord best_prefixed;
  double delta = 0.0;  // best prefixed accuracy - best plain accuracy
};

/// Pairs closed-book runs differing only in context_prefixed. Throws UnpairedRun when a run
/// has no partner.
std::vector<ShadowingCurve> shadowing_report(std::span<const RunRecord> records);

struct PgrRow {
  std::string run_id;
  std::string model_name;
  SplitId split;
  Protocol protocol;
  double pre_ft_accuracy = 0.0;
  double icl_accuracy = 0.0;
  double best_accuracy = 0.0;
  std::optional<double> pgr;  // absent when the gap is degenerate
};

struct PgrTable {
  std::vector<PgrRow> rows;
  std::vector<std::string> missing;
};

/// PGR of each non-prefixed closed-book run: weak baseline = its step-0 closed-book accuracy,
/// strong baseline = the (model, split) ICL accuracy, method = its best checkpoint.
PgrTable pgr_table(std::span<const RunRecord> records);

Json gap_table_to_json(const GapTable& table);
std::string gap_table_csv(const GapTable& table);
std::string scaling_csv(std::span<const ComputePoint> points);
Json shadowing_to_json(std::span<const ShadowingCurve> curves);
std::string shadowing_csv(std::span<const ShadowingCurve> curves);
Json pgr_table_to_json(const PgrTable& table);
std::string pgr_table_csv(const PgrTable& table);

struct PlotSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

/// Minimal standalone SVG line chart.
std::string svg_line_plot(const std::string& title, const std::string& x_label, const std::string& y_label,
                          const std::vector<PlotSeries>& series, bool log_x = false);

}  // namespace sys2ft
