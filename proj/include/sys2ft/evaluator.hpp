// SPDX-License-Identifier: Apache-2.0
//
// Multiple-choice evaluation: each question is asked repeatedly with its options
// shuffled, the final letter is extracted from a free-form response and mapped
// back through the permutation.
#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sys2ft/llm_gateway.hpp"
#include "sys2ft/newsdata.hpp"

namespace sys2ft {

enum class EvalMode { kClosedBook, kIcl };

std::string_view to_string(EvalMode mode);
std::optional<EvalMode> parse_eval_mode(std::string_view name);

inline constexpr std::string_view kEvalSystemPrompt =
    "Output your reasoning and answer to the user's question as:\n\n```\nReasoning: <your_reasoning>\nAnswer: "
    "<final_answer>\n```\nThe final answer should be one of 'A', 'B', 'C', or 'D'.";

/// permutation[i] is the presented slot (0 = A) of original option i.
using Permutation = std::array<int, kOptionCount>;

bool is_permutation(const Permutation& p);
Permutation invert(const Permutation& p);
Permutation draw_permutation(SeedStream& rng);

struct EvalConfig {
  int repeats_per_question = 5;
  EvalMode mode = EvalMode::kClosedBook;
  SamplingParams params;
  std::uint64_t seed = 0;

  void validate() const;
};

struct EvalTrial {
  std::string question_id;
  std::string news_id;
  int trial_index = 0;
  Permutation permutation{};
  std::string presented_prompt;  // user message as sent
  std::string raw_response;
  std::optional<char> extracted;
  bool correct = false;
  FinishReason finish = FinishReason::kStop;

  bool operator==(const EvalTrial&) const = default;
};

class ModeMismatch : public DataError {
 public:
  using DataError::DataError;
};

/// System + user messages for one presentation of a question.
std::vector<ChatMessage> render_question(const EvalQuestion& question, const Permutation& permutation, EvalMode mode,
                                         const NewsItem* news = nullptr);

/// Letter committed to after the last "Answer:"/"answer:" marker, if any.
std::optional<char> extract_answer(std::string_view raw);

/// Characters skipped between the marker and the letter.
inline constexpr std::string_view kAnswerStripSet = " \t\r\n*_`'\"()[]{}<>:#~.$\\";

/// Whether the extracted letter selects the original correct option under the permutation.
bool is_correct(const EvalQuestion& question, const Permutation& permutation, std::optional<char> extracted);

/// Seed for the (question, trial) stream; permutation and sampling seed derive from it.
std::uint64_t trial_seed(std::uint64_t eval_seed, std::string_view question_id, int trial_index);

struct AccuracyReport {
  std::map<std::string, double> per_question;
  std::map<std::string, double> per_news;
  std::map<std::string, double> per_split;
  double overall = 0.0;
  std::size_t trial_count = 0;
  std::size_t correct_count = 0;
  std::size_t unparsed_count = 0;
  /// Closed-book questions whose own text quotes the news (the prompt leaks it regardless of mode).
  std::vector<std::string> news_in_prompt;
  EvalConfig config;
};

/// Aggregates trials: per-question mean over trials, per-news unweighted mean of its question
/// means, per-split unweighted mean of its news means, overall = correct / trials.
AccuracyReport aggregate(const std::vector<EvalTrial>& trials, const Dataset& dataset, const EvalConfig& config);

Json trial_to_json(const EvalTrial& trial);
EvalTrial trial_from_json(const Json& j);
Json report_to_json(const AccuracyReport& report);

struct EvalRun {
  AccuracyReport report;
  std::vector<EvalTrial> trials;  // sorted by (question_id, trial_index)
};

/// Runs repeats_per_question trials per question. When trials_path is given, trials already
/// present there are reused, and completed trials are committed in sorted order as soon as
/// every earlier trial is done, so the file is always a prefix of the final output.
EvalRun run_eval(const std::vector<EvalQuestion>& questions, const Dataset& dataset, Gateway& gateway,
                 const EvalConfig& config, const std::optional<std::filesystem::path>& trials_path = std::nullopt);

/// Answer key for mock backends: recognizes a rendered question in the last user message and
/// returns the presented letter of its correct option.
AnswerKey make_answer_key(const Dataset& dataset);

}  // namespace sys2ft
