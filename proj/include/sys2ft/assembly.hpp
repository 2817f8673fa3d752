// SPDX-License-Identifier: Apache-2.0
//
// Fine-tuning dataset assembly: replay elements become single-exchange
// user/assistant rows with per-message loss flags, optionally prefixed by an
// exchange that states the news.
#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "sys2ft/protocols.hpp"

namespace sys2ft {

struct TrainMessage {
  Role role = Role::kUser;
  std::string content;
  bool compute_loss = false;

  bool operator==(const TrainMessage&) const = default;
};

struct TrainingConversation {
  std::string id;
  std::string news_id;
  Protocol protocol = Protocol::kNaive;
  std::vector<TrainMessage> messages;
  bool context_prefixed = false;

  bool operator==(const TrainingConversation&) const = default;
};

struct RowOptions {
  /// Loss on the prefix's news-bearing assistant turn as well as the final one.
  bool loss_on_prefix = true;
  /// Draw the prefix assistant turn from the naive data_assistant bank instead of "Okay. {news}".
  bool randomize_prefix = false;
  /// Wrap Self-QA answers with the data_assistant_response bank (binding the answer as {news})
  /// instead of emitting the answer verbatim.
  bool self_qa_response_bank = false;
};

struct AssemblyConfig {
  int rows_per_news = 1024;
  bool context_prefix = false;
  std::uint64_t seed = 0;
  bool exclude_truncated = false;
  RowOptions row;
};

class VariantMismatch : public DataError {
 public:
  using DataError::DataError;
};

class PoolTooSmall : public DataError {
 public:
  PoolTooSmall(std::string news_id, std::size_t available, std::size_t required);
  const std::string& news_id() const noexcept { return news_id_; }
  std::size_t shortfall() const noexcept { return shortfall_; }

 private:
  std::string news_id_;
  std::size_t shortfall_;
};

inline constexpr std::string_view kPrefixAssistantTemplate = "Okay. {news}";

/// Builds one training row. The element's own exchange is drawn from rng before any prefix
/// draw, so toggling the prefix leaves the last two messages unchanged.
TrainingConversation assemble_row(const ReplayElement& element, const NewsItem& news, const PromptBank& bank,
                                  SeedStream& rng, bool context_prefix, const RowOptions& options = {});

/// Exactly rows_per_news rows for every news item of the split, shuffled across the split.
std::vector<TrainingConversation> assemble_split(const std::map<std::string, std::vector<ReplayElement>>& pools,
                                                 const Dataset& dataset, SplitId split, const AssemblyConfig& config,
                                                 const PromptBank& bank = PromptBank::builtin());

/// Checks the loss-mask contract; returns violations (empty when the row is well formed).
std::vector<std::string> check_row(const TrainingConversation& row);

Json row_to_json(const TrainingConversation& row);
TrainingConversation row_from_json(const Json& j);

struct ExportSummary {
  std::size_t row_count = 0;
  std::string sha256;
};

ExportSummary export_jsonl(const std::vector<TrainingConversation>& rows, const std::filesystem::path& path);
std::vector<TrainingConversation> read_training_jsonl(const std::filesystem::path& path);

}  // namespace sys2ft
