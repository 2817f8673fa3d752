// SPDX-License-Identifier: Apache-2.0
//
// Replay-element generation. Each protocol runs multi-turn generation
// conversations against a gateway with the news in context and collects the
// assistant turns as replay elements.
#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "sys2ft/llm_gateway.hpp"
#include "sys2ft/newsdata.hpp"
#include "sys2ft/prompt_bank.hpp"

namespace sys2ft {

struct NaivePayload {
  bool operator==(const NaivePayload&) const = default;
};
struct ParaphrasePayload {
  std::string text;
  bool operator==(const ParaphrasePayload&) const = default;
};
struct ImplicationPayload {
  std::string text;
  bool operator==(const ImplicationPayload&) const = default;
};
struct QaPayload {
  std::string question;
  std::string answer;
  bool operator==(const QaPayload&) const = default;
};

using Payload = std::variant<NaivePayload, ParaphrasePayload, ImplicationPayload, QaPayload>;

/// Payload alternative required by each protocol.
bool payload_matches(Protocol protocol, const Payload& payload);

struct TemplateRef {
  Slot slot;
  std::size_t index = 0;
  bool operator==(const TemplateRef&) const = default;
};

struct Provenance {
  std::string conversation_id;
  int turn_index = 0;
  std::vector<TemplateRef> template_choices;
  bool truncated = false;
  bool is_original_news = false;
  std::string answer_conversation_id;  // Self-QA only

  bool operator==(const Provenance&) const = default;
};

struct ReplayElement {
  std::string id;
  std::string news_id;
  Protocol protocol = Protocol::kNaive;
  Payload payload;
  Provenance provenance;

  bool operator==(const ReplayElement&) const = default;
};

struct GenerationJob {
  NewsItem news;
  Protocol protocol = Protocol::kSelfQa;
  int turns_per_conversation = 10;
  int target_pool_size = 1024;
  /// Paraphrase protocol only: copies of the original news added per conversation.
  int originals_per_conversation = 1;
  std::uint64_t seed = 0;
  SamplingParams params;

  void validate() const;
};

struct GenerationResult {
  std::vector<ReplayElement> elements;
  std::size_t conversations = 0;          // paraphrase/implication conversations or Self-QA question conversations
  std::size_t answer_conversations = 0;   // Self-QA phase-2 attempts
  std::size_t generated = 0;              // elements before truncation to the target size
  std::size_t truncated_elements = 0;     // finish=length elements kept in the pool
  std::vector<std::string> skipped;       // dropped Self-QA questions, with reasons
};

/// Number of generation conversations a job runs.
std::size_t conversation_count(const GenerationJob& job);

GenerationResult generate_paraphrases(const GenerationJob& job, Gateway& gateway, const PromptBank& bank);
GenerationResult generate_implications(const GenerationJob& job, Gateway& gateway, const PromptBank& bank);
GenerationResult generate_self_qa(const GenerationJob& job, Gateway& gateway, const PromptBank& bank);
std::vector<ReplayElement> naive_elements(const NewsItem& news, int target_pool_size);

/// Dispatches on job.protocol.
GenerationResult generate(const GenerationJob& job, Gateway& gateway, const PromptBank& bank);

Json element_to_json(const ReplayElement& element);
ReplayElement element_from_json(const Json& j);

/// <output_dir>/<model>/<split>/<protocol>/<news_id>.jsonl
std::filesystem::path pool_path(const std::filesystem::path& output_dir, std::string_view model, SplitId split,
                                Protocol protocol, std::string_view news_id);

/// Writes one element per line; returns the sha256 of the bytes written.
std::string write_pool(const std::filesystem::path& path, const std::vector<ReplayElement>& elements);
std::vector<ReplayElement> read_pool(const std::filesystem::path& path);

}  // namespace sys2ft
