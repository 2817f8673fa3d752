// SPDX-License-Identifier: Apache-2.0
//
// Chat-completion gateway: one entry point for a remote OpenAI-compatible service
// or a deterministic in-process mock, with retry, a concurrency limit, a JSONL run
// log and response reuse from that log.
#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <regex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sys2ft/errors.hpp"
#include "sys2ft/util.hpp"

namespace sys2ft {

enum class Role { kSystem, kUser, kAssistant };

std::string_view to_string(Role role);
std::optional<Role> parse_role(std::string_view name);

struct ChatMessage {
  Role role = Role::kUser;
  std::string content;

  bool operator==(const ChatMessage&) const = default;
};

inline constexpr double kDefaultTemperature = 0.4;
inline constexpr int kDefaultMaxNewTokens = 4096;

struct SamplingParams {
  double temperature = kDefaultTemperature;
  int max_new_tokens = kDefaultMaxNewTokens;
  std::optional<std::uint64_t> seed;
};

struct RetryPolicy {
  int max_attempts = 5;
  std::chrono::milliseconds initial_backoff{1000};
  double multiplier = 2.0;
  std::chrono::milliseconds max_backoff{60000};

  /// Delay before retry number `retry` (1-based).
  std::chrono::milliseconds backoff_for(int retry) const;
};

enum class FinishReason { kStop, kLength, kError };

std::string_view to_string(FinishReason finish);
std::optional<FinishReason> parse_finish(std::string_view name);

/// Inspects a request and, when it recognizes a multiple-choice prompt, returns the letter
/// of the correct option as presented. Lets a mock act as a perfect answerer.
using AnswerKey = std::function<std::optional<char>(std::span<const ChatMessage>)>;

struct MockRule {
  enum class Match { kContains, kRegex };
  enum class Scope { kWholePrompt, kLastUser };

  Match match = Match::kContains;
  Scope scope = Scope::kWholePrompt;
  std::string pattern;
  /// Response template. Variables: {last_user} {turn} {hash} {seed} {oracle} and regex groups {1}..{9}.
  std::string response;
  FinishReason finish = FinishReason::kStop;
};

struct MockScript {
  std::vector<MockRule> rules;  // first match wins
  std::string default_response = "mock-{hash}";
  AnswerKey answer_key;
};

enum class BackendKind { kHttp, kMock };

struct BackendConfig {
  BackendKind kind = BackendKind::kMock;
  std::string endpoint_url;  // scheme://host[:port][/prefix]; "/v1/chat/completions" is appended
  std::string model_name = "mock";
  std::string api_key_env;
  int max_concurrent_requests = 4;
  RetryPolicy retry;
  std::chrono::seconds read_timeout{600};
  MockScript mock;

  /// Throws ConfigError when an invariant does not hold.
  void validate() const;
};

/// Builds a mock backend configuration from a script.
BackendConfig scripted_mock(MockScript script, std::string model_name = "mock");

struct Usage {
  std::int64_t prompt_tokens = 0;
  std::int64_t completion_tokens = 0;
  bool estimated = false;
};

/// Character-count/4 estimate, rounded up.
std::int64_t estimate_tokens(std::string_view text);

struct ChatRequest {
  std::string model;
  std::vector<ChatMessage> messages;
  SamplingParams params;
};

struct BackendReply {
  std::string content;
  FinishReason finish = FinishReason::kStop;
  std::optional<Usage> usage;  // absent when the backend did not report it
};

/// Transport seam. Implementations throw TransportError for retryable failures
/// (connection problems, HTTP 429/5xx), AuthError or ProtocolError otherwise.
class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  virtual BackendReply send(const ChatRequest& request) = 0;
};

class HttpChatBackend : public ChatBackend {
 public:
  HttpChatBackend(std::string endpoint_url, std::string api_key, std::chrono::seconds read_timeout);
  BackendReply send(const ChatRequest& request) override;

  /// OpenAI-compatible request body.
  static Json request_body(const ChatRequest& request);
  /// Parses a chat-completions response body; throws ProtocolError when malformed.
  static BackendReply parse_response(std::string_view body);

 private:
  std::string scheme_host_port_;
  std::string path_;
  std::string api_key_;
  std::chrono::seconds read_timeout_;
};

/// Output is a pure function of (messages, seed) and the script.
class ScriptedMockBackend : public ChatBackend {
 public:
  explicit ScriptedMockBackend(MockScript script);
  BackendReply send(const ChatRequest& request) override;

 private:
  MockScript script_;
  std::vector<std::optional<std::regex>> compiled_;  // parallel to script_.rules
};

std::shared_ptr<ChatBackend> make_backend(const BackendConfig& config);

/// Text the mock matchers run against: "<|role|>\ncontent\n" per message.
std::string render_prompt(std::span<const ChatMessage> messages);

/// Stable hash of everything that determines a completion.
std::string request_hash(const ChatRequest& request);

/// Throws PreconditionError unless: optional leading system message, then user/assistant
/// alternation starting and ending with user, non-empty system/user content.
void check_conversation(std::span<const ChatMessage> messages);

struct CompletionResult {
  ChatMessage message;
  FinishReason finish = FinishReason::kStop;
  Usage usage;
  int attempts = 0;
  bool cached = false;
};

struct GatewayOptions {
  /// JSONL run log; previously logged successful responses are reused by request hash.
  std::optional<std::filesystem::path> run_log;
  bool reuse_logged_responses = true;
  std::function<void(std::chrono::milliseconds)> sleeper;  // defaults to this_thread::sleep_for
};

struct GatewayStats {
  std::size_t backend_calls = 0;   // attempts that reached the backend
  std::size_t completions = 0;     // successful completions (including cache hits)
  std::size_t cache_hits = 0;
  std::size_t peak_in_flight = 0;
};

class Gateway {
 public:
  Gateway(BackendConfig config, std::shared_ptr<ChatBackend> backend, GatewayOptions options = {});
  explicit Gateway(BackendConfig config, GatewayOptions options = {});
  ~Gateway();

  Gateway(const Gateway&) = delete;
  Gateway& operator=(const Gateway&) = delete;

  /// Safe to call concurrently. `tag` is recorded in the run log (e.g. a conversation id).
  CompletionResult complete(std::span<const ChatMessage> messages, const SamplingParams& params,
                            std::string_view tag = {});

  const BackendConfig& config() const noexcept { return config_; }
  GatewayStats stats() const;

 private:
  struct CachedReply {
    std::string content;
    FinishReason finish;
    Usage usage;
  };

  void acquire_slot();
  void release_slot();
  void log(const Json& record);
  void load_cache(const std::filesystem::path& path);

  BackendConfig config_;
  std::shared_ptr<ChatBackend> backend_;
  GatewayOptions options_;

  mutable std::mutex mu_;
  std::condition_variable slot_cv_;
  std::size_t in_flight_ = 0;
  GatewayStats stats_;
  std::unordered_map<std::string, CachedReply> cache_;

  std::mutex log_mu_;
  std::ofstream log_;
};

/// Totals derived from a run log.
struct GenerationAccounting {
  std::size_t completions = 0;
  std::size_t cached = 0;
  std::size_t errors = 0;
  std::size_t truncated = 0;
  std::size_t estimated_usage = 0;
  std::int64_t prompt_tokens = 0;      // non-cached completions only
  std::int64_t completion_tokens = 0;  // non-cached completions only
};

GenerationAccounting summarize_run_log(const std::filesystem::path& path);

}  // namespace sys2ft
