// SPDX-License-Identifier: Apache-2.0
//
// The New News dataset: hypothetical news items grouped into five splits, each
// news item carrying 4-option downstream evaluation questions.
#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sys2ft/util.hpp"

namespace sys2ft {

enum class SplitId { kMath, kCoding, kDiscoveries, kLeaderboards, kEvents };

inline constexpr std::array<SplitId, 5> kAllSplits = {SplitId::kMath, SplitId::kCoding, SplitId::kDiscoveries,
                                                      SplitId::kLeaderboards, SplitId::kEvents};

std::string_view to_string(SplitId split);
std::optional<SplitId> parse_split(std::string_view name);

struct NewsItem {
  std::string id;
  SplitId split = SplitId::kMath;
  std::string topic;  // main entity, bound to {topic}
  std::string text;   // the news itself, bound to {news}

  bool operator==(const NewsItem&) const = default;
};

inline constexpr std::size_t kOptionCount = 4;

struct EvalQuestion {
  std::string id;
  std::string news_id;
  std::string stem;
  std::array<std::string, kOptionCount> options;
  int correct_index = 0;  // 0-based; letters are presentation only

  bool operator==(const EvalQuestion&) const = default;
};

enum class Strictness { kStrict, kLenient };

inline constexpr std::size_t kStrictNewsPerSplit = 15;
inline constexpr std::size_t kStrictQuestionsPerNews = 5;

/// Immutable after load; safe to share across readers.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<NewsItem> news, std::vector<EvalQuestion> questions);

  const std::vector<NewsItem>& news() const noexcept { return news_; }
  const std::vector<EvalQuestion>& questions() const noexcept { return questions_; }

  const NewsItem* find_news(std::string_view id) const;
  const NewsItem& news_by_id(std::string_view id) const;  // throws UnknownNewsId
  std::vector<const NewsItem*> news_in_split(SplitId split) const;

  bool operator==(const Dataset& other) const {
    return news_ == other.news_ && questions_ == other.questions_;
  }

 private:
  std::vector<NewsItem> news_;
  std::vector<EvalQuestion> questions_;
  std::unordered_map<std::string, std::size_t> news_index_;
};

/// Returns every violation found; empty means valid for the given strictness.
std::vector<std::string> validate_dataset(const std::vector<NewsItem>& news,
                                          const std::vector<EvalQuestion>& questions, Strictness strictness);

/// Parses the dataset JSON document. Throws ParseError on malformed input and ValidationError
/// (with the full violation list) when invariants fail.
Dataset parse_dataset(std::string_view json_text, Strictness strictness);
Dataset load_dataset(const std::filesystem::path& path, Strictness strictness);

Json dataset_to_json(const Dataset& dataset);
std::string serialize_dataset(const Dataset& dataset);

/// Questions attached to news_id, in file order. Throws UnknownNewsId.
std::vector<EvalQuestion> questions_for(const Dataset& dataset, std::string_view news_id);

}  // namespace sys2ft
