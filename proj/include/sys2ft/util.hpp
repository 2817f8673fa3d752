// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace sys2ft {

using Json = nlohmann::ordered_json;

/// Deterministically derives a child seed from a parent seed and a label.
std::uint64_t derive_seed(std::uint64_t parent, std::string_view label);

/// Seeded random source with a portable (implementation-independent) output sequence.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n). Rejection sampling, so unbiased for any n >= 1.
  std::size_t uniform_index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// Fisher-Yates shuffle driven by SeedStream (std::shuffle is not portable).
template <typename T>
void seeded_shuffle(std::vector<T>& items, SeedStream& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = rng.uniform_index(i);
    std::swap(items[i - 1], items[j]);
  }
}

std::string sha256_hex(std::string_view bytes);

std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temp file and renames it over the target.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

void append_line(const std::filesystem::path& path, std::string_view line);

/// One compact JSON document per line; invalid UTF-8 is replaced, never thrown on.
std::string to_json_line(const Json& value);

std::vector<Json> read_jsonl(const std::filesystem::path& path);

/// Runs fn(0..n-1) on up to max_workers threads. If any call throws, no new indices are started
/// and the exception of the lowest failing index is rethrown once all workers have stopped.
void parallel_for(std::size_t n, std::size_t max_workers, const std::function<void(std::size_t)>& fn);

/// Replaces path-hostile characters so a model or id can be used as a directory name.
std::string sanitize_path_component(std::string_view s);

}  // namespace sys2ft
