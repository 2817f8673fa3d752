// SPDX-License-Identifier: Apache-2.0
//
// Prompt template banks for the replay-element generation protocols and the
// training-row formats. Every bank holds five interchangeable templates; one is
// drawn uniformly per render so generated data is diverse but replayable from
// (seed, slot, index).
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sys2ft/errors.hpp"
#include "sys2ft/util.hpp"

namespace sys2ft {

enum class Protocol { kNaive, kParaphrase, kImplication, kSelfQa };

std::string_view to_string(Protocol protocol);
std::optional<Protocol> parse_protocol(std::string_view name);

enum class Slot {
  kSystem,
  kUserFirst,
  kUserRepeat,
  kDataUser,
  kDataAssistant,
  kQSystem,
  kQUser,
  kQUserRepeat,
  kASystem,
  kAUser,
  kDataUserQuestion,
  kDataAssistantResponse,
};

std::string_view to_string(Slot slot);
std::optional<Slot> parse_slot(std::string_view name);

/// Slots that exist for a protocol, in canonical order.
std::vector<Slot> slots_for(Protocol protocol);

inline constexpr std::size_t kTemplatesPerSlot = 5;

/// Placeholder names a template may reference as {name}.
inline constexpr std::string_view kPlaceholders[] = {"news", "topic", "question", "paraphrase", "answer"};

using Bindings = std::map<std::string, std::string, std::less<>>;

class MissingBinding : public DataError {
 public:
  explicit MissingBinding(const std::string& name) : DataError("missing binding for {" + name + "}"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

struct TemplateChoice {
  Protocol protocol;
  Slot slot;
  std::size_t index = 0;
  std::string rendered;
};

class PromptBank {
 public:
  /// The compiled-in banks.
  static const PromptBank& builtin();

  const std::vector<std::string>& templates(Protocol protocol, Slot slot) const;
  bool has(Protocol protocol, Slot slot) const;

  /// Replaces banks from an override document: a JSON array (or single object) of
  /// {"protocol", "slot", "templates": [...]}. Unless allow_any_count, each bank must keep
  /// exactly five entries. Templates may only use the known placeholders.
  void apply_override(const Json& doc, bool allow_any_count = false);
  void apply_override_file(const std::filesystem::path& path, bool allow_any_count = false);

  /// All banks in the override/golden JSON shape, protocols and slots in canonical order.
  Json to_json() const;

 private:
  std::map<std::pair<Protocol, Slot>, std::vector<std::string>> banks_;
};

/// Placeholder names (without braces) referenced by a template, in order of first use.
std::vector<std::string> placeholders_in(std::string_view tmpl);

/// Literal single-pass substitution: values are inserted verbatim and never re-scanned.
std::string substitute(std::string_view tmpl, const Bindings& bindings);

/// Draws an index uniformly over the slot's templates and renders it. Bindings must cover
/// every placeholder used by any template of the slot, whichever index is drawn.
TemplateChoice render(const PromptBank& bank, Protocol protocol, Slot slot, const Bindings& bindings,
                      SeedStream& rng);

/// Renders a specific template index (replay path).
TemplateChoice render_index(const PromptBank& bank, Protocol protocol, Slot slot, std::size_t index,
                            const Bindings& bindings);

/// Counts per template index over n_draws renders of the slot.
std::vector<std::size_t> selection_histogram(const PromptBank& bank, Protocol protocol, Slot slot,
                                             std::size_t n_draws, SeedStream& rng);

}  // namespace sys2ft
