#pragma once

#include "swarmbench/config.hpp"
#include "swarmbench/types.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace swarmbench {

enum class TemplateId : std::uint8_t {
    kBoidSeparation,
    kBoidCohesion,
    kBoidAlignment,
    kAcoSelect,
    kAcoDeposit,
    kAcoEvaporate,
};

enum class ReplyFormat : std::uint8_t {
    kVec2Tuple,     // "(dx, dy)"
    kPathWord,      // "short" | "long"
    kPheromonePair, // "[x, y]"
};

struct PromptTemplate {
    TemplateId id;
    std::string_view name;
    /// Placeholders are written {name}.
    std::string_view text;
    ReplyFormat expected_format;
};

const PromptTemplate& prompt_template(TemplateId id);
std::string_view to_string(TemplateId id) noexcept;

/// Placeholder names in order of first appearance, without duplicates.
std::vector<std::string> placeholders(const PromptTemplate& tmpl);

/// Both paths' lengths and current pheromone levels, as shown to ACO agents.
struct PathTable {
    double short_length = 0.0;
    double long_length = 0.0;
    PheromonePair pheromones;
};

using BindingValue = std::variant<double, std::int64_t, std::string, Vec2, std::vector<BoidState>, PathTable>;
using Bindings = std::map<std::string, BindingValue, std::less<>>;

/// Fixed three-decimal notation used for every number placed in a prompt.
std::string format_prompt_number(double value);

/// Renders one binding value the way it appears in prompt text.
std::string format_binding(const BindingValue& value);

/// Exact textual substitution of every {name}. Throws TemplateError naming
/// the placeholder when a binding is missing, or naming the binding when it
/// matches no placeholder.
std::string render(const PromptTemplate& tmpl, const Bindings& bindings);

/// Appended to the prompt when a reply fails to parse.
inline constexpr std::string_view kCorrectiveSuffix =
    "Your previous reply did not match the required format. Reply with ONLY the required format.";

/// Phase instruction strings bound into the path-selection prompt.
std::string_view phase_instruction(Phase phase) noexcept;

// Binding builders used by the LLM rule backends. They produce exactly the
// placeholder set of their template.
Bindings boid_rule_bindings(TemplateId id, const BoidState& self, std::span<const BoidState> others,
                            const WorldConfig& config);
Bindings aco_select_bindings(const AcoState& state, const AcoConfig& config);
Bindings aco_deposit_bindings(const AcoState& state, PathChoice chosen, const AcoConfig& config);
Bindings aco_evaporate_bindings(const AcoState& state, const AcoConfig& config);

} // namespace swarmbench
