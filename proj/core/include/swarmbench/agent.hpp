#pragma once

#include "swarmbench/chat_client.hpp"
#include "swarmbench/prompts.hpp"

#include <optional>
#include <string>
#include <variant>

namespace swarmbench {

using ReplyValue = std::variant<Vec2, PathChoice, PheromonePair>;

struct AgentReply {
    /// Text of the last completion received.
    std::string raw_text;
    /// Present iff some attempt parsed.
    std::optional<ReplyValue> parsed;
    int attempts = 0;
    /// Sum over all attempts.
    double latency_seconds = 0.0;

    template <typename T>
    std::optional<T> value() const {
        if (parsed) {
            if (const T* v = std::get_if<T>(&*parsed)) {
                return *v;
            }
        }
        return std::nullopt;
    }
};

/// Parses `raw` with the grammar for `format`; throws ParseError.
ReplyValue parse_reply(ReplyFormat format, std::string_view raw);

/// Render, complete, parse. A reply that fails to parse is retried with
/// kCorrectiveSuffix appended, up to max_attempts completions in total; on
/// exhaustion the reply comes back without a parsed value. Transport
/// failures consume attempts the same way and the last one is rethrown
/// when none remain.
AgentReply ask(TemplateId id, const Bindings& bindings, ChatModel& model, int max_attempts);

} // namespace swarmbench
