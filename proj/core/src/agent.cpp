#include "swarmbench/agent.hpp"

#include "swarmbench/errors.hpp"
#include "swarmbench/parsers.hpp"

namespace swarmbench {

ReplyValue parse_reply(ReplyFormat format, std::string_view raw) {
    switch (format) {
    case ReplyFormat::kVec2Tuple: return parse_vec2(raw);
    case ReplyFormat::kPathWord: return parse_path(raw);
    case ReplyFormat::kPheromonePair: return parse_pheromones(raw);
    }
    throw ParseError("unknown reply format", std::string(raw));
}

AgentReply ask(TemplateId id, const Bindings& bindings, ChatModel& model, int max_attempts) {
    if (max_attempts < 1) {
        throw ConfigError("max_attempts must be >= 1");
    }
    const PromptTemplate& tmpl = prompt_template(id);
    const std::string prompt = render(tmpl, bindings);

    AgentReply reply;
    CompletionRequest request{prompt, id, &bindings};
    bool corrective = false;

    while (reply.attempts < max_attempts) {
        ++reply.attempts;
        if (corrective) {
            request.prompt = prompt + "\n" + std::string(kCorrectiveSuffix);
        }
        Completion completion;
        try {
            completion = model.complete(request);
        } catch (const TransportError&) {
            if (reply.attempts >= max_attempts) {
                throw;
            }
            continue;
        }
        reply.latency_seconds += completion.latency_seconds;
        reply.raw_text = std::move(completion.text);
        try {
            reply.parsed = parse_reply(tmpl.expected_format, reply.raw_text);
            return reply;
        } catch (const ParseError&) {
            corrective = true;
        }
    }
    return reply;
}

} // namespace swarmbench
