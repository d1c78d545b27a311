#pragma once

#include "swarmbench/config.hpp"
#include "swarmbench/prompts.hpp"

#include <memory>
#include <optional>
#include <string>

namespace swarmbench {

struct CompletionRequest {
    std::string prompt;
    /// Which agent is asking; unset for free-form prompts (latency probes).
    std::optional<TemplateId> template_id;
    /// Structured values behind `prompt`; live endpoints only see the text.
    const Bindings* bindings = nullptr;
};

struct Completion {
    std::string text;
    double latency_seconds = 0.0;
};

/// Anything that turns a prompt into reply text. Implementations throw
/// TransportError when no reply text could be obtained.
class ChatModel {
public:
    virtual ~ChatModel() = default;
    virtual Completion complete(const CompletionRequest& request) = 0;
};

/// Client for an OpenAI-compatible chat-completions endpoint. POSTs
/// {model, messages: [{role: user, content}], temperature} to
/// <base_url>/chat/completions with a bearer token when api_key is set, and
/// returns choices[0].message.content. Safe for concurrent use; at most
/// max_inflight requests are outstanding at once.
class OpenAiChatClient final : public ChatModel {
public:
    explicit OpenAiChatClient(LlmEndpointConfig endpoint);
    ~OpenAiChatClient() override;

    OpenAiChatClient(const OpenAiChatClient&) = delete;
    OpenAiChatClient& operator=(const OpenAiChatClient&) = delete;

    Completion complete(const CompletionRequest& request) override;
    Completion complete(const std::string& prompt) { return complete(CompletionRequest{prompt, std::nullopt, nullptr}); }

    const LlmEndpointConfig& endpoint() const noexcept { return endpoint_; }

private:
    struct Impl;
    LlmEndpointConfig endpoint_;
    std::unique_ptr<Impl> impl_;
};

/// Splits a base URL into scheme://host[:port] and a path prefix without a
/// trailing slash, e.g. "http://localhost:1234/v1" -> {"http://localhost:1234", "/v1"}.
struct SplitUrl {
    std::string origin;
    std::string path_prefix;
};
SplitUrl split_base_url(const std::string& base_url);

} // namespace swarmbench
