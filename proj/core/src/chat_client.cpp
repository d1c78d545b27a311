#include "swarmbench/chat_client.hpp"

#include "swarmbench/errors.hpp"

#include <httplib.h>
#include <nlohmann/json.hpp>

#include <chrono>
#include <condition_variable>
#include <mutex>

namespace swarmbench {

namespace {

class InflightLimiter {
public:
    explicit InflightLimiter(int limit) : available_(limit) {}

    void acquire() {
        std::unique_lock lock(mutex_);
        cv_.wait(lock, [&] { return available_ > 0; });
        --available_;
    }

    void release() {
        {
            std::lock_guard lock(mutex_);
            ++available_;
        }
        cv_.notify_one();
    }

private:
    std::mutex mutex_;
    std::condition_variable cv_;
    int available_;
};

class InflightSlot {
public:
    explicit InflightSlot(InflightLimiter& limiter) : limiter_(limiter) { limiter_.acquire(); }
    ~InflightSlot() { limiter_.release(); }
    InflightSlot(const InflightSlot&) = delete;
    InflightSlot& operator=(const InflightSlot&) = delete;

private:
    InflightLimiter& limiter_;
};

} // namespace

SplitUrl split_base_url(const std::string& base_url) {
    const std::size_t scheme_end = base_url.find("://");
    const std::size_t host_start = scheme_end == std::string::npos ? 0 : scheme_end + 3;
    const std::size_t path_start = base_url.find('/', host_start);
    SplitUrl out;
    if (path_start == std::string::npos) {
        out.origin = base_url;
    } else {
        out.origin = base_url.substr(0, path_start);
        out.path_prefix = base_url.substr(path_start);
    }
    while (!out.path_prefix.empty() && out.path_prefix.back() == '/') {
        out.path_prefix.pop_back();
    }
    return out;
}

struct OpenAiChatClient::Impl {
    explicit Impl(int max_inflight) : limiter(max_inflight) {}
    InflightLimiter limiter;
};

OpenAiChatClient::OpenAiChatClient(LlmEndpointConfig endpoint)
    : endpoint_(std::move(endpoint)) {
    endpoint_.validate();
    impl_ = std::make_unique<Impl>(endpoint_.max_inflight);
}

OpenAiChatClient::~OpenAiChatClient() = default;

Completion OpenAiChatClient::complete(const CompletionRequest& request) {
    using nlohmann::json;
    const SplitUrl url = split_base_url(endpoint_.base_url);

    const json body = {
        {"model", endpoint_.model_name},
        {"messages", json::array({{{"role", "user"}, {"content", request.prompt}}})},
        {"temperature", endpoint_.temperature},
    };

    InflightSlot slot(impl_->limiter);

    httplib::Client client(url.origin);
    const auto timeout = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::duration<double>(endpoint_.timeout_seconds));
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    if (endpoint_.api_key) {
        client.set_bearer_token_auth(*endpoint_.api_key);
    }

    const auto start = std::chrono::steady_clock::now();
    auto result = client.Post(url.path_prefix + "/chat/completions", body.dump(), "application/json");
    const double latency = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (!result) {
        throw TransportError("request to " + url.origin + " failed: " + httplib::to_string(result.error()));
    }
    if (result->status < 200 || result->status >= 300) {
        throw TransportError("endpoint returned HTTP " + std::to_string(result->status), result->status);
    }

    try {
        const json reply = json::parse(result->body);
        const json& content = reply.at("choices").at(0).at("message").at("content");
        if (!content.is_string()) {
            throw TransportError("response message content is not a string", result->status);
        }
        return Completion{content.get<std::string>(), latency};
    } catch (const json::exception& e) {
        throw TransportError(std::string("malformed chat-completions response: ") + e.what(), result->status);
    }
}

} // namespace swarmbench
