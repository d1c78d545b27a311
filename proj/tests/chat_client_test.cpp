#include "swarmbench/chat_client.hpp"
#include "swarmbench/errors.hpp"

#include <gtest/gtest.h>
#include <httplib.h>
#include <nlohmann/json.hpp>

#include <chrono>
#include <mutex>
#include <thread>

using namespace swarmbench;
using nlohmann::json;

namespace {

class EndpointFixture : public ::testing::Test {
protected:
    void SetUp() override {
        server_.Post("/v1/chat/completions", [this](const httplib::Request& req, httplib::Response& res) {
            {
                std::lock_guard lock(mutex_);
                last_body_ = req.body;
                last_auth_ = req.get_header_value("Authorization");
            }
            if (delay_seconds_ > 0) std::this_thread::sleep_for(std::chrono::duration<double>(delay_seconds_));
            res.status = status_;
            res.set_content(reply_body_, "application/json");
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }

    void TearDown() override {
        server_.stop();
        thread_.join();
    }

    LlmEndpointConfig endpoint() const {
        LlmEndpointConfig e;
        e.base_url = "http://127.0.0.1:" + std::to_string(port_) + "/v1";
        e.model_name = "fixture-model";
        e.timeout_seconds = 5;
        return e;
    }

    static std::string completion_body(const std::string& content) {
        return json{{"choices", json::array({{{"message", {{"role", "assistant"}, {"content", content}}}}})}}.dump();
    }

    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
    int status_ = 200;
    double delay_seconds_ = 0;
    std::string reply_body_ = completion_body("short");
    std::mutex mutex_;
    std::string last_body_;
    std::string last_auth_;
};

} // namespace

TEST_F(EndpointFixture, EchoesReplyText) {
    OpenAiChatClient client(endpoint());
    const Completion c = client.complete("Pick a path.");
    EXPECT_EQ(c.text, "short");
    EXPECT_GE(c.latency_seconds, 0.0);
}

TEST_F(EndpointFixture, SendsChatCompletionsBody) {
    OpenAiChatClient client(endpoint());
    client.complete("hello there");
    const json body = json::parse(last_body_);
    EXPECT_EQ(body.at("model"), "fixture-model");
    EXPECT_EQ(body.at("messages").at(0).at("role"), "user");
    EXPECT_EQ(body.at("messages").at(0).at("content"), "hello there");
    EXPECT_DOUBLE_EQ(body.at("temperature").get<double>(), 0.0);
    EXPECT_TRUE(last_auth_.empty());
}

TEST_F(EndpointFixture, BearerTokenWhenKeyPresent) {
    LlmEndpointConfig e = endpoint();
    e.api_key = "fixture-token";
    OpenAiChatClient client(e);
    client.complete("hi");
    EXPECT_EQ(last_auth_, "Bearer fixture-token");
}

TEST_F(EndpointFixture, NonSuccessStatusIsTransportError) {
    status_ = 503;
    OpenAiChatClient client(endpoint());
    try {
        client.complete("hi");
        FAIL();
    } catch (const TransportError& e) {
        EXPECT_EQ(e.http_status(), 503);
    }
}

TEST_F(EndpointFixture, MalformedBodyIsTransportError) {
    reply_body_ = R"({"choices": []})";
    OpenAiChatClient client(endpoint());
    EXPECT_THROW(client.complete("hi"), TransportError);
    reply_body_ = "not json at all";
    EXPECT_THROW(client.complete("hi"), TransportError);
    reply_body_ = R"({"choices": [{"message": {"content": 5}}]})";
    EXPECT_THROW(client.complete("hi"), TransportError);
}

TEST_F(EndpointFixture, InjectedLatencyIsMeasured) {
    delay_seconds_ = 0.5;
    OpenAiChatClient client(endpoint());
    const Completion c = client.complete("hi");
    EXPECT_GE(c.latency_seconds, 0.5);
    EXPECT_LE(c.latency_seconds, 0.6);
}

TEST_F(EndpointFixture, ReadTimeoutIsTransportError) {
    delay_seconds_ = 1.5;
    LlmEndpointConfig e = endpoint();
    e.timeout_seconds = 0.3;
    OpenAiChatClient client(e);
    EXPECT_THROW(client.complete("hi"), TransportError);
}

TEST(ChatClient, UnreachableHostIsTransportError) {
    LlmEndpointConfig e;
    e.base_url = "http://127.0.0.1:9/v1";
    e.timeout_seconds = 2;
    OpenAiChatClient client(e);
    EXPECT_THROW(client.complete("hi"), TransportError);
}

TEST(ChatClient, SplitsBaseUrl) {
    const SplitUrl a = split_base_url("http://localhost:1234/v1");
    EXPECT_EQ(a.origin, "http://localhost:1234");
    EXPECT_EQ(a.path_prefix, "/v1");
    const SplitUrl b = split_base_url("https://api.example.com/");
    EXPECT_EQ(b.origin, "https://api.example.com");
    EXPECT_EQ(b.path_prefix, "");
}

TEST(ChatClient, InvalidEndpointRejected) {
    LlmEndpointConfig e;
    e.base_url = "";
    EXPECT_THROW(OpenAiChatClient{e}, ConfigError);
}
