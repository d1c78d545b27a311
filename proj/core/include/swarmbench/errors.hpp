#pragma once

#include <stdexcept>
#include <string>

namespace swarmbench {

/// Invalid configuration value, malformed config file, or unknown config key.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A prompt template could not be rendered (missing or extra placeholder).
class TemplateError : public std::runtime_error {
public:
    TemplateError(const std::string& message, std::string placeholder)
        : std::runtime_error(message), placeholder_(std::move(placeholder)) {}

    const std::string& placeholder() const noexcept { return placeholder_; }

private:
    std::string placeholder_;
};

/// A model reply did not match the strict output grammar.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::string raw)
        : std::runtime_error(message), raw_(std::move(raw)) {}

    const std::string& raw_text() const noexcept { return raw_; }

private:
    std::string raw_;
};

/// Network, HTTP status, or response-body failure while talking to a model.
class TransportError : public std::runtime_error {
public:
    TransportError(const std::string& message, int http_status = 0)
        : std::runtime_error(message), status_(http_status) {}

    int http_status() const noexcept { return status_; }

private:
    int status_;
};

/// Filesystem failure while writing reports.
class ReportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace swarmbench
