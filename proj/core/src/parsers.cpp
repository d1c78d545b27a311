#include "swarmbench/parsers.hpp"

#include "swarmbench/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>

namespace swarmbench {

namespace {

bool is_ws(char c) noexcept { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && is_ws(text_[pos_])) ++pos_;
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_end() const { return pos_ == text_.size(); }

    std::optional<double> real() {
        const std::size_t start = pos_;
        std::size_t p = pos_;
        if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
        const std::size_t int_start = p;
        while (p < text_.size() && is_digit(text_[p])) ++p;
        bool digits = p > int_start;
        if (p < text_.size() && text_[p] == '.') {
            ++p;
            const std::size_t frac_start = p;
            while (p < text_.size() && is_digit(text_[p])) ++p;
            digits = digits || p > frac_start;
        }
        if (!digits) return std::nullopt;
        if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
            std::size_t q = p + 1;
            if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
            const std::size_t exp_start = q;
            while (q < text_.size() && is_digit(text_[q])) ++q;
            if (q == exp_start) return std::nullopt;
            p = q;
        }

        // from_chars rejects a leading '+'.
        std::size_t number_start = start;
        if (text_[number_start] == '+') ++number_start;
        double value = 0.0;
        const char* first = text_.data() + number_start;
        const char* last = text_.data() + p;
        auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
        if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
            return std::nullopt;
        }
        pos_ = p;
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// ws* open ws* real ws* , ws* real ws* close ws*
std::optional<std::pair<double, double>> parse_pair(std::string_view raw, char open, char close) {
    Scanner s(raw);
    s.skip_ws();
    if (!s.consume(open)) return std::nullopt;
    s.skip_ws();
    auto a = s.real();
    if (!a) return std::nullopt;
    s.skip_ws();
    if (!s.consume(',')) return std::nullopt;
    s.skip_ws();
    auto b = s.real();
    if (!b) return std::nullopt;
    s.skip_ws();
    if (!s.consume(close)) return std::nullopt;
    s.skip_ws();
    if (!s.at_end()) return std::nullopt;
    return std::pair{*a, *b};
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_ws(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_ws(s.back())) s.remove_suffix(1);
    return s;
}

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
           });
}

} // namespace

Vec2 parse_vec2(std::string_view raw) {
    auto pair = parse_pair(raw, '(', ')');
    if (!pair) {
        throw ParseError("reply is not a (dx, dy) vector", std::string(raw));
    }
    // -0.0 compares equal to 0.0 but would leak a sign into formatting.
    return {pair->first + 0.0, pair->second + 0.0};
}

PathChoice parse_path(std::string_view raw) {
    const std::string_view word = trim(raw);
    if (iequals(word, "short")) return PathChoice::kShort;
    if (iequals(word, "long")) return PathChoice::kLong;
    throw ParseError("reply is not 'short' or 'long'", std::string(raw));
}

PheromonePair parse_pheromones(std::string_view raw) {
    auto pair = parse_pair(raw, '[', ']');
    if (!pair) {
        throw ParseError("reply is not a [x, y] pheromone pair", std::string(raw));
    }
    if (pair->first < 0.0 || pair->second < 0.0) {
        throw ParseError("pheromone levels must be non-negative", std::string(raw));
    }
    return {pair->first + 0.0, pair->second + 0.0};
}

std::string format_reply_number(double value) {
    if (value == 0.0) {
        value = 0.0; // drop the sign of -0.0
    }
    char buf[512];
    for (int precision = 3; precision <= 17; ++precision) {
        const int n = std::snprintf(buf, sizeof buf, "%.*f", precision, value);
        if (n <= 0 || n >= static_cast<int>(sizeof buf)) {
            break;
        }
        double back = 0.0;
        auto [ptr, ec] = std::from_chars(buf, buf + n, back);
        if (ec == std::errc() && back == value) {
            return std::string(buf, static_cast<std::size_t>(n));
        }
    }
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string format_vec2_reply(Vec2 v) {
    return "(" + format_reply_number(v.x) + ", " + format_reply_number(v.y) + ")";
}

std::string format_path_reply(PathChoice choice) { return std::string(to_string(choice)); }

std::string format_pheromone_reply(PheromonePair p) {
    return "[" + format_reply_number(p.short_path) + ", " + format_reply_number(p.long_path) + "]";
}

} // namespace swarmbench
