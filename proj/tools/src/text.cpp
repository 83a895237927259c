#include "cores/toolkit/text.hpp"

#include <charconv>
#include <vector>

namespace cores::text {

namespace {

std::string join(std::span<const std::int64_t> xs, char sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::int64_t parse_int(std::string_view token, std::string_view what) {
    token = trim(token);
    std::int64_t value = 0;
    const char* begin = token.data();
    const char* end = token.data() + token.size();
    if (!token.empty() && token.front() == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (token.empty() || ec != std::errc() || ptr != end)
        throw DomainError("malformed " + std::string(what) + ": bad integer '" + std::string(token) + "'");
    return value;
}

std::vector<std::int64_t> split_ints(std::string_view body, char sep, std::string_view what) {
    std::vector<std::int64_t> out;
    body = trim(body);
    if (body.empty()) return out;
    std::size_t pos = 0;
    for (;;) {
        const auto next = body.find(sep, pos);
        out.push_back(parse_int(body.substr(pos, next == std::string_view::npos ? next : next - pos), what));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

std::string_view strip_brackets(std::string_view text, char open, char close, std::string_view what) {
    text = trim(text);
    if (text.size() < 2 || text.front() != open || text.back() != close)
        throw DomainError("malformed " + std::string(what) + ": expected " + open + "..." + close);
    return text.substr(1, text.size() - 2);
}

}  // namespace

std::string format(const Partition& p) { return join(p.parts(), ','); }
std::string format(const SSet& q) { return "[" + join(q.elements(), ',') + "]"; }
std::string format(const SPoint& p) { return "(" + join(p.coords(), ',') + ")"; }
std::string format(const Word& w) { return join(w, ' '); }

Partition parse_partition(std::string_view text) {
    return Partition(split_ints(text, ',', "partition"));
}

SSet parse_s_set(std::string_view text) {
    auto xs = split_ints(strip_brackets(text, '[', ']', "s-set"), ',', "s-set");
    const auto s = static_cast<std::int64_t>(xs.size());
    return SSet(s, std::move(xs));
}

SPoint parse_s_point(std::string_view text) {
    return SPoint(split_ints(strip_brackets(text, '(', ')', "s-point"), ',', "s-point"));
}

Word parse_word(std::string_view text) {
    Word w;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto start = text.find_first_not_of(" \t,", pos);
        if (start == std::string_view::npos) break;
        auto stop = text.find_first_of(" \t,", start);
        if (stop == std::string_view::npos) stop = text.size();
        w.push_back(parse_int(text.substr(start, stop - start), "word"));
        pos = stop;
    }
    return w;
}

}  // namespace cores::text
