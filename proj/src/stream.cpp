#include "mpa/stream.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mpa {

bool is_valid_token(std::string_view text) {
    if (text.empty() || text == "/" || text == ";") {
        return false;
    }
    if (text.find("->") != std::string_view::npos || text.find('#') != std::string_view::npos) {
        return false;
    }
    return std::none_of(text.begin(), text.end(),
                        [](unsigned char c) { return std::isspace(c) != 0 || std::iscntrl(c) != 0; });
}

Stream Stream::of(std::initializer_list<std::string_view> names) {
    std::vector<Character> items;
    items.reserve(names.size());
    for (auto name : names) {
        items.emplace_back(std::string(name));
    }
    return Stream(std::move(items));
}

Stream concat(const Stream& s, const Stream& t) {
    std::vector<Character> items;
    items.reserve(s.size() + t.size());
    items.insert(items.end(), s.begin(), s.end());
    items.insert(items.end(), t.begin(), t.end());
    return Stream(std::move(items));
}

std::size_t length(const Stream& s) { return s.size(); }

Stream filter(const std::set<Character>& keep, const Stream& s) {
    std::vector<Character> items;
    std::copy_if(s.begin(), s.end(), std::back_inserter(items),
                 [&](const Character& c) { return keep.contains(c); });
    return Stream(std::move(items));
}

const Character& first(const Stream& s) {
    if (s.empty()) {
        throw ValidationError(ValidationError::Kind::EmptyStream, "", "first of the empty stream");
    }
    return s[0];
}

Stream rest(const Stream& s) {
    if (s.empty()) {
        throw ValidationError(ValidationError::Kind::EmptyStream, "", "rest of the empty stream");
    }
    return Stream(std::vector<Character>(s.begin() + 1, s.end()));
}

bool is_prefix(const Stream& s, const Stream& t) {
    return s.size() <= t.size() && std::equal(s.begin(), s.end(), t.begin());
}

std::string serialize(const Stream& s) {
    std::string out;
    for (const auto& c : s) {
        if (!out.empty()) {
            out += ' ';
        }
        out += c.name();
    }
    return out;
}

Stream parse_stream(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<Character> items;
    for (std::string token; in >> token;) {
        items.emplace_back(std::move(token));
    }
    return Stream(std::move(items));
}

std::string to_string(const Stream& s) {
    std::string out = "⟨";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += s[i].name();
    }
    out += "⟩";
    return out;
}

} // namespace mpa
