#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mpa/error.hpp"

namespace mpa {

/// Returns true if @p text may be used as a character or state name.
///
/// A token is nonempty, contains no whitespace, is not one of the reserved
/// separators "/" and ";", and contains neither "->" nor the comment marker '#'.
bool is_valid_token(std::string_view text);

/// Opaque name with string identity. Tags keep states and characters apart.
template <class Tag>
class Token {
public:
    explicit Token(std::string name) : name_(std::move(name)) {
        if (!is_valid_token(name_)) {
            throw ValidationError(ValidationError::Kind::InvalidToken, name_,
                                  "invalid token '" + name_ + "'");
        }
    }

    const std::string& name() const noexcept { return name_; }

    friend bool operator==(const Token&, const Token&) = default;
    friend auto operator<=>(const Token&, const Token&) = default;

private:
    std::string name_;
};

struct CharacterTag {};
struct StateTag {};

using Character = Token<CharacterTag>;
using StateId = Token<StateTag>;

/// A finite sequence of characters. Infinite streams are not represented.
class Stream {
public:
    Stream() = default;
    explicit Stream(std::vector<Character> items) : items_(std::move(items)) {}
    Stream(std::initializer_list<Character> items) : items_(items) {}

    /// Builds a stream from character names, validating each one.
    static Stream of(std::initializer_list<std::string_view> names);

    const std::vector<Character>& items() const noexcept { return items_; }
    bool empty() const noexcept { return items_.empty(); }
    std::size_t size() const noexcept { return items_.size(); }
    const Character& operator[](std::size_t i) const { return items_[i]; }

    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

    friend bool operator==(const Stream&, const Stream&) = default;
    friend auto operator<=>(const Stream&, const Stream&) = default;

private:
    std::vector<Character> items_;
};

Stream concat(const Stream& s, const Stream& t);
std::size_t length(const Stream& s);
Stream filter(const std::set<Character>& keep, const Stream& s);

/// First element; throws ValidationError(EmptyStream) on the empty stream.
const Character& first(const Stream& s);
/// Everything but the first element; throws ValidationError(EmptyStream) on the empty stream.
Stream rest(const Stream& s);

bool is_prefix(const Stream& s, const Stream& t);

/// Whitespace-separated token form; the empty stream is the empty string.
std::string serialize(const Stream& s);
/// Inverse of serialize. Tokens are validated.
Stream parse_stream(std::string_view text);

/// Display form, e.g. "⟨0,L⟩".
std::string to_string(const Stream& s);

} // namespace mpa
