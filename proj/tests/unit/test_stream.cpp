#include <doctest.h>

#include <random>

#include "mpa/stream.hpp"

using namespace mpa;

namespace {

Stream S(std::initializer_list<std::string_view> names) { return Stream::of(names); }

Stream random_stream(std::mt19937& rng, int max_len) {
    static const char* names[] = {"a", "b", "c"};
    std::vector<Character> items;
    const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
    for (int i = 0; i < len; ++i) {
        items.emplace_back(names[std::uniform_int_distribution<int>(0, 2)(rng)]);
    }
    return Stream(std::move(items));
}

} // namespace

TEST_CASE("tokens") {
    CHECK(is_valid_token("even"));
    CHECK(is_valid_token("?"));
    CHECK(is_valid_token("[a,b]"));
    CHECK_FALSE(is_valid_token(""));
    CHECK_FALSE(is_valid_token("/"));
    CHECK_FALSE(is_valid_token("a->b"));
    CHECK_FALSE(is_valid_token("two words"));
    CHECK_FALSE(is_valid_token("#x"));
    CHECK_THROWS_AS(Character("a b"), ValidationError);
    CHECK(Character("a") == Character("a"));
    CHECK(Character("a") != Character("b"));
}

TEST_CASE("concat") {
    CHECK(concat(S({}), S({"a", "b"})) == S({"a", "b"}));
    CHECK(concat(S({"a"}), S({"b"})) == S({"a", "b"}));
    CHECK(concat(S({"0", "L"}), S({"0"})) == S({"0", "L", "0"}));
}

TEST_CASE("length") {
    CHECK(length(S({})) == 0);
    CHECK(length(S({"a"})) == 1);
    CHECK(length(S({"0", "L", "0"})) == 3);
}

TEST_CASE("filter") {
    CHECK(filter({Character("0")}, S({"0", "L", "0"})) == S({"0", "0"}));
    CHECK(filter({}, S({"a", "b"})) == S({}));
    CHECK(filter({Character("a"), Character("b")}, S({"a", "b"})) == S({"a", "b"}));
}

TEST_CASE("first and rest") {
    CHECK(first(S({"a", "b"})) == Character("a"));
    CHECK(first(S({"0"})) == Character("0"));
    CHECK(rest(S({"a", "b"})) == S({"b"}));
    CHECK(rest(S({"0"})) == S({}));

    try {
        (void)first(S({}));
        FAIL("first of the empty stream must throw");
    } catch (const ValidationError& e) {
        CHECK(e.kind() == ValidationError::Kind::EmptyStream);
    }
    CHECK_THROWS_AS((void)rest(S({})), ValidationError);
}

TEST_CASE("is_prefix") {
    CHECK(is_prefix(S({}), S({"a"})));
    CHECK(is_prefix(S({"a", "b"}), S({"a", "b"})));
    CHECK_FALSE(is_prefix(S({"b"}), S({"a", "b"})));
    CHECK_FALSE(is_prefix(S({"a", "b"}), S({"a"})));
}

TEST_CASE("serialization") {
    CHECK(serialize(S({})).empty());
    CHECK(serialize(S({"a", "?", "b"})) == "a ? b");
    CHECK(parse_stream("  a ?\tb ") == S({"a", "?", "b"}));
    CHECK(parse_stream("") == S({}));
    CHECK(to_string(S({"0", "L"})) == "⟨0,L⟩");
    CHECK(to_string(S({})) == "⟨⟩");
}

TEST_CASE("stream laws on random streams") {
    std::mt19937 rng(7);
    const std::set<Character> keep{Character("a"), Character("c")};
    for (int i = 0; i < 300; ++i) {
        const Stream s = random_stream(rng, 5);
        const Stream t = random_stream(rng, 5);
        const Stream u = random_stream(rng, 5);

        CHECK(concat(concat(s, t), u) == concat(s, concat(t, u)));
        CHECK(concat(Stream{}, s) == s);
        CHECK(concat(s, Stream{}) == s);
        CHECK(length(concat(s, t)) == length(s) + length(t));
        CHECK(filter(keep, concat(s, t)) == concat(filter(keep, s), filter(keep, t)));
        if (!s.empty()) {
            CHECK(concat(Stream{first(s)}, rest(s)) == s);
        }

        // prefix order
        CHECK(is_prefix(s, s));
        CHECK(is_prefix(s, concat(s, t)));
        if (is_prefix(s, t) && is_prefix(t, s)) {
            CHECK(s == t);
        }
        if (is_prefix(s, t) && is_prefix(t, u)) {
            CHECK(is_prefix(s, u));
        }
        CHECK(parse_stream(serialize(s)) == s);
    }
}
