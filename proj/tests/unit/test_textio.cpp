#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "mpa/catalog.hpp"
#include "mpa/textio.hpp"
#include "support/random_automaton.hpp"

using namespace mpa;

namespace {

StateId st(const char* n) { return StateId(n); }
Character ch(const char* n) { return Character(n); }
Stream S(std::initializer_list<std::string_view> names) { return Stream::of(names); }

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

SourceDiagnostic diagnose(std::string_view text) {
    try {
        (void)parse_automaton(text);
    } catch (const ParseError& e) {
        return e.diagnostic();
    }
    FAIL("expected a parse error");
    return {};
}

SourceDiagnostic diagnose_transcript(std::string_view text, const SourceLoader& load = {}) {
    try {
        (void)parse_transcript(text, load);
    } catch (const ParseError& e) {
        return e.diagnostic();
    }
    FAIL("expected a parse error");
    return {};
}

const char* parity_source = R"(# parity
automaton parity
alphabet 0 L ?
state even odd

init even /
trans even 0 -> even /
trans even L -> odd /
trans even ? -> even / 0
trans odd 0 -> odd /     # stays
trans odd L -> even /
trans odd ? -> odd / L
)";

} // namespace

TEST_CASE("parse the parity automaton") {
    CHECK(parse_automaton(parity_source) == catalog::parity());
}

TEST_CASE("declarations may repeat and merge") {
    const Automaton a = parse_automaton(R"(automaton x
alphabet a
alphabet b a
state p
state q p
init p / a b
init p / a b
trans p a -> q / b
)");
    CHECK(a.alphabet() == std::set<Character>{ch("a"), ch("b")});
    CHECK(a.states() == std::set<StateId>{st("p"), st("q")});
    CHECK(a.initials().size() == 1);
    CHECK(a.initials().begin()->initial_output == S({"a", "b"}));
    CHECK(a.transitions().size() == 1);
}

TEST_CASE("automaton diagnostics") {
    SUBCASE("unknown target state") {
        const auto d = diagnose("automaton p\nalphabet 0\nstate even\ninit even /\ntrans even 0 -> nowhere /\n");
        CHECK(d.line == 5);
        CHECK(d.message == "unknown state nowhere");
        CHECK(d.offending_token == "nowhere");
    }
    SUBCASE("unknown character") {
        const auto d = diagnose("automaton p\nalphabet 0\nstate s\ninit s /\ntrans s 1 -> s /\n");
        CHECK(d.line == 5);
        CHECK(d.offending_token == "1");
    }
    SUBCASE("unknown output character") {
        const auto d = diagnose("automaton p\nalphabet 0\nstate s\ninit s / 7\n");
        CHECK(d.line == 4);
        CHECK(d.offending_token == "7");
    }
    SUBCASE("empty text") {
        const auto d = diagnose("");
        CHECK(d.line == 1);
        CHECK(d.message == "missing automaton header");
    }
    SUBCASE("header not first") {
        const auto d = diagnose("\n# c\nstate s\nautomaton p\n");
        CHECK(d.line == 3);
        CHECK(d.message == "missing automaton header");
    }
    SUBCASE("duplicate header") {
        CHECK(diagnose("automaton p\nautomaton q\n").line == 2);
    }
    SUBCASE("unknown keyword") {
        const auto d = diagnose("automaton p\nalphabet a\nstate s\ninit s /\nfoo bar\n");
        CHECK(d.line == 5);
        CHECK(d.offending_token == "foo");
    }
    SUBCASE("malformed transition") {
        CHECK(diagnose("automaton p\nalphabet a\nstate s\ninit s /\ntrans s a s /\n").line == 5);
        CHECK(diagnose("automaton p\nalphabet a\nstate s\ninit s /\ntrans s a -> s\n").line == 5);
    }
    SUBCASE("missing initial elements") {
        CHECK(diagnose("automaton p\nalphabet a\nstate s\n").line == 1);
    }
    SUBCASE("empty alphabet") {
        CHECK_THROWS_AS((void)parse_automaton("automaton p\nstate s\ninit s /\n"), ParseError);
    }
}

TEST_CASE("render is canonical") {
    const std::string text = render_automaton(catalog::parity());
    CHECK(text ==
          "automaton parity\n"
          "alphabet 0 ? L\n"
          "state even odd\n"
          "init even /\n"
          "trans even 0 -> even /\n"
          "trans even ? -> even / 0\n"
          "trans even L -> odd /\n"
          "trans odd 0 -> odd /\n"
          "trans odd ? -> odd / L\n"
          "trans odd L -> even /\n");
}

TEST_CASE("round trip on random automata") {
    std::mt19937 rng(59);
    for (int i = 0; i < 300; ++i) {
        const Automaton a = testing::random_automaton(rng);
        const std::string text = render_automaton(a);
        const Automaton back = parse_automaton(text);
        CHECK(back == a);
        CHECK(render_automaton(back) == text);
    }
}

TEST_CASE("render_execution and render_output") {
    const Automaton p = catalog::parity();
    const auto exs = executions(p, S({"L", "?"}));
    REQUIRE(exs.size() == 1);
    CHECK(render_execution(*exs.begin()) == "init even / ; even -L/-> odd ; odd -?/L-> odd");
    CHECK(render_output({S({"a", "b"}), false}) == "⟨a,b⟩");
    CHECK(render_output({S({}), true}) == "⟨⟩ ^ chaos");
}

TEST_CASE("parse the figure transcript") {
    const SourceLoader load = [](const std::string& path) {
        CHECK(path == "figure_step1.mpa");
        return render_automaton(catalog::figure_start());
    };
    const std::string text = R"(refine figure_step1.mpa
add-state Error
add-trans Selected deselect -> Deselected / ; Deselected deselect -> Error / ; Deselected deselect -> Deselected /
remove-trans Deselected deselect -> Error /
remove-state Error
remove-init Deselected /
)";
    const Transcript t = parse_transcript(text, load);
    CHECK(t.steps.size() == 5);
    CHECK(t.alphabet_extension.empty());
    const Transcript expected = catalog::figure_transcript();
    CHECK(t.start == expected.start);
    REQUIRE(t.steps.size() == expected.steps.size());
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        CHECK(rule_name(t.steps[i]) == rule_name(expected.steps[i]));
    }
    CHECK(apply_transcript(t).final_automaton() == apply_transcript(expected).final_automaton());
}

TEST_CASE("transcript round trip") {
    for (const Transcript& t : {catalog::figure_transcript(), catalog::figure2d_transcript()}) {
        const std::string text = render_transcript(t);
        const Transcript back = parse_transcript(text, {});
        CHECK(back.start == t.start);
        CHECK(back.alphabet_extension == t.alphabet_extension);
        CHECK(back.steps.size() == t.steps.size());
        CHECK(apply_transcript(back).final_automaton() == apply_transcript(t).final_automaton());
        CHECK(render_transcript(back) == text);
    }
}

TEST_CASE("inline start automaton") {
    const Transcript t = parse_transcript(R"(refine
automaton tiny
alphabet a
state s
init s /
add-trans s a -> s / a
)",
                                          {});
    CHECK(t.start.name() == "tiny");
    REQUIRE(t.steps.size() == 1);
    CHECK(is_total(apply_transcript(t).final_automaton()));
}

TEST_CASE("refine-state parses and replays") {
    const std::string head = "refine\nautomaton t\nalphabet a\nstate p q\ninit p /\ntrans p a -> q /\n";
    const Transcript ok = parse_transcript(head + "refine-state p1 p2 q1 map p1->p p2->p q1->q\n", {});
    const Automaton fin = apply_transcript(ok).final_automaton();
    CHECK(fin.states().size() == 3);
    CHECK(fin.transitions().size() == 2);

    // Parses, but the map misses q, so replay rejects it.
    const Transcript partial = parse_transcript(head + "refine-state p1 map p1->p\n", {});
    try {
        (void)apply_transcript(partial);
        FAIL("expected rejection");
    } catch (const TranscriptError& e) {
        CHECK(e.index() == 1);
        CHECK(e.rule() == "RefS");
    }

    const auto twice = diagnose_transcript(head + "refine-state p1 q1 map p1->p p1->q q1->q\n");
    CHECK(twice.line == 7);
    CHECK(diagnose_transcript(head + "refine-state p1 p1-p\n").line == 7);
}

TEST_CASE("transcript diagnostics") {
    const std::string head = "refine\nautomaton t\nalphabet a\nstate p\ninit p /\n";
    SUBCASE("unknown keyword") {
        const auto d = diagnose_transcript(head + "frobnicate p\n");
        CHECK(d.line == 6);
        CHECK(d.message == "unknown step keyword frobnicate");
    }
    SUBCASE("late extension") {
        const auto d = diagnose_transcript(head + "add-state q\nextend-alphabet b\n");
        CHECK(d.line == 7);
    }
    SUBCASE("missing header") {
        CHECK(diagnose_transcript("add-state q\n").line == 1);
        CHECK(diagnose_transcript("").line == 1);
    }
    SUBCASE("loader failure") {
        const auto d = diagnose_transcript("refine missing.mpa\n", [](const std::string&) -> std::string {
            throw Error("no such file");
        });
        CHECK(d.line == 1);
        CHECK(d.offending_token == "missing.mpa");
    }
    SUBCASE("empty element") {
        CHECK(diagnose_transcript(head + "add-trans p a -> p / ;\n").line == 6);
    }
    SUBCASE("remove-state without states") {
        CHECK(diagnose_transcript(head + "remove-state\n").line == 6);
    }
}

TEST_CASE("export_dot") {
    const std::string dot = export_dot(catalog::parity());
    CHECK(dot.starts_with("digraph \"parity\" {\n"));
    CHECK(dot.ends_with("}\n"));
    CHECK(count(dot, "  \"even\";\n") == 1);
    CHECK(count(dot, "  \"odd\";\n") == 1);
    CHECK(count(dot, "[shape=point, style=invis]") == 1);
    CHECK(count(dot, "\"#init0\" -> \"even\" [label=\"/\"]") == 1);
    CHECK(count(dot, " -> ") == 7);
    CHECK(count(dot, "\"even\" -> \"even\" [label=\"?/0\"]") == 1);
    CHECK(count(dot, "\"odd\" -> \"even\" [label=\"L/\"]") == 1);

    const Automaton lone = new_automaton("lone", {st("s")}, {ch("a")}, {}, {{st("s"), S({"a", "a"})}});
    const std::string lone_dot = export_dot(lone);
    CHECK(count(lone_dot, " -> ") == 1);
    CHECK(count(lone_dot, "[label=\"/a,a\"]") == 1);
}
