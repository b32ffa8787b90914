#include "mpa/textio.hpp"

#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace mpa {
namespace {

using Tokens = std::vector<std::string>;

struct Line {
    std::size_t number;
    Tokens tokens;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++number;
        std::string_view raw = text.substr(pos, end - pos);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        std::istringstream in{std::string(raw)};
        Tokens tokens;
        for (std::string tok; in >> tok;) {
            tokens.push_back(std::move(tok));
        }
        if (!tokens.empty()) {
            lines.push_back({number, std::move(tokens)});
        }
        pos = end + 1;
    }
    return lines;
}

[[noreturn]] void fail(std::size_t line, std::string message, std::string token = {}) {
    throw ParseError(SourceDiagnostic{line, std::move(message), std::move(token)});
}

template <class T>
T token_at(const Line& line, const std::string& text) {
    if (!is_valid_token(text)) {
        fail(line.number, "invalid token '" + text + "'", text);
    }
    return T(text);
}

Stream stream_from(const Line& line, Tokens::const_iterator begin, Tokens::const_iterator end) {
    std::vector<Character> items;
    for (auto it = begin; it != end; ++it) {
        items.push_back(token_at<Character>(line, *it));
    }
    return Stream(std::move(items));
}

/// Splits the tokens after the keyword into ';'-separated groups.
std::vector<Tokens> groups_of(const Line& line) {
    std::vector<Tokens> groups(1);
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        if (line.tokens[i] == ";") {
            groups.emplace_back();
        } else {
            groups.back().push_back(line.tokens[i]);
        }
    }
    for (const auto& g : groups) {
        if (g.empty()) {
            fail(line.number, "empty element in '" + line.tokens[0] + "'", line.tokens[0]);
        }
    }
    return groups;
}

// <state> / <out>...
InitialElement initial_from(const Line& line, const Tokens& g) {
    if (g.size() < 2 || g[1] != "/") {
        fail(line.number, "expected '<state> / <output>...'", g.empty() ? "" : g[0]);
    }
    return {token_at<StateId>(line, g[0]), stream_from(line, g.begin() + 2, g.end())};
}

// <src> <char> -> <dst> / <out>...
Transition transition_from(const Line& line, const Tokens& g) {
    if (g.size() < 5 || g[2] != "->" || g[4] != "/") {
        fail(line.number, "expected '<source> <character> -> <target> / <output>...'",
             g.empty() ? "" : g[0]);
    }
    return {token_at<StateId>(line, g[0]), token_at<Character>(line, g[1]),
            token_at<StateId>(line, g[3]), stream_from(line, g.begin() + 5, g.end())};
}

bool is_automaton_keyword(const std::string& k) {
    return k == "automaton" || k == "alphabet" || k == "state" || k == "init" || k == "trans";
}

class AutomatonBuilder {
public:
    explicit AutomatonBuilder(std::size_t fallback_line) : fallback_line_(fallback_line) {}

    void accept(const Line& line) {
        const auto& key = line.tokens[0];
        if (!name_) {
            if (key != "automaton") {
                fail(line.number, "missing automaton header", key);
            }
            if (line.tokens.size() != 2) {
                fail(line.number, "expected 'automaton <name>'", key);
            }
            if (!is_valid_token(line.tokens[1])) {
                fail(line.number, "invalid token '" + line.tokens[1] + "'", line.tokens[1]);
            }
            name_ = line.tokens[1];
            header_line_ = line.number;
            return;
        }
        if (key == "automaton") {
            fail(line.number, "duplicate automaton header", key);
        } else if (key == "alphabet") {
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                alphabet_.insert(token_at<Character>(line, line.tokens[i]));
            }
        } else if (key == "state") {
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                states_.insert(token_at<StateId>(line, line.tokens[i]));
            }
        } else if (key == "init") {
            Tokens g(line.tokens.begin() + 1, line.tokens.end());
            initials_.emplace_back(initial_from(line, g), line.number);
        } else if (key == "trans") {
            Tokens g(line.tokens.begin() + 1, line.tokens.end());
            transitions_.emplace_back(transition_from(line, g), line.number);
        } else {
            fail(line.number, "unknown keyword " + key, key);
        }
    }

    Automaton build() const {
        if (!name_) {
            fail(fallback_line_, "missing automaton header");
        }
        for (const auto& [t, line] : transitions_) {
            check_state(t.source, line);
            check_character(t.input, line);
            check_state(t.target, line);
            check_stream(t.output, line);
        }
        for (const auto& [i, line] : initials_) {
            check_state(i.start, line);
            check_stream(i.initial_output, line);
        }
        std::set<Transition> transitions;
        for (const auto& [t, line] : transitions_) {
            transitions.insert(t);
        }
        std::set<InitialElement> initials;
        for (const auto& [i, line] : initials_) {
            initials.insert(i);
        }
        try {
            return new_automaton(*name_, states_, alphabet_, std::move(transitions),
                                 std::move(initials));
        } catch (const ValidationError& e) {
            fail(header_line_, e.what(), e.offending());
        }
    }

private:
    void check_state(const StateId& s, std::size_t line) const {
        if (!states_.contains(s)) {
            fail(line, "unknown state " + s.name(), s.name());
        }
    }
    void check_character(const Character& m, std::size_t line) const {
        if (!alphabet_.contains(m)) {
            fail(line, "unknown character " + m.name(), m.name());
        }
    }
    void check_stream(const Stream& out, std::size_t line) const {
        for (const auto& c : out) {
            check_character(c, line);
        }
    }

    std::size_t fallback_line_;
    std::size_t header_line_ = 1;
    std::optional<std::string> name_;
    std::set<StateId> states_;
    std::set<Character> alphabet_;
    std::vector<std::pair<Transition, std::size_t>> transitions_;
    std::vector<std::pair<InitialElement, std::size_t>> initials_;
};

std::string join(const Stream& s, char sep) {
    std::string out;
    for (const auto& c : s) {
        if (!out.empty()) {
            out += sep;
        }
        out += c.name();
    }
    return out;
}

std::string slash_output(const Stream& out) {
    return out.empty() ? "/" : "/ " + serialize(out);
}

std::string transition_source(const Transition& t) {
    return t.source.name() + " " + t.input.name() + " -> " + t.target.name() + " " +
           slash_output(t.output);
}

std::string initial_source(const InitialElement& i) {
    return i.start.name() + " " + slash_output(i.initial_output);
}

template <class T, class F>
std::string joined_elements(const std::set<T>& items, F render) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty()) {
            out += " ; ";
        }
        out += render(item);
    }
    return out;
}

} // namespace

ParseError::ParseError(SourceDiagnostic diagnostic)
    : Error("line " + std::to_string(diagnostic.line) + ": " + diagnostic.message),
      diagnostic_(std::move(diagnostic)) {}

Automaton parse_automaton(std::string_view text) {
    AutomatonBuilder builder(1);
    for (const auto& line : split_lines(text)) {
        builder.accept(line);
    }
    return builder.build();
}

std::string render_automaton(const Automaton& a) {
    std::string out = "automaton " + a.name() + "\n";
    out += "alphabet";
    for (const auto& m : a.alphabet()) {
        out += " " + m.name();
    }
    out += "\nstate";
    for (const auto& s : a.states()) {
        out += " " + s.name();
    }
    out += "\n";
    for (const auto& i : a.initials()) {
        out += "init " + initial_source(i) + "\n";
    }
    for (const auto& t : a.transitions()) {
        out += "trans " + transition_source(t) + "\n";
    }
    return out;
}

Transcript parse_transcript(std::string_view text, const SourceLoader& load) {
    const auto lines = split_lines(text);
    if (lines.empty() || lines.front().tokens[0] != "refine") {
        fail(lines.empty() ? 1 : lines.front().number, "missing refine header",
             lines.empty() ? "" : lines.front().tokens[0]);
    }
    const Line& header = lines.front();
    if (header.tokens.size() > 2) {
        fail(header.number, "expected 'refine [<automaton-file>]'", header.tokens[0]);
    }

    std::size_t next = 1;
    std::optional<Automaton> start;
    if (header.tokens.size() == 2) {
        const std::string& path = header.tokens[1];
        std::string source;
        try {
            source = load(path);
        } catch (const std::exception& e) {
            fail(header.number, "cannot read " + path + ": " + e.what(), path);
        }
        try {
            start = parse_automaton(source);
        } catch (const ParseError& e) {
            fail(header.number, "in " + path + ": " + e.what(), path);
        }
    } else {
        AutomatonBuilder builder(header.number);
        while (next < lines.size() && is_automaton_keyword(lines[next].tokens[0])) {
            builder.accept(lines[next++]);
        }
        start = builder.build();
    }

    Transcript t{*start, {}, {}};
    for (; next < lines.size(); ++next) {
        const Line& line = lines[next];
        const auto& key = line.tokens[0];
        if (key == "extend-alphabet") {
            if (!t.steps.empty()) {
                fail(line.number, "extend-alphabet must precede the first step", key);
            }
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                t.alphabet_extension.insert(token_at<Character>(line, line.tokens[i]));
            }
        } else if (key == "remove-init") {
            RemoveInitialsStep step;
            for (const auto& g : groups_of(line)) {
                step.remove.insert(initial_from(line, g));
            }
            t.steps.emplace_back(std::move(step));
        } else if (key == "remove-trans" || key == "add-trans") {
            std::set<Transition> ts;
            for (const auto& g : groups_of(line)) {
                ts.insert(transition_from(line, g));
            }
            if (key == "add-trans") {
                t.steps.emplace_back(AddTransitionsStep{std::move(ts)});
            } else {
                t.steps.emplace_back(RemoveTransitionsStep{std::move(ts)});
            }
        } else if (key == "remove-state" || key == "add-state") {
            std::set<StateId> states;
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                states.insert(token_at<StateId>(line, line.tokens[i]));
            }
            if (states.empty()) {
                fail(line.number, "expected at least one state", key);
            }
            if (key == "add-state") {
                t.steps.emplace_back(AddStatesStep{std::move(states)});
            } else {
                t.steps.emplace_back(RemoveStatesStep{std::move(states)});
            }
        } else if (key == "refine-state") {
            RefineStatesStep step;
            std::size_t i = 1;
            for (; i < line.tokens.size() && line.tokens[i] != "map"; ++i) {
                step.refined_states.insert(token_at<StateId>(line, line.tokens[i]));
            }
            if (i == line.tokens.size()) {
                fail(line.number, "expected 'map' in refine-state", key);
            }
            for (++i; i < line.tokens.size(); ++i) {
                const std::string& entry = line.tokens[i];
                const auto arrow = entry.find("->");
                if (arrow == std::string::npos) {
                    fail(line.number, "expected '<new>-><old>' map entry", entry);
                }
                auto refined = token_at<StateId>(line, entry.substr(0, arrow));
                auto original = token_at<StateId>(line, entry.substr(arrow + 2));
                if (!step.alpha.emplace(refined, original).second) {
                    fail(line.number, "state " + refined.name() + " is mapped twice", entry);
                }
            }
            t.steps.emplace_back(std::move(step));
        } else if (is_automaton_keyword(key)) {
            fail(line.number, "automaton declaration after the start automaton", key);
        } else {
            fail(line.number, "unknown step keyword " + key, key);
        }
    }
    return t;
}

std::string render_transcript(const Transcript& t) {
    std::string out = "refine\n" + render_automaton(t.start);
    if (!t.alphabet_extension.empty()) {
        out += "extend-alphabet";
        for (const auto& m : t.alphabet_extension) {
            out += " " + m.name();
        }
        out += "\n";
    }
    auto state_list = [](const std::set<StateId>& states) {
        std::string s;
        for (const auto& st : states) {
            s += " " + st.name();
        }
        return s;
    };
    for (const auto& step : t.steps) {
        if (const auto* s = std::get_if<RemoveInitialsStep>(&step)) {
            out += "remove-init " + joined_elements(s->remove, initial_source);
        } else if (const auto* s = std::get_if<RemoveTransitionsStep>(&step)) {
            out += "remove-trans " + joined_elements(s->remove, transition_source);
        } else if (const auto* s = std::get_if<AddTransitionsStep>(&step)) {
            out += "add-trans " + joined_elements(s->add, transition_source);
        } else if (const auto* s = std::get_if<RemoveStatesStep>(&step)) {
            out += "remove-state" + state_list(s->remove);
        } else if (const auto* s = std::get_if<AddStatesStep>(&step)) {
            out += "add-state" + state_list(s->add);
        } else if (const auto* s = std::get_if<RefineStatesStep>(&step)) {
            out += "refine-state" + state_list(s->refined_states) + " map";
            for (const auto& [refined, original] : s->alpha) {
                out += " " + refined.name() + "->" + original.name();
            }
        }
        out += "\n";
    }
    return out;
}

std::string render_execution(const Execution& e) {
    std::string out = "init " + e.initial.start.name() + " /";
    if (!e.initial.initial_output.empty()) {
        out += " " + join(e.initial.initial_output, ',');
    }
    for (const auto& step : e.steps) {
        out += " ; " + step.source.name() + " -" + step.input.name() + "/" + join(step.output, ',') +
               "-> " + step.target.name();
    }
    return out;
}

std::string render_output(const OutputResult& r) {
    return r.chaotic ? to_string(r.prefix) + " ^ chaos" : to_string(r.prefix);
}

} // namespace mpa
