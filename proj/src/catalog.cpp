#include "mpa/catalog.hpp"

#include <string>
#include <vector>

namespace mpa::catalog {
namespace {

StateId st(const char* name) { return StateId(name); }
Character ch(const char* name) { return Character(name); }

Transition silent(const char* source, const char* input, const char* target) {
    return {st(source), ch(input), st(target), {}};
}

std::string buffer_state(const std::vector<Character>& contents) {
    std::string name = "[";
    for (std::size_t i = 0; i < contents.size(); ++i) {
        if (i > 0) {
            name += ',';
        }
        name += contents[i].name();
    }
    return name + "]";
}

} // namespace

Automaton parity() {
    const Character zero = ch("0"), one = ch("L"), query = ch("?");
    const StateId even = st("even"), odd = st("odd");
    return new_automaton("parity", {even, odd}, {zero, one, query},
                         {
                             {even, zero, even, {}},
                             {even, one, odd, {}},
                             {even, query, even, Stream{zero}},
                             {odd, zero, odd, {}},
                             {odd, one, even, {}},
                             {odd, query, odd, Stream{one}},
                         },
                         {{even, {}}});
}

Automaton bounded_buffer(const std::set<Character>& data, std::size_t capacity) {
    const Character query = ch("?");
    if (data.empty() || capacity == 0) {
        throw Error("bounded buffer needs nonempty data and capacity >= 1");
    }
    if (data.contains(query)) {
        throw Error("bounded buffer data must not contain '?'");
    }

    // Breadth-first over buffer contents up to the capacity.
    std::vector<std::vector<Character>> words{{}};
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i].size() < capacity) {
            for (const auto& d : data) {
                auto longer = words[i];
                longer.push_back(d);
                words.push_back(std::move(longer));
            }
        }
    }

    std::set<StateId> states;
    std::set<Transition> transitions;
    for (const auto& w : words) {
        const StateId here(buffer_state(w));
        states.insert(here);
        if (w.size() < capacity) {
            for (const auto& d : data) {
                auto longer = w;
                longer.push_back(d);
                transitions.insert({here, d, StateId(buffer_state(longer)), {}});
            }
        }
        if (!w.empty()) {
            const std::vector<Character> tail(w.begin() + 1, w.end());
            transitions.insert({here, query, StateId(buffer_state(tail)), Stream{w.front()}});
        }
    }
    std::set<Character> alphabet = data;
    alphabet.insert(query);
    return new_automaton("buffer", std::move(states), std::move(alphabet), std::move(transitions),
                         {{StateId("[]"), {}}});
}

Automaton figure_start() {
    return new_automaton("figure", {st("Selected"), st("Deselected")}, {ch("select"), ch("deselect")},
                         {silent("Deselected", "select", "Selected")},
                         {{st("Selected"), {}}, {st("Deselected"), {}}});
}

Transcript figure_transcript() {
    Transcript t{figure_start(), {}, {}};
    t.steps.emplace_back(AddStatesStep{{st("Error")}});
    t.steps.emplace_back(AddTransitionsStep{{
        silent("Selected", "deselect", "Deselected"),
        silent("Deselected", "deselect", "Error"),
        silent("Deselected", "deselect", "Deselected"),
    }});
    t.steps.emplace_back(RemoveTransitionsStep{{silent("Deselected", "deselect", "Error")}});
    t.steps.emplace_back(RemoveStatesStep{{st("Error")}});
    t.steps.emplace_back(RemoveInitialsStep{{{st("Deselected"), {}}}});
    return t;
}

Transcript figure2d_transcript() {
    Transcript t{apply_transcript(figure_transcript()).final_automaton(), {ch("fill"), ch("empty")},
                 {}};
    t.steps.emplace_back(AddTransitionsStep{{
        silent("Selected", "fill", "Selected"),
        silent("Selected", "empty", "Selected"),
    }});
    t.steps.emplace_back(RefineStatesStep{
        {st("SelFilled"), st("SelEmpty"), st("Deselected")},
        {{st("SelFilled"), st("Selected")},
         {st("SelEmpty"), st("Selected")},
         {st("Deselected"), st("Deselected")}},
    });
    t.steps.emplace_back(RemoveTransitionsStep{{
        silent("SelFilled", "fill", "SelEmpty"),
        silent("SelEmpty", "fill", "SelEmpty"),
        silent("SelFilled", "empty", "SelFilled"),
        silent("SelEmpty", "empty", "SelFilled"),
    }});
    t.steps.emplace_back(RemoveInitialsStep{{{st("SelFilled"), {}}}});
    return t;
}

} // namespace mpa::catalog
