#pragma once

// Reference computations used as test oracles. They do not go through the
// library's execution enumeration or behaviour trees.

#include <deque>
#include <set>
#include <utility>

#include "mpa/automaton.hpp"
#include "mpa/semantics.hpp"

namespace mpa::testing {

/// Output results via a deduplicated frontier of (state, output) configurations,
/// reading transitions straight from the relation.
inline OutputSet frontier_output_set(const Automaton& a, const Stream& word) {
    std::set<std::pair<StateId, Stream>> frontier;
    for (const auto& i : a.initials()) {
        frontier.emplace(i.start, i.initial_output);
    }
    OutputSet out;
    for (const auto& m : word) {
        std::set<std::pair<StateId, Stream>> next;
        for (const auto& [s, emitted] : frontier) {
            bool any = false;
            for (const auto& t : a.transitions()) {
                if (t.source == s && t.input == m) {
                    any = true;
                    next.emplace(t.target, concat(emitted, t.output));
                }
            }
            if (!any) {
                out.insert({emitted, true});
            }
        }
        frontier = std::move(next);
    }
    for (const auto& [s, emitted] : frontier) {
        out.insert({emitted, false});
    }
    return out;
}

/// Expected result of the FIFO buffer on @p word, from a plain queue model.
inline OutputResult fifo_model(const Stream& word, std::size_t capacity) {
    std::deque<Character> queue;
    std::vector<Character> emitted;
    for (const auto& c : word) {
        if (c.name() == "?") {
            if (queue.empty()) {
                return {Stream(emitted), true};
            }
            emitted.push_back(queue.front());
            queue.pop_front();
        } else {
            if (queue.size() == capacity) {
                return {Stream(emitted), true};
            }
            queue.push_back(c);
        }
    }
    return {Stream(emitted), false};
}

} // namespace mpa::testing
