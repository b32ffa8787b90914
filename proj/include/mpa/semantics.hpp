#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mpa/automaton.hpp"

namespace mpa {

/// An initial element followed by a chain of transitions whose source and
/// target states line up.
struct Execution {
    InitialElement initial;
    std::vector<Transition> steps;

    /// State the execution currently rests in.
    const StateId& last_state() const {
        return steps.empty() ? initial.start : steps.back().target;
    }
    /// Initial output followed by every step's output.
    Stream output() const;

    friend bool operator==(const Execution&, const Execution&) = default;
    friend auto operator<=>(const Execution&, const Execution&) = default;
};

/// An execution attempt over an input word. A chaotic run stopped at a pair
/// without transitions; its execution covers the consumed prefix of the word.
struct Run {
    Execution execution;
    bool chaotic = false;

    friend bool operator==(const Run&, const Run&) = default;
    friend auto operator<=>(const Run&, const Run&) = default;
};

/// Observable result of feeding a word to an automaton.
///
/// Non-chaotic: `prefix` is the complete output. Chaotic: `prefix` was emitted
/// before the automaton hit a pair without transitions; the result stands for
/// every stream that extends `prefix`.
struct OutputResult {
    Stream prefix;
    bool chaotic = false;

    friend bool operator==(const OutputResult&, const OutputResult&) = default;
    friend auto operator<=>(const OutputResult&, const OutputResult&) = default;
};

using OutputSet = std::set<OutputResult>;

/// Complete executions whose inputs spell exactly @p word, from every initial element.
std::set<Execution> executions(const Automaton& a, const Stream& word);

/// Complete and chaos-truncated runs over @p word, enumerated exhaustively.
std::set<Run> runs(const Automaton& a, const Stream& word);

/// Output results of @p word, computed from the runs.
OutputSet output_set(const Automaton& a, const Stream& word);

/// Depth-bounded unrolling of the stream semantics.
///
/// `children` maps each character to the nodes the automaton may move to; a
/// chaotic node marks a pair without transitions and is never expanded.
struct BehaviorNode {
    StateId state;
    Stream emitted_so_far;
    bool chaotic = false;
    std::vector<std::pair<Character, std::vector<BehaviorNode>>> children;

    /// Child set for @p m, or nullptr when the node was not expanded.
    const std::vector<BehaviorNode>* children_for(const Character& m) const;

    friend bool operator==(const BehaviorNode&, const BehaviorNode&) = default;
};

/// One root per initial element, expanded @p depth levels deep.
std::vector<BehaviorNode> behavior_tree(const Automaton& a, std::size_t depth);

/// Output results of @p word read off a behaviour tree. The word must not be
/// longer than the tree's depth.
OutputSet output_set_from_tree(const std::vector<BehaviorNode>& roots, const Stream& word);

/// A branch along which emitted output shrank or diverged.
struct MonotonicityViolation {
    Stream word;
    Stream earlier;
    Stream later;
};

struct MonotoneCheck {
    bool holds = true;
    std::optional<MonotonicityViolation> counterexample;
};

/// Checks that along every branch of behavior_tree(a, depth) the emitted
/// output only grows in the prefix order.
MonotoneCheck check_monotone(const Automaton& a, std::size_t depth);

/// Same check on an already built tree.
MonotoneCheck check_monotone(const std::vector<BehaviorNode>& roots);

/// Every word over @p alphabet of length at most @p max_length, shortest first
/// and lexicographic within one length.
std::vector<Stream> words_up_to(const std::set<Character>& alphabet, std::size_t max_length);

} // namespace mpa
