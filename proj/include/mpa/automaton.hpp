#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mpa/stream.hpp"

namespace mpa {

/// One element of the transition relation: in state `source`, reading `input`,
/// the automaton may move to `target` while emitting `output`.
struct Transition {
    StateId source;
    Character input;
    StateId target;
    Stream output;

    friend bool operator==(const Transition&, const Transition&) = default;
    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// A start state together with the output emitted before any input arrives.
struct InitialElement {
    StateId start;
    Stream initial_output;

    friend bool operator==(const InitialElement&, const InitialElement&) = default;
    friend auto operator<=>(const InitialElement&, const InitialElement&) = default;
};

/// (state, character) pair, used for enabledness queries and missing-pair reports.
using StatePair = std::pair<StateId, Character>;

/// A successor of a (state, character) pair: target state and emitted output.
struct Successor {
    StateId target;
    Stream output;

    friend bool operator==(const Successor&, const Successor&) = default;
    friend auto operator<=>(const Successor&, const Successor&) = default;
};

/// Message processing automaton: states, characters, transition relation and
/// initial elements. Immutable once built; every instance satisfies all
/// membership and nonemptiness invariants.
///
/// A (state, character) pair without any transition is chaotic: the automaton
/// allows arbitrary behaviour from that point on.
class Automaton {
public:
    const std::string& name() const noexcept { return name_; }
    const std::set<StateId>& states() const noexcept { return states_; }
    const std::set<Character>& alphabet() const noexcept { return alphabet_; }
    const std::set<Transition>& transitions() const noexcept { return transitions_; }
    const std::set<InitialElement>& initials() const noexcept { return initials_; }

    bool has_state(const StateId& s) const { return states_.contains(s); }
    bool has_character(const Character& m) const { return alphabet_.contains(m); }

    friend bool operator==(const Automaton& a, const Automaton& b) {
        return a.name_ == b.name_ && a.states_ == b.states_ && a.alphabet_ == b.alphabet_ &&
               a.transitions_ == b.transitions_ && a.initials_ == b.initials_;
    }

private:
    friend Automaton new_automaton(std::string name, std::set<StateId> states,
                                   std::set<Character> alphabet, std::set<Transition> transitions,
                                   std::set<InitialElement> initials);
    friend std::vector<Successor> successors(const Automaton& a, const StateId& s,
                                             const Character& m);
    friend bool enabled(const Automaton& a, const StateId& s, const Character& m);

    Automaton() = default;

    std::string name_;
    std::set<StateId> states_;
    std::set<Character> alphabet_;
    std::set<Transition> transitions_;
    std::set<InitialElement> initials_;
    std::map<StatePair, std::vector<Successor>> index_;
};

/// Validates the inputs and builds an automaton. This is how every development
/// starts: an arbitrary automaton is always a legal starting point.
///
/// Throws ValidationError naming the first violated invariant.
Automaton new_automaton(std::string name, std::set<StateId> states, std::set<Character> alphabet,
                        std::set<Transition> transitions, std::set<InitialElement> initials);

/// True iff some transition leaves @p s on @p m. Throws on unknown state/character.
bool enabled(const Automaton& a, const StateId& s, const Character& m);

/// All (target, output) pairs with (s, m, target, output) in the relation, in canonical order.
std::vector<Successor> successors(const Automaton& a, const StateId& s, const Character& m);

bool is_total(const Automaton& a);

/// Every (state, character) pair without a transition, in canonical order.
std::set<StatePair> missing_pairs(const Automaton& a);

/// Least set containing every start state and closed under transition targets.
std::set<StateId> reachable(const Automaton& a);

/// Choice of target and output for a missing pair.
using CompletionPolicy = std::map<StatePair, Successor>;

/// Totalizes @p a by adding one transition per missing pair as chosen by @p policy.
///
/// The policy domain must equal missing_pairs(a); a mismatch raises
/// RuleViolation(PolicyDomainMismatch). The result equals add_transitions with
/// the induced transitions.
Automaton complete_with(const Automaton& a, const CompletionPolicy& policy);

/// Copy of @p a with a different name.
Automaton renamed(const Automaton& a, std::string name);

} // namespace mpa
