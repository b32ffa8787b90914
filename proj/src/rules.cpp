#include "mpa/refinement.hpp"

#include <algorithm>

namespace mpa {
namespace {

std::string describe(const Transition& t) {
    std::string out = t.source.name() + " " + t.input.name() + " -> " + t.target.name() + " /";
    if (!t.output.empty()) {
        out += " " + serialize(t.output);
    }
    return out;
}

std::string describe(const InitialElement& i) {
    std::string out = i.start.name() + " /";
    if (!i.initial_output.empty()) {
        out += " " + serialize(i.initial_output);
    }
    return out;
}

} // namespace

std::string_view to_string(RuleViolation::Condition c) {
    using C = RuleViolation::Condition;
    switch (c) {
    case C::NotASubset: return "not-a-subset";
    case C::EmptyKeep: return "empty-keep";
    case C::EnablednessLost: return "enabledness-violation";
    case C::AlreadyEnabled: return "already-enabled";
    case C::ReachableStateDropped: return "reachable-state-dropped";
    case C::NameCollision: return "name-collision";
    case C::MapNotTotal: return "map-not-total";
    case C::MapNotSurjective: return "map-not-surjective";
    case C::PolicyDomainMismatch: return "policy-domain-mismatch";
    }
    return "unknown";
}

Automaton remove_initials(const Automaton& a, const std::set<InitialElement>& keep) {
    for (const auto& i : keep) {
        if (!a.initials().contains(i)) {
            throw RuleViolation(RuleViolation::Condition::NotASubset, describe(i),
                                "initial element (" + describe(i) + ") is not an initial element of " +
                                    a.name());
        }
    }
    if (keep.empty()) {
        throw RuleViolation(RuleViolation::Condition::EmptyKeep, "",
                            "removing every initial element leaves no behaviour");
    }
    return new_automaton(a.name(), a.states(), a.alphabet(), a.transitions(), keep);
}

Automaton remove_transitions(const Automaton& a, const std::set<Transition>& remove) {
    for (const auto& t : remove) {
        if (!a.transitions().contains(t)) {
            throw RuleViolation(RuleViolation::Condition::NotASubset, describe(t),
                                "transition " + describe(t) + " is not a transition of " + a.name());
        }
    }
    std::set<Transition> kept;
    std::set_difference(a.transitions().begin(), a.transitions().end(), remove.begin(),
                        remove.end(), std::inserter(kept, kept.end()));
    for (const auto& t : remove) {
        const bool survives = std::any_of(kept.begin(), kept.end(), [&](const Transition& k) {
            return k.source == t.source && k.input == t.input;
        });
        if (!survives) {
            const std::string pair = t.source.name() + " " + t.input.name();
            throw RuleViolation(RuleViolation::Condition::EnablednessLost, pair,
                                "pair (" + t.source.name() + ", " + t.input.name() +
                                    ") would lose its last transition");
        }
    }
    return new_automaton(a.name(), a.states(), a.alphabet(), std::move(kept), a.initials());
}

Automaton add_transitions(const Automaton& a, const std::set<Transition>& extra) {
    std::set<Transition> all = a.transitions();
    for (const auto& t : extra) {
        if (a.has_state(t.source) && a.has_character(t.input) && enabled(a, t.source, t.input)) {
            const std::string pair = t.source.name() + " " + t.input.name();
            throw RuleViolation(RuleViolation::Condition::AlreadyEnabled, pair,
                                "pair (" + t.source.name() + ", " + t.input.name() +
                                    ") already has a transition");
        }
        all.insert(t);
    }
    // Membership of the new transitions is checked by the constructor.
    return new_automaton(a.name(), a.states(), a.alphabet(), std::move(all), a.initials());
}

Automaton remove_states(const Automaton& a, const std::set<StateId>& keep) {
    for (const auto& s : keep) {
        if (!a.has_state(s)) {
            throw RuleViolation(RuleViolation::Condition::NotASubset, s.name(),
                                "state " + s.name() + " is not a state of " + a.name());
        }
    }
    for (const auto& s : reachable(a)) {
        if (!keep.contains(s)) {
            throw RuleViolation(RuleViolation::Condition::ReachableStateDropped, s.name(),
                                "state " + s.name() + " is reachable and cannot be removed");
        }
    }
    std::set<Transition> kept;
    for (const auto& t : a.transitions()) {
        if (keep.contains(t.source) && keep.contains(t.target)) {
            kept.insert(t);
        }
    }
    return new_automaton(a.name(), keep, a.alphabet(), std::move(kept), a.initials());
}

Automaton add_states(const Automaton& a, const std::set<StateId>& extra) {
    std::set<StateId> states = a.states();
    for (const auto& s : extra) {
        if (!states.insert(s).second) {
            throw RuleViolation(RuleViolation::Condition::NameCollision, s.name(),
                                "state " + s.name() + " already exists");
        }
    }
    return new_automaton(a.name(), std::move(states), a.alphabet(), a.transitions(), a.initials());
}

Automaton refine_states(const Automaton& a, const std::set<StateId>& refined_states,
                        const AbstractionMap& alpha) {
    for (const auto& s : refined_states) {
        if (!alpha.contains(s)) {
            throw RuleViolation(RuleViolation::Condition::MapNotTotal, s.name(),
                                "abstraction map has no image for refined state " + s.name());
        }
    }
    std::set<StateId> image;
    for (const auto& [refined, original] : alpha) {
        if (!refined_states.contains(refined)) {
            throw RuleViolation(RuleViolation::Condition::MapNotTotal, refined.name(),
                                "abstraction map entry " + refined.name() +
                                    " is not among the refined states");
        }
        if (!a.has_state(original)) {
            throw ValidationError(ValidationError::Kind::UnknownState, original.name(),
                                  "abstraction map targets unknown state " + original.name());
        }
        image.insert(original);
    }
    for (const auto& s : a.states()) {
        if (!image.contains(s)) {
            throw RuleViolation(RuleViolation::Condition::MapNotSurjective, s.name(),
                                "state " + s.name() + " has no preimage under the abstraction map");
        }
    }

    std::map<StateId, std::vector<StateId>> preimage;
    for (const auto& [refined, original] : alpha) {
        preimage[original].push_back(refined);
    }
    std::set<Transition> transitions;
    for (const auto& t : a.transitions()) {
        for (const auto& s : preimage[t.source]) {
            for (const auto& u : preimage[t.target]) {
                transitions.insert({s, t.input, u, t.output});
            }
        }
    }
    std::set<InitialElement> initials;
    for (const auto& i : a.initials()) {
        for (const auto& s : preimage[i.start]) {
            initials.insert({s, i.initial_output});
        }
    }
    return new_automaton(a.name(), refined_states, a.alphabet(), std::move(transitions),
                         std::move(initials));
}

Automaton extend_alphabet(const Automaton& a, const std::set<Character>& extra) {
    std::set<Character> alphabet = a.alphabet();
    for (const auto& m : extra) {
        if (!alphabet.insert(m).second) {
            throw RuleViolation(RuleViolation::Condition::NameCollision, m.name(),
                                "character " + m.name() + " already belongs to the alphabet");
        }
    }
    return new_automaton(a.name(), a.states(), std::move(alphabet), a.transitions(), a.initials());
}

} // namespace mpa
