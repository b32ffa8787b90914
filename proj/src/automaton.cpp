#include "mpa/automaton.hpp"

#include <deque>

#include "mpa/refinement.hpp"

namespace mpa {
namespace {

void require_state(const std::set<StateId>& states, const StateId& s, const char* where) {
    if (!states.contains(s)) {
        throw ValidationError(ValidationError::Kind::UnknownState, s.name(),
                              std::string("unknown state ") + s.name() + " in " + where);
    }
}

void require_character(const std::set<Character>& alphabet, const Character& m,
                       const char* where) {
    if (!alphabet.contains(m)) {
        throw ValidationError(ValidationError::Kind::UnknownCharacter, m.name(),
                              std::string("unknown character ") + m.name() + " in " + where);
    }
}

void require_stream(const std::set<Character>& alphabet, const Stream& out, const char* where) {
    for (const auto& c : out) {
        require_character(alphabet, c, where);
    }
}

} // namespace

Automaton new_automaton(std::string name, std::set<StateId> states, std::set<Character> alphabet,
                        std::set<Transition> transitions, std::set<InitialElement> initials) {
    if (!is_valid_token(name)) {
        throw ValidationError(ValidationError::Kind::InvalidToken, name,
                              "invalid automaton name '" + name + "'");
    }
    if (states.empty()) {
        throw ValidationError(ValidationError::Kind::EmptyStates, "", "state set is empty");
    }
    if (alphabet.empty()) {
        throw ValidationError(ValidationError::Kind::EmptyAlphabet, "", "alphabet is empty");
    }
    if (initials.empty()) {
        throw ValidationError(ValidationError::Kind::EmptyInitials, "",
                              "set of initial elements is empty");
    }
    for (const auto& t : transitions) {
        require_state(states, t.source, "transition source");
        require_character(alphabet, t.input, "transition input");
        require_state(states, t.target, "transition target");
        require_stream(alphabet, t.output, "transition output");
    }
    for (const auto& i : initials) {
        require_state(states, i.start, "initial element");
        require_stream(alphabet, i.initial_output, "initial output");
    }

    Automaton a;
    a.name_ = std::move(name);
    a.states_ = std::move(states);
    a.alphabet_ = std::move(alphabet);
    a.transitions_ = std::move(transitions);
    a.initials_ = std::move(initials);
    for (const auto& t : a.transitions_) {
        a.index_[{t.source, t.input}].push_back({t.target, t.output});
    }
    return a;
}

bool enabled(const Automaton& a, const StateId& s, const Character& m) {
    require_state(a.states_, s, "enabledness query");
    require_character(a.alphabet_, m, "enabledness query");
    return a.index_.contains({s, m});
}

std::vector<Successor> successors(const Automaton& a, const StateId& s, const Character& m) {
    require_state(a.states_, s, "successor query");
    require_character(a.alphabet_, m, "successor query");
    auto it = a.index_.find({s, m});
    if (it == a.index_.end()) {
        return {};
    }
    return it->second;
}

bool is_total(const Automaton& a) { return missing_pairs(a).empty(); }

std::set<StatePair> missing_pairs(const Automaton& a) {
    std::set<StatePair> missing;
    for (const auto& s : a.states()) {
        for (const auto& m : a.alphabet()) {
            if (!enabled(a, s, m)) {
                missing.emplace(s, m);
            }
        }
    }
    return missing;
}

std::set<StateId> reachable(const Automaton& a) {
    std::set<StateId> seen;
    std::deque<StateId> work;
    for (const auto& i : a.initials()) {
        if (seen.insert(i.start).second) {
            work.push_back(i.start);
        }
    }
    while (!work.empty()) {
        StateId s = work.front();
        work.pop_front();
        for (const auto& m : a.alphabet()) {
            for (const auto& succ : successors(a, s, m)) {
                if (seen.insert(succ.target).second) {
                    work.push_back(succ.target);
                }
            }
        }
    }
    return seen;
}

Automaton complete_with(const Automaton& a, const CompletionPolicy& policy) {
    const auto missing = missing_pairs(a);
    for (const auto& pair : missing) {
        if (!policy.contains(pair)) {
            throw RuleViolation(RuleViolation::Condition::PolicyDomainMismatch,
                                pair.first.name() + " " + pair.second.name(),
                                "completion policy has no entry for missing pair (" +
                                    pair.first.name() + ", " + pair.second.name() + ")");
        }
    }
    std::set<Transition> extra;
    for (const auto& [pair, succ] : policy) {
        if (!missing.contains(pair)) {
            throw RuleViolation(RuleViolation::Condition::PolicyDomainMismatch,
                                pair.first.name() + " " + pair.second.name(),
                                "completion policy entry (" + pair.first.name() + ", " +
                                    pair.second.name() + ") is not a missing pair");
        }
        extra.insert({pair.first, pair.second, succ.target, succ.output});
    }
    return add_transitions(a, extra);
}

Automaton renamed(const Automaton& a, std::string name) {
    return new_automaton(std::move(name), a.states(), a.alphabet(), a.transitions(),
                         a.initials());
}

} // namespace mpa
