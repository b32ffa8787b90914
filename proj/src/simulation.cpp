#include "mpa/refinement.hpp"

#include <algorithm>

namespace mpa {
namespace {

void require_same_alphabet(const Automaton& abstract, const Automaton& concrete) {
    if (abstract.alphabet() != concrete.alphabet()) {
        throw Error("alphabet mismatch between " + abstract.name() + " and " + concrete.name());
    }
}

// Clause (c): a pair left chaotic by the concrete automaton must be chaotic in
// the abstract one too.
bool chaos_matches(const Automaton& abstract, const Automaton& concrete, const StateId& c,
                   const StateId& a) {
    return std::all_of(concrete.alphabet().begin(), concrete.alphabet().end(),
                       [&](const Character& m) {
                           return enabled(concrete, c, m) || !enabled(abstract, a, m);
                       });
}

// Clause (b): every concrete move from c is matched from a, or a is chaotic on it.
bool moves_match(const Automaton& abstract, const Automaton& concrete, const StateId& c,
                 const StateId& a, const SimulationRelation& r) {
    for (const auto& m : concrete.alphabet()) {
        if (!enabled(abstract, a, m)) {
            continue;
        }
        const auto abstract_moves = successors(abstract, a, m);
        for (const auto& move : successors(concrete, c, m)) {
            const bool matched =
                std::any_of(abstract_moves.begin(), abstract_moves.end(), [&](const Successor& s) {
                    return s.output == move.output && r.contains({move.target, s.target});
                });
            if (!matched) {
                return false;
            }
        }
    }
    return true;
}

bool initials_match(const Automaton& abstract, const Automaton& concrete,
                    const SimulationRelation& r) {
    return std::all_of(concrete.initials().begin(), concrete.initials().end(),
                       [&](const InitialElement& ci) {
                           return std::any_of(abstract.initials().begin(),
                                              abstract.initials().end(),
                                              [&](const InitialElement& ai) {
                                                  return ai.initial_output == ci.initial_output &&
                                                         r.contains({ci.start, ai.start});
                                              });
                       });
}

} // namespace

bool is_simulation(const Automaton& abstract, const Automaton& concrete,
                   const SimulationRelation& r) {
    require_same_alphabet(abstract, concrete);
    if (!initials_match(abstract, concrete, r)) {
        return false;
    }
    return std::all_of(r.begin(), r.end(), [&](const auto& pair) {
        const auto& [c, a] = pair;
        return concrete.has_state(c) && abstract.has_state(a) &&
               chaos_matches(abstract, concrete, c, a) && moves_match(abstract, concrete, c, a, r);
    });
}

std::optional<SimulationRelation> find_simulation(const Automaton& abstract,
                                                  const Automaton& concrete) {
    require_same_alphabet(abstract, concrete);
    SimulationRelation r;
    for (const auto& c : concrete.states()) {
        for (const auto& a : abstract.states()) {
            if (chaos_matches(abstract, concrete, c, a)) {
                r.emplace(c, a);
            }
        }
    }
    // Greatest fixpoint: drop pairs whose moves cannot be matched until stable.
    for (bool changed = true; changed;) {
        changed = false;
        for (auto it = r.begin(); it != r.end();) {
            if (!moves_match(abstract, concrete, it->first, it->second, r)) {
                it = r.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }
    if (!initials_match(abstract, concrete, r)) {
        return std::nullopt;
    }
    return r;
}

SimulationRelation compose(const SimulationRelation& lower, const SimulationRelation& upper) {
    SimulationRelation out;
    for (const auto& [c, b] : lower) {
        for (const auto& [b2, a] : upper) {
            if (b == b2) {
                out.emplace(c, a);
            }
        }
    }
    return out;
}

} // namespace mpa
