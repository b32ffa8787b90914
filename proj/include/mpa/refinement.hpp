#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mpa/automaton.hpp"
#include "mpa/semantics.hpp"

namespace mpa {

/// A refinement rule was applied although its side condition does not hold.
class RuleViolation : public Error {
public:
    enum class Condition {
        NotASubset,
        EmptyKeep,
        EnablednessLost,
        AlreadyEnabled,
        ReachableStateDropped,
        NameCollision,
        MapNotTotal,
        MapNotSurjective,
        PolicyDomainMismatch,
    };

    RuleViolation(Condition condition, std::string offending, const std::string& message)
        : Error(message), condition_(condition), offending_(std::move(offending)) {}

    Condition condition() const noexcept { return condition_; }
    const std::string& offending() const noexcept { return offending_; }

private:
    Condition condition_;
    std::string offending_;
};

std::string_view to_string(RuleViolation::Condition c);

/// Table from refined states to the states they refine. Totality and
/// surjectivity are checked when the map is used by refine_states.
using AbstractionMap = std::map<StateId, StateId>;

// Rules. Each returns the refined automaton or throws RuleViolation /
// ValidationError; the argument is never modified.

/// Keeps only the initial elements in @p keep (a nonempty subset of I).
Automaton remove_initials(const Automaton& a, const std::set<InitialElement>& keep);

/// Removes transitions, provided every enabled pair keeps at least one.
Automaton remove_transitions(const Automaton& a, const std::set<Transition>& remove);

/// Adds transitions on pairs that are disabled before the application.
/// Several transitions may target the same freshly enabled pair.
Automaton add_transitions(const Automaton& a, const std::set<Transition>& extra);

/// Restricts the state set to @p keep, which must contain every reachable state.
Automaton remove_states(const Automaton& a, const std::set<StateId>& keep);

/// Adds fresh states without transitions.
Automaton add_states(const Automaton& a, const std::set<StateId>& extra);

/// Replaces the state set by @p refined_states. A transition (s, m, t, out) of
/// the result exists iff (alpha(s), m, alpha(t), out) is a transition of @p a,
/// and likewise for initial elements.
Automaton refine_states(const Automaton& a, const std::set<StateId>& refined_states,
                        const AbstractionMap& alpha);

/// Enlarges the alphabet without touching the transitions, so the new
/// characters are chaotic everywhere. This changes the interface and is not a
/// refinement step.
Automaton extend_alphabet(const Automaton& a, const std::set<Character>& extra);

// Transcripts.

struct RemoveInitialsStep {
    std::set<InitialElement> remove;
};
struct RemoveTransitionsStep {
    std::set<Transition> remove;
};
struct AddTransitionsStep {
    std::set<Transition> add;
};
struct RemoveStatesStep {
    std::set<StateId> remove;
};
struct AddStatesStep {
    std::set<StateId> add;
};
struct RefineStatesStep {
    std::set<StateId> refined_states;
    AbstractionMap alpha;
};

using RefinementStep = std::variant<RemoveInitialsStep, RemoveTransitionsStep, AddTransitionsStep,
                                    RemoveStatesStep, AddStatesStep, RefineStatesStep>;

/// Short rule name ("RemI", "RemT", "AddT", "RemS", "AddS", "RefS").
std::string_view rule_name(const RefinementStep& step);

/// Applies one step to @p a.
Automaton apply_step(const Automaton& a, const RefinementStep& step);

/// A development: an arbitrary start automaton, an optional alphabet
/// extension applied before anything else, and a sequence of rule applications.
struct Transcript {
    Automaton start;
    std::set<Character> alphabet_extension;
    std::vector<RefinementStep> steps;
};

/// Raised by apply_transcript; `index` is the 1-based position of the failing step.
class TranscriptError : public Error {
public:
    TranscriptError(std::size_t index, std::string rule, const Error& cause);

    std::size_t index() const noexcept { return index_; }
    const std::string& rule() const noexcept { return rule_; }
    const std::string& cause() const noexcept { return cause_; }
    std::optional<RuleViolation::Condition> condition() const noexcept { return condition_; }

private:
    std::size_t index_;
    std::string rule_;
    std::string cause_;
    std::optional<RuleViolation::Condition> condition_;
};

struct Replay {
    /// Start automaton after the alphabet extension.
    Automaton start;
    /// Automaton after each step, in order.
    std::vector<Automaton> intermediates;

    const Automaton& final_automaton() const {
        return intermediates.empty() ? start : intermediates.back();
    }
};

Replay apply_transcript(const Transcript& t);

// Semantic inclusion oracle.

inline constexpr std::size_t default_oracle_depth = 5;

struct InclusionCounterexample {
    Stream word;
    OutputResult offending;
};

struct InclusionVerdict {
    bool holds = true;
    std::size_t depth = 0;
    std::optional<InclusionCounterexample> counterexample;
};

/// True iff concrete result @p c is covered by some abstract result in @p abstract.
bool covered(const OutputResult& c, const OutputSet& abstract);

/// Bounded necessary condition for refinement: every output result of
/// @p concrete on every word of length <= @p depth is covered by @p abstract.
/// The first uncovered result (shortest word first) is reported.
InclusionVerdict check_refines_bounded(const Automaton& abstract, const Automaton& concrete,
                                       std::size_t depth = default_oracle_depth);

/// Pairs (concrete state, abstract state).
using SimulationRelation = std::set<std::pair<StateId, StateId>>;

/// Checks the three simulation clauses for @p r.
bool is_simulation(const Automaton& abstract, const Automaton& concrete,
                   const SimulationRelation& r);

/// Greatest simulation of @p concrete by @p abstract, if one matches every
/// initial element. A sufficient condition for refinement.
std::optional<SimulationRelation> find_simulation(const Automaton& abstract,
                                                  const Automaton& concrete);

/// Relational composition: (c, a) for (c, b) in @p lower and (b, a) in @p upper.
SimulationRelation compose(const SimulationRelation& lower, const SimulationRelation& upper);

} // namespace mpa
