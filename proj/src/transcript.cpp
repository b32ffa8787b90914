#include "mpa/refinement.hpp"

#include <algorithm>

namespace mpa {
namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

template <class T>
std::set<T> without(const std::set<T>& all, const std::set<T>& drop) {
    std::set<T> out;
    std::set_difference(all.begin(), all.end(), drop.begin(), drop.end(),
                        std::inserter(out, out.end()));
    return out;
}

std::string name_of(const StateId& s) { return s.name(); }

std::string name_of(const InitialElement& i) {
    std::string out = i.start.name() + " /";
    if (!i.initial_output.empty()) {
        out += " " + serialize(i.initial_output);
    }
    return out;
}

template <class T>
void require_subset(const std::set<T>& part, const std::set<T>& whole, const char* what) {
    for (const auto& x : part) {
        if (!whole.contains(x)) {
            throw RuleViolation(RuleViolation::Condition::NotASubset, name_of(x),
                                std::string(what) + " " + name_of(x) + " to remove does not exist");
        }
    }
}

} // namespace

std::string_view rule_name(const RefinementStep& step) {
    return std::visit(overloaded{
                          [](const RemoveInitialsStep&) { return std::string_view("RemI"); },
                          [](const RemoveTransitionsStep&) { return std::string_view("RemT"); },
                          [](const AddTransitionsStep&) { return std::string_view("AddT"); },
                          [](const RemoveStatesStep&) { return std::string_view("RemS"); },
                          [](const AddStatesStep&) { return std::string_view("AddS"); },
                          [](const RefineStatesStep&) { return std::string_view("RefS"); },
                      },
                      step);
}

Automaton apply_step(const Automaton& a, const RefinementStep& step) {
    return std::visit(
        overloaded{
            [&](const RemoveInitialsStep& s) {
                require_subset(s.remove, a.initials(), "initial element");
                return remove_initials(a, without(a.initials(), s.remove));
            },
            [&](const RemoveTransitionsStep& s) { return remove_transitions(a, s.remove); },
            [&](const AddTransitionsStep& s) { return add_transitions(a, s.add); },
            [&](const RemoveStatesStep& s) {
                require_subset(s.remove, a.states(), "state");
                return remove_states(a, without(a.states(), s.remove));
            },
            [&](const AddStatesStep& s) { return add_states(a, s.add); },
            [&](const RefineStatesStep& s) { return refine_states(a, s.refined_states, s.alpha); },
        },
        step);
}

TranscriptError::TranscriptError(std::size_t index, std::string rule, const Error& cause)
    : Error("step " + std::to_string(index) + " (" + rule + "): " + cause.what()),
      index_(index), rule_(std::move(rule)), cause_(cause.what()) {
    if (const auto* violation = dynamic_cast<const RuleViolation*>(&cause)) {
        condition_ = violation->condition();
    }
}

Replay apply_transcript(const Transcript& t) {
    Replay replay{t.start, {}};
    if (!t.alphabet_extension.empty()) {
        try {
            replay.start = extend_alphabet(t.start, t.alphabet_extension);
        } catch (const Error& e) {
            throw TranscriptError(0, "extend-alphabet", e);
        }
    }
    const Automaton* current = &replay.start;
    replay.intermediates.reserve(t.steps.size());
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        try {
            replay.intermediates.push_back(apply_step(*current, t.steps[i]));
        } catch (const Error& e) {
            throw TranscriptError(i + 1, std::string(rule_name(t.steps[i])), e);
        }
        current = &replay.intermediates.back();
    }
    return replay;
}

} // namespace mpa
