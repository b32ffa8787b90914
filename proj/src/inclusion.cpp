#include "mpa/refinement.hpp"

#include <algorithm>

namespace mpa {

bool covered(const OutputResult& c, const OutputSet& abstract) {
    return std::any_of(abstract.begin(), abstract.end(), [&](const OutputResult& a) {
        if (a.chaotic) {
            return is_prefix(a.prefix, c.prefix);
        }
        return !c.chaotic && a.prefix == c.prefix;
    });
}

InclusionVerdict check_refines_bounded(const Automaton& abstract, const Automaton& concrete,
                                       std::size_t depth) {
    if (abstract.alphabet() != concrete.alphabet()) {
        throw Error("alphabet mismatch between " + abstract.name() + " and " + concrete.name());
    }
    InclusionVerdict verdict{true, depth, std::nullopt};
    for (const auto& word : words_up_to(abstract.alphabet(), depth)) {
        const OutputSet allowed = output_set(abstract, word);
        for (const auto& result : output_set(concrete, word)) {
            if (!covered(result, allowed)) {
                verdict.holds = false;
                verdict.counterexample = InclusionCounterexample{word, result};
                return verdict;
            }
        }
    }
    return verdict;
}

} // namespace mpa
