#include "mpa/semantics.hpp"

#include <algorithm>
#include <tuple>

namespace mpa {
namespace {

void require_word(const Automaton& a, const Stream& word) {
    for (const auto& c : word) {
        if (!a.has_character(c)) {
            throw ValidationError(ValidationError::Kind::UnknownCharacter, c.name(),
                                  "unknown character " + c.name() + " in input word");
        }
    }
}

void extend_runs(const Automaton& a, const Stream& word, Execution& current,
                 std::set<Run>& out) {
    const std::size_t pos = current.steps.size();
    if (pos == word.size()) {
        out.insert({current, false});
        return;
    }
    const StateId from = current.last_state();
    const auto next = successors(a, from, word[pos]);
    if (next.empty()) {
        out.insert({current, true});
        return;
    }
    for (const auto& succ : next) {
        current.steps.push_back({from, word[pos], succ.target, succ.output});
        extend_runs(a, word, current, out);
        current.steps.pop_back();
    }
}

BehaviorNode expand(const Automaton& a, StateId state, Stream emitted, std::size_t depth) {
    BehaviorNode node{std::move(state), std::move(emitted), false, {}};
    if (depth == 0) {
        return node;
    }
    for (const auto& m : a.alphabet()) {
        std::vector<BehaviorNode> kids;
        const auto next = successors(a, node.state, m);
        if (next.empty()) {
            kids.push_back({node.state, node.emitted_so_far, true, {}});
        } else {
            // Distinct successors may still reach the same (state, output)
            // configuration; their subtrees coincide.
            std::set<std::pair<StateId, Stream>> configs;
            for (const auto& succ : next) {
                configs.emplace(succ.target, concat(node.emitted_so_far, succ.output));
            }
            for (const auto& [target, out] : configs) {
                kids.push_back(expand(a, target, out, depth - 1));
            }
        }
        node.children.emplace_back(m, std::move(kids));
    }
    return node;
}

void collect(const BehaviorNode& node, const Stream& word, std::size_t pos, OutputSet& out) {
    if (node.chaotic) {
        out.insert({node.emitted_so_far, true});
        return;
    }
    if (pos == word.size()) {
        out.insert({node.emitted_so_far, false});
        return;
    }
    const auto* kids = node.children_for(word[pos]);
    if (kids == nullptr) {
        throw Error("word '" + serialize(word) + "' is longer than the behaviour tree");
    }
    for (const auto& child : *kids) {
        collect(child, word, pos + 1, out);
    }
}

bool monotone_below(const BehaviorNode& node, std::vector<Character>& path,
                    MonotoneCheck& result) {
    for (const auto& [m, kids] : node.children) {
        path.push_back(m);
        for (const auto& child : kids) {
            if (!is_prefix(node.emitted_so_far, child.emitted_so_far)) {
                result.holds = false;
                result.counterexample =
                    MonotonicityViolation{Stream(path), node.emitted_so_far, child.emitted_so_far};
                return false;
            }
            if (!monotone_below(child, path, result)) {
                return false;
            }
        }
        path.pop_back();
    }
    return true;
}

} // namespace

Stream Execution::output() const {
    Stream out = initial.initial_output;
    for (const auto& step : steps) {
        out = concat(out, step.output);
    }
    return out;
}

std::set<Run> runs(const Automaton& a, const Stream& word) {
    require_word(a, word);
    std::set<Run> out;
    for (const auto& init : a.initials()) {
        Execution current{init, {}};
        extend_runs(a, word, current, out);
    }
    return out;
}

std::set<Execution> executions(const Automaton& a, const Stream& word) {
    std::set<Execution> out;
    for (const auto& run : runs(a, word)) {
        if (!run.chaotic) {
            out.insert(run.execution);
        }
    }
    return out;
}

OutputSet output_set(const Automaton& a, const Stream& word) {
    OutputSet out;
    for (const auto& run : runs(a, word)) {
        out.insert({run.execution.output(), run.chaotic});
    }
    return out;
}

const std::vector<BehaviorNode>* BehaviorNode::children_for(const Character& m) const {
    auto it = std::find_if(children.begin(), children.end(),
                           [&](const auto& entry) { return entry.first == m; });
    return it == children.end() ? nullptr : &it->second;
}

std::vector<BehaviorNode> behavior_tree(const Automaton& a, std::size_t depth) {
    std::vector<BehaviorNode> roots;
    for (const auto& init : a.initials()) {
        roots.push_back(expand(a, init.start, init.initial_output, depth));
    }
    return roots;
}

OutputSet output_set_from_tree(const std::vector<BehaviorNode>& roots, const Stream& word) {
    OutputSet out;
    for (const auto& root : roots) {
        collect(root, word, 0, out);
    }
    return out;
}

MonotoneCheck check_monotone(const Automaton& a, std::size_t depth) {
    return check_monotone(behavior_tree(a, depth));
}

MonotoneCheck check_monotone(const std::vector<BehaviorNode>& roots) {
    MonotoneCheck result;
    for (const auto& root : roots) {
        std::vector<Character> path;
        if (!monotone_below(root, path, result)) {
            break;
        }
    }
    return result;
}

std::vector<Stream> words_up_to(const std::set<Character>& alphabet, std::size_t max_length) {
    std::vector<Stream> words{Stream{}};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
        const std::size_t level_end = words.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (const auto& m : alphabet) {
                words.push_back(concat(words[i], Stream{m}));
            }
        }
        level_begin = level_end;
    }
    return words;
}

} // namespace mpa
