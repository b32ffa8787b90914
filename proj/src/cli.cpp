#include "mpa/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mpa/automaton.hpp"
#include "mpa/refinement.hpp"
#include "mpa/semantics.hpp"
#include "mpa/textio.hpp"

namespace mpa {
namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Automaton load_automaton(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_automaton(text);
    } catch (const ParseError& e) {
        throw Error(path + ":" + std::to_string(e.diagnostic().line) + ": " +
                    e.diagnostic().message);
    }
}

Stream word_from(const Automaton& a, const std::vector<std::string>& tokens) {
    std::vector<Character> items;
    for (const auto& tok : tokens) {
        if (!is_valid_token(tok) || !a.has_character(Character(tok))) {
            throw Error("unknown character " + tok);
        }
        items.emplace_back(tok);
    }
    return Stream(std::move(items));
}

std::string summary(const Automaton& a) {
    return std::to_string(a.states().size()) + " states, " + std::to_string(a.alphabet().size()) +
           " characters, " + std::to_string(a.transitions().size()) + " transitions, " +
           std::to_string(a.initials().size()) + " initial elements";
}

int cmd_validate(const std::string& file, std::ostream& out) {
    const Automaton a = load_automaton(file);
    out << "valid: " << a.name() << ": " << summary(a) << "\n";
    return 0;
}

int cmd_info(const std::string& file, std::ostream& out) {
    const Automaton a = load_automaton(file);
    out << "automaton " << a.name() << ": " << summary(a) << "\n";
    out << "total: " << (is_total(a) ? "yes" : "no") << "\n";
    for (const auto& [s, m] : missing_pairs(a)) {
        out << "missing " << s.name() << " " << m.name() << "\n";
    }
    out << "reachable:";
    for (const auto& s : reachable(a)) {
        out << " " << s.name();
    }
    out << "\n";
    return 0;
}

int cmd_run(const std::string& file, const std::vector<std::string>& word, std::ostream& out) {
    const Automaton a = load_automaton(file);
    const Stream w = word_from(a, word);
    for (const auto& run : runs(a, w)) {
        out << render_execution(run.execution);
        if (run.chaotic) {
            const auto& s = run.execution.last_state();
            out << " ; " << s.name() << " -" << w[run.execution.steps.size()].name() << "-> chaos";
        }
        out << "\n";
    }
    return 0;
}

int cmd_outset(const std::string& file, const std::vector<std::string>& word, std::ostream& out) {
    const Automaton a = load_automaton(file);
    for (const auto& r : output_set(a, word_from(a, word))) {
        out << render_output(r) << "\n";
    }
    return 0;
}

int cmd_refine(const std::string& file, const std::string& emit_dir, std::ostream& out,
               std::ostream& err) {
    const fs::path base = fs::path(file).parent_path();
    Transcript t = [&] {
        const std::string text = read_file(file);
        try {
            return parse_transcript(text, [&](const std::string& ref) {
                return read_file(fs::path(ref).is_absolute() ? fs::path(ref) : base / ref);
            });
        } catch (const ParseError& e) {
            throw Error(file + ":" + std::to_string(e.diagnostic().line) + ": " +
                        e.diagnostic().message);
        }
    }();

    Replay replay = [&] {
        try {
            return apply_transcript(t);
        } catch (const TranscriptError& e) {
            err << file << ": step " << e.index() << " (" << e.rule() << ") rejected: " << e.cause()
                << "\n";
            throw;
        }
    }();

    out << "start: " << summary(replay.start) << "\n";
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        out << "step " << i + 1 << " " << rule_name(t.steps[i]) << ": "
            << summary(replay.intermediates[i]) << "\n";
    }
    out << render_automaton(replay.final_automaton());

    if (!emit_dir.empty()) {
        fs::create_directories(emit_dir);
        auto emit = [&](std::size_t index, const Automaton& a) {
            const fs::path path = fs::path(emit_dir) / ("step_" + std::to_string(index) + ".mpa");
            std::ofstream f(path, std::ios::binary);
            f << render_automaton(a);
            if (!f) {
                throw Error("cannot write " + path.string());
            }
        };
        emit(0, replay.start);
        for (std::size_t i = 0; i < replay.intermediates.size(); ++i) {
            emit(i + 1, replay.intermediates[i]);
        }
    }
    return 0;
}

int cmd_check_refines(const std::string& abstract_file, const std::string& concrete_file,
                      std::size_t depth, std::ostream& out) {
    const Automaton abstract = load_automaton(abstract_file);
    const Automaton concrete = load_automaton(concrete_file);
    const auto sim = find_simulation(abstract, concrete);
    if (sim) {
        out << "simulation: found (" << sim->size() << " pairs)\n";
    } else {
        out << "simulation: none\n";
    }
    const InclusionVerdict verdict = check_refines_bounded(abstract, concrete, depth);
    out << "bounded inclusion (depth " << verdict.depth
        << "): " << (verdict.holds ? "holds" : "fails") << "\n";
    if (verdict.counterexample) {
        out << "counterexample: word " << to_string(verdict.counterexample->word)
            << " concrete result " << render_output(verdict.counterexample->offending)
            << " not covered\n";
    }
    return verdict.holds ? 0 : 1;
}

int cmd_export_dot(const std::string& file, std::ostream& out) {
    out << export_dot(load_automaton(file));
    return 0;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Message processing automata: semantics and refinement checking", "mpa"};
    app.require_subcommand(1);

    std::string file, second, emit_dir;
    std::vector<std::string> word;
    std::size_t depth = default_oracle_depth;

    auto* validate = app.add_subcommand("validate", "Parse and validate an automaton");
    validate->add_option("file", file, "Automaton file (.mpa)")->required();

    auto* info = app.add_subcommand("info", "Totality, missing pairs and reachable states");
    info->add_option("file", file, "Automaton file (.mpa)")->required();

    auto* run = app.add_subcommand("run", "List the executions over an input word");
    run->add_option("file", file, "Automaton file (.mpa)")->required();
    run->add_option("word", word, "Input characters");

    auto* outset = app.add_subcommand("outset", "List the output results of an input word");
    outset->add_option("file", file, "Automaton file (.mpa)")->required();
    outset->add_option("word", word, "Input characters");

    auto* refine = app.add_subcommand("refine", "Replay a refinement transcript");
    refine->add_option("transcript", file, "Transcript file (.rft)")->required();
    refine->add_option("--emit-intermediates", emit_dir,
                       "Write step_<i>.mpa for the start and every step into this directory");

    auto* check = app.add_subcommand("check-refines", "Check that CONCRETE refines ABSTRACT");
    check->add_option("abstract", file, "Abstract automaton (.mpa)")->required();
    check->add_option("concrete", second, "Concrete automaton (.mpa)")->required();
    check->add_option("--depth", depth, "Bound on the input word length")
        ->check(CLI::NonNegativeNumber);

    auto* dot = app.add_subcommand("export-dot", "Print the automaton as a GraphViz digraph");
    dot->add_option("file", file, "Automaton file (.mpa)")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) return cmd_validate(file, out);
        if (*info) return cmd_info(file, out);
        if (*run) return cmd_run(file, word, out);
        if (*outset) return cmd_outset(file, word, out);
        if (*refine) return cmd_refine(file, emit_dir, out, err);
        if (*check) return cmd_check_refines(file, second, depth, out);
        if (*dot) return cmd_export_dot(file, out);
    } catch (const TranscriptError&) {
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace mpa
