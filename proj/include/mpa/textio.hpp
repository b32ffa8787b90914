#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "mpa/automaton.hpp"
#include "mpa/refinement.hpp"
#include "mpa/semantics.hpp"

namespace mpa {

struct SourceDiagnostic {
    std::size_t line = 1; ///< 1-based
    std::string message;
    std::string offending_token;
};

/// Syntax or validation failure in automaton or transcript text.
class ParseError : public Error {
public:
    explicit ParseError(SourceDiagnostic diagnostic);
    const SourceDiagnostic& diagnostic() const noexcept { return diagnostic_; }

private:
    SourceDiagnostic diagnostic_;
};

/*
 * Automaton text format (.mpa), one declaration per line, '#' starts a comment:
 *
 *   automaton <name>
 *   alphabet <char>...
 *   state <name>...
 *   init <state> / <out-char>...
 *   trans <src> <char> -> <dst> / <out-char>...
 *
 * alphabet and state lines may repeat. The header must come first.
 */
Automaton parse_automaton(std::string_view text);

/// Canonical source for @p a: sorted declarations, accepted by parse_automaton.
std::string render_automaton(const Automaton& a);

/// Loads the automaton source referenced by a transcript's `refine <file>` line.
using SourceLoader = std::function<std::string(const std::string& path)>;

/*
 * Transcript text format (.rft):
 *
 *   refine <automaton-file>          start automaton from a file, or
 *   refine                           followed by inline automaton declarations
 *   extend-alphabet <char>...        optional, before the first step
 *   remove-init <state> / <out>...
 *   remove-trans <src> <char> -> <dst> / <out>...
 *   add-trans <src> <char> -> <dst> / <out>...
 *   remove-state <state>...
 *   add-state <state>...
 *   refine-state <new>... map <new>-><old>...
 *
 * remove-init, remove-trans and add-trans accept several elements on one line
 * separated by ';'; each line is a single rule application.
 */
Transcript parse_transcript(std::string_view text, const SourceLoader& load);

/// Transcript source with the start automaton inlined.
std::string render_transcript(const Transcript& t);

/// GraphViz digraph of @p a. Edges are labelled "m/out"; initial elements are
/// edges from invisible point nodes labelled "/out".
std::string export_dot(const Automaton& a);

/// Single-line form of an execution:
/// "init s / out ; s -m/out-> t ; ...". Outputs inside labels are comma-joined.
std::string render_execution(const Execution& e);

/// "⟨...⟩" for complete outputs, "⟨...⟩ ^ chaos" for chaotic ones.
std::string render_output(const OutputResult& r);

} // namespace mpa
