#include "mpa/textio.hpp"

namespace mpa {
namespace {

std::string quoted(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string label(const Stream& out) {
    std::string s;
    for (const auto& c : out) {
        if (!s.empty()) {
            s += ',';
        }
        s += c.name();
    }
    return s;
}

} // namespace

std::string export_dot(const Automaton& a) {
    std::string out = "digraph " + quoted(a.name()) + " {\n";
    out += "  rankdir=LR;\n";
    out += "  node [shape=ellipse];\n";
    for (const auto& s : a.states()) {
        out += "  " + quoted(s.name()) + ";\n";
    }
    std::size_t n = 0;
    for (const auto& i : a.initials()) {
        const std::string source = quoted("#init" + std::to_string(n++));
        out += "  " + source + " [shape=point, style=invis];\n";
        out += "  " + source + " -> " + quoted(i.start.name()) + " [label=" +
               quoted("/" + label(i.initial_output)) + "];\n";
    }
    for (const auto& t : a.transitions()) {
        out += "  " + quoted(t.source.name()) + " -> " + quoted(t.target.name()) + " [label=" +
               quoted(t.input.name() + "/" + label(t.output)) + "];\n";
    }
    out += "}\n";
    return out;
}

} // namespace mpa
