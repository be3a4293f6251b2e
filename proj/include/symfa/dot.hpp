#ifndef SYMFA_DOT_HPP
#define SYMFA_DOT_HPP

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "sfa.hpp"

namespace symfa {

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out + "\"";
}

}  // namespace detail

/// Graphviz rendering. States appear in declaration order, edges sorted by
/// (source, target, label), so output is byte-stable.
inline std::string export_dot(const Sfa& a) {
    std::string out = "digraph sfa {\n  rankdir=LR;\n  node [shape=circle];\n  __start [shape=point];\n";
    for (StateId q = 0; q < a.state_count(); ++q) {
        out += "  " + detail::dot_quote(a.state_name(q));
        if (a.is_accepting(q)) {
            out += " [shape=doublecircle]";
        }
        out += ";\n";
    }
    out += "  __start -> " + detail::dot_quote(a.state_name(a.initial())) + ";\n";

    struct Edge {
        StateId from;
        StateId to;
        std::string label;
    };
    std::vector<Edge> edges;
    for (const auto& t : a.transitions()) {
        edges.push_back({t.from, t.to, to_string(t.pred, a.binding().props())});
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
        return std::tie(x.from, x.to, x.label) < std::tie(y.from, y.to, y.label);
    });
    for (const auto& e : edges) {
        out += "  " + detail::dot_quote(a.state_name(e.from)) + " -> " + detail::dot_quote(a.state_name(e.to)) +
               " [label=" + detail::dot_quote(e.label) + "];\n";
    }
    return out + "}\n";
}

}  // namespace symfa

#endif
