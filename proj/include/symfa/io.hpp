#ifndef SYMFA_IO_HPP
#define SYMFA_IO_HPP

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sfa.hpp"

// SFA file format (UTF-8 JSON):
//
//   {
//     "algebra": {"kind": "interval"}
//              | {"kind": "interval", "domain": {"lo": 0, "hi": "inf"}}
//              | {"kind": "propositional", "props": ["p1", "p2"]},
//     "states": ["q0", "q1"],
//     "initial": "q0",
//     "accepting": ["q1"],
//     "transitions": [{"from": "q0", "pred": <predicate>, "to": "q1"}, ...]
//   }
//
// Predicates: "true", "false", {"and": [...]}, {"or": [...]}, {"not": p},
// {"atom": {"lo": <int|"-inf">, "hi": <int|"inf">}} or
// {"atom": {"var": "<name>", "neg": <bool>}}. Unknown fields are rejected.

namespace symfa::io {

using nlohmann::json;

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(line == 0 ? what : what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

    /// Same error with a prefix (typically the file name) on the message.
    ParseError prefixed(const std::string& prefix) const {
        ParseError e(prefix + ": " + what());
        e.line_ = line_;
        e.column_ = column_;
        return e;
    }

private:
    std::size_t line_;
    std::size_t column_;
};

namespace detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

inline const json& expect_object(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) {
        fail(path, "expected an object");
    }
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed) {
            known = known || key == a;
        }
        if (!known) {
            fail(path, "unknown field '" + key + "'");
        }
    }
    return j;
}

inline const json& field(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(path, std::string("missing field '") + key + "'");
    }
    return *it;
}

inline std::string expect_string(const json& j, const std::string& path) {
    if (!j.is_string()) {
        fail(path, "expected a string");
    }
    return j.get<std::string>();
}

inline json bound_to_json(const Bound& b) {
    if (b.is_finite()) {
        return b.value();
    }
    return b.to_string();
}

inline Bound bound_from_json(const json& j, const std::string& path, const char* sentinel) {
    if (j.is_number_integer()) {
        return Bound::finite(j.get<std::int64_t>());
    }
    if (j.is_string() && j.get<std::string>() == sentinel) {
        return std::string_view(sentinel) == "-inf" ? Bound::neg_inf() : Bound::pos_inf();
    }
    fail(path, std::string("expected an integer or \"") + sentinel + "\"");
}

inline IntervalAtom interval_from_json(const json& j, const std::string& path) {
    expect_object(j, path, {"lo", "hi"});
    auto lo = bound_from_json(field(j, "lo", path), path + ".lo", "-inf");
    auto hi = bound_from_json(field(j, "hi", path), path + ".hi", "inf");
    auto atom = IntervalAtom::make(lo, hi);
    if (!atom) {
        fail(path, "interval [" + lo.to_string() + "," + hi.to_string() + ") is empty");
    }
    return *atom;
}

}  // namespace detail

inline json predicate_to_json(const Predicate& p, const AlgebraBinding& b) {
    switch (p.kind()) {
        case Predicate::Kind::True: return "true";
        case Predicate::Kind::False: return "false";
        case Predicate::Kind::Atom: {
            if (const auto* ia = std::get_if<IntervalAtom>(&p.atom_value())) {
                return {{"atom", {{"lo", detail::bound_to_json(ia->lo())}, {"hi", detail::bound_to_json(ia->hi())}}}};
            }
            const auto& lit = std::get<LiteralAtom>(p.atom_value());
            return {{"atom", {{"var", b.props().at(lit.var)}, {"neg", lit.negated}}}};
        }
        case Predicate::Kind::Not: return {{"not", predicate_to_json(p.operand(), b)}};
        case Predicate::Kind::And:
        case Predicate::Kind::Or: {
            json arr = json::array();
            for (const auto& c : p.children()) {
                arr.push_back(predicate_to_json(c, b));
            }
            return {{p.kind() == Predicate::Kind::And ? "and" : "or", arr}};
        }
    }
    return nullptr;
}

/// Builds exactly the tree described, without simplification.
inline Predicate predicate_from_json(const json& j, const AlgebraBinding& b, const std::string& path = "pred") {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "true") {
            return Predicate::truth();
        }
        if (s == "false") {
            return Predicate::falsity();
        }
        detail::fail(path, "unknown constant '" + s + "'");
    }
    if (!j.is_object() || j.size() != 1) {
        detail::fail(path, "expected \"true\", \"false\" or a single-key object");
    }
    const auto& [key, value] = *j.items().begin();
    const std::string sub = path + "." + key;
    if (key == "atom") {
        if (b.is_interval()) {
            return Predicate::atom(detail::interval_from_json(value, sub));
        }
        detail::expect_object(value, sub, {"var", "neg"});
        const auto name = detail::expect_string(detail::field(value, "var", sub), sub + ".var");
        auto idx = b.prop_index(name);
        if (!idx) {
            detail::fail(sub + ".var", "unknown proposition '" + name + "'");
        }
        bool neg = false;
        if (auto it = value.find("neg"); it != value.end()) {
            if (!it->is_boolean()) {
                detail::fail(sub + ".neg", "expected a boolean");
            }
            neg = it->get<bool>();
        }
        return literal(*idx, neg);
    }
    if (key == "not") {
        return Predicate::negation(predicate_from_json(value, b, sub));
    }
    if (key == "and" || key == "or") {
        if (!value.is_array() || value.size() < 2) {
            detail::fail(sub, "expected an array of at least two predicates");
        }
        std::vector<Predicate> cs;
        for (std::size_t i = 0; i < value.size(); ++i) {
            cs.push_back(predicate_from_json(value[i], b, sub + "[" + std::to_string(i) + "]"));
        }
        return key == "and" ? Predicate::conjunction(std::move(cs)) : Predicate::disjunction(std::move(cs));
    }
    detail::fail(path, "unknown connective '" + key + "'");
}

inline json binding_to_json(const AlgebraBinding& b) {
    if (b.is_interval()) {
        json j = {{"kind", "interval"}};
        if (b.domain() != IntervalAtom::full()) {
            j["domain"] = {{"lo", detail::bound_to_json(b.domain().lo())},
                           {"hi", detail::bound_to_json(b.domain().hi())}};
        }
        return j;
    }
    return {{"kind", "propositional"}, {"props", b.props()}};
}

inline AlgebraBinding binding_from_json(const json& j, const std::string& path = "algebra") {
    detail::expect_object(j, path, {"kind", "domain", "props"});
    const auto kind = detail::expect_string(detail::field(j, "kind", path), path + ".kind");
    if (kind == "interval") {
        if (j.contains("props")) {
            detail::fail(path, "interval algebra takes no 'props'");
        }
        if (auto it = j.find("domain"); it != j.end()) {
            return AlgebraBinding::interval(detail::interval_from_json(*it, path + ".domain"));
        }
        return AlgebraBinding::interval();
    }
    if (kind == "propositional") {
        if (j.contains("domain")) {
            detail::fail(path, "propositional algebra takes no 'domain'");
        }
        const auto& props = detail::field(j, "props", path);
        if (!props.is_array()) {
            detail::fail(path + ".props", "expected an array of names");
        }
        std::vector<std::string> names;
        for (std::size_t i = 0; i < props.size(); ++i) {
            names.push_back(detail::expect_string(props[i], path + ".props[" + std::to_string(i) + "]"));
        }
        try {
            return AlgebraBinding::propositional(std::move(names));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            detail::fail(path + ".props", e.what());
        }
    }
    detail::fail(path + ".kind", "unknown algebra '" + kind + "'");
}

inline json to_json(const Sfa& a) {
    json states = json::array();
    json accepting = json::array();
    for (StateId q = 0; q < a.state_count(); ++q) {
        states.push_back(a.state_name(q));
        if (a.is_accepting(q)) {
            accepting.push_back(a.state_name(q));
        }
    }
    json ts = json::array();
    for (const auto& t : a.transitions()) {
        ts.push_back({{"from", a.state_name(t.from)},
                      {"pred", predicate_to_json(t.pred, a.binding())},
                      {"to", a.state_name(t.to)}});
    }
    return {{"algebra", binding_to_json(a.binding())},
            {"states", states},
            {"initial", a.state_name(a.initial())},
            {"accepting", accepting},
            {"transitions", ts}};
}

inline Sfa sfa_from_json(const json& j) {
    detail::expect_object(j, "sfa", {"algebra", "states", "initial", "accepting", "transitions"});
    Sfa a(binding_from_json(detail::field(j, "algebra", "sfa")));
    const auto& states = detail::field(j, "states", "sfa");
    if (!states.is_array() || states.empty()) {
        detail::fail("states", "expected a nonempty array of names");
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
        const std::string path = "states[" + std::to_string(i) + "]";
        auto name = detail::expect_string(states[i], path);
        if (name.empty() || a.find_state(name)) {
            detail::fail(path, "state names must be nonempty and unique");
        }
        a.add_state(std::move(name));
    }
    auto resolve = [&](const json& v, const std::string& path) {
        auto name = detail::expect_string(v, path);
        auto q = a.find_state(name);
        if (!q) {
            detail::fail(path, "unknown state '" + name + "'");
        }
        return *q;
    };
    a.set_initial(resolve(detail::field(j, "initial", "sfa"), "initial"));
    const auto& accepting = detail::field(j, "accepting", "sfa");
    if (!accepting.is_array()) {
        detail::fail("accepting", "expected an array of names");
    }
    for (std::size_t i = 0; i < accepting.size(); ++i) {
        a.set_accepting(resolve(accepting[i], "accepting[" + std::to_string(i) + "]"));
    }
    const auto& ts = detail::field(j, "transitions", "sfa");
    if (!ts.is_array()) {
        detail::fail("transitions", "expected an array");
    }
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const std::string path = "transitions[" + std::to_string(i) + "]";
        detail::expect_object(ts[i], path, {"from", "pred", "to"});
        const StateId from = resolve(detail::field(ts[i], "from", path), path + ".from");
        const StateId to = resolve(detail::field(ts[i], "to", path), path + ".to");
        a.add_transition(from, predicate_from_json(detail::field(ts[i], "pred", path), a.binding(), path + ".pred"), to);
    }
    return a;
}

inline std::string emit_sfa(const Sfa& a) { return to_json(a).dump(2) + "\n"; }

inline Sfa parse_sfa(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string msg = e.what();
        throw ParseError("malformed JSON: " + msg, line, column);
    }
    return sfa_from_json(j);
}

inline Sfa read_sfa_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_sfa(buf.str());
    } catch (const ParseError& e) {
        throw e.prefixed(path);
    }
}

inline void write_sfa_file(const std::string& path, const Sfa& a) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    out << emit_sfa(a);
}

}  // namespace symfa::io

#endif
