// symfa: command-line front end for the symfa library.
//
// Exit status: 0 on success (or a true decision), 1 for a false decision,
// 2 for any error.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <symfa/symfa.hpp>

namespace {

using json = nlohmann::json;
using namespace symfa;

struct Report {
    std::string op;
    std::vector<SizeTriple> inputs;
    std::optional<SizeTriple> output;
    OpCounters counters;
    double ms = 0;
    json result;
};

json triple_json(const SizeTriple& t) { return {{"n", t.n}, {"m", t.m}, {"l", t.l}}; }

std::string triple_text(const SizeTriple& t) {
    return "n=" + std::to_string(t.n) + " m=" + std::to_string(t.m) + " l=" + std::to_string(t.l);
}

json report_json(const Report& r) {
    json inputs = json::array();
    for (const auto& t : r.inputs) {
        inputs.push_back(triple_json(t));
    }
    return {{"op", r.op},
            {"inputs", inputs},
            {"output", r.output ? triple_json(*r.output) : json(nullptr)},
            {"counters",
             {{"sat_calls", r.counters.sat_calls},
              {"conj_built", r.counters.conj_built},
              {"disj_built", r.counters.disj_built}}},
            {"ms", r.ms},
            {"result", r.result}};
}

void print_human(std::ostream& os, const Report& r) {
    os << "op: " << r.op << "\n";
    for (std::size_t i = 0; i < r.inputs.size(); ++i) {
        os << "input " << i << ": " << triple_text(r.inputs[i]) << "\n";
    }
    if (r.output) {
        os << "output: " << triple_text(*r.output) << "\n";
    }
    os << "counters: sat_calls=" << r.counters.sat_calls << " conj_built=" << r.counters.conj_built
       << " disj_built=" << r.counters.disj_built << "\n";
    std::ostringstream ms;
    ms.precision(3);
    ms << std::fixed << r.ms;
    os << "ms: " << ms.str() << "\n";
    if (r.result.is_string()) {
        os << "result: " << r.result.get<std::string>() << "\n";
    } else if (r.result.is_object() && r.result.contains("sfa")) {
        os << "result:\n" << r.result["sfa"].dump(2) << "\n";
    } else {
        os << "result: " << r.result.dump() << "\n";
    }
}

Word parse_word(const std::string& text, const AlgebraBinding& b) {
    Word w;
    if (text.empty()) {
        return w;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (b.is_interval()) {
            std::size_t used = 0;
            std::int64_t x = 0;
            try {
                x = std::stoll(item, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (item.empty() || used != item.size()) {
                throw Error("bad letter '" + item + "': expected an integer");
            }
            w.emplace_back(x);
        } else {
            auto v = Valuation::parse(item);
            if (v.width() != b.arity()) {
                throw Error("bad letter '" + item + "': expected " + std::to_string(b.arity()) + " bits");
            }
            w.emplace_back(v);
        }
    }
    return w;
}

json word_json(const Word& w) {
    json out = json::array();
    for (const auto& l : w) {
        if (const auto* x = std::get_if<std::int64_t>(&l)) {
            out.push_back(*x);
        } else {
            out.push_back(to_string(l));
        }
    }
    return out;
}

Sfa load(const std::string& path) {
    Sfa a = io::read_sfa_file(path);
    auto issues = validate(a);
    if (!issues.empty()) {
        throw Error(path + ": " + issues.front());
    }
    return a;
}

struct Options {
    std::vector<std::string> files;
    std::string out;
    std::string word;
    bool json = false;
    bool assume_feasible = false;
};

/// How a command finished: a report plus an optional decision.
struct Outcome {
    Report report;
    std::optional<bool> decision;
    std::string text;  // printed verbatim instead of a result line (dot)
};

using Handler = std::function<Outcome(const Options&)>;

Outcome emit_output(const std::string& op, const std::vector<Sfa>& in, const Sfa& out, const OpCounters& c,
                    double ms, const Options& opt) {
    Outcome o;
    o.report.op = op;
    for (const auto& a : in) {
        o.report.inputs.push_back(size_triple(a));
    }
    o.report.output = size_triple(out);
    o.report.counters = c;
    o.report.ms = ms;
    if (!opt.out.empty()) {
        io::write_sfa_file(opt.out, out);
        o.report.result = opt.out;
    } else {
        o.report.result = {{"sfa", io::to_json(out)}};
    }
    return o;
}

template <class F>
double timed(F f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Handler unary_transform(const std::string& op, std::function<Sfa(const Sfa&, OpCounters*)> f) {
    return [op, f](const Options& opt) {
        const Sfa a = load(opt.files.at(0));
        OpCounters c;
        Sfa out(a.binding());
        const double ms = timed([&] { out = f(a, &c); });
        return emit_output(op, {a}, out, c, ms, opt);
    };
}

Handler binary_product(const std::string& op, ProductMode mode) {
    return [op, mode](const Options& opt) {
        const Sfa a = load(opt.files.at(0));
        const Sfa b = load(opt.files.at(1));
        OpCounters c;
        Sfa out(a.binding());
        const double ms = timed([&] { out = product(a, b, mode, &c); });
        return emit_output(op, {a, b}, out, c, ms, opt);
    };
}

Outcome decision(const std::string& op, const std::vector<Sfa>& in, bool value, const OpCounters& c, double ms) {
    Outcome o;
    o.report.op = op;
    for (const auto& a : in) {
        o.report.inputs.push_back(size_triple(a));
    }
    o.report.counters = c;
    o.report.ms = ms;
    o.report.result = value;
    o.decision = value;
    return o;
}

std::map<std::string, Handler> handlers() {
    std::map<std::string, Handler> h;
    h["validate"] = [](const Options& opt) {
        const Sfa a = io::read_sfa_file(opt.files.at(0));
        std::vector<std::string> issues;
        const double ms = timed([&] { issues = validate(a); });
        Outcome o = decision("validate", {}, issues.empty(), {}, ms);
        if (issues.empty()) {
            o.report.inputs.push_back(size_triple(a));
        }
        o.report.result = {{"valid", issues.empty()}, {"issues", issues}};
        return o;
    };
    h["metrics"] = [](const Options& opt) {
        const Sfa a = load(opt.files.at(0));
        OpCounters c;
        json r;
        const double ms = timed([&] {
            r = {{"neat", is_neat(a)},
                 {"normalized", is_normalized(a)},
                 {"deterministic", is_deterministic(a, &c)},
                 {"complete", is_complete(a, &c)},
                 {"feasible", is_feasible(a, &c)}};
        });
        Outcome o;
        o.report.op = "metrics";
        o.report.inputs.push_back(size_triple(a));
        o.report.counters = c;
        o.report.ms = ms;
        o.report.result = r;
        return o;
    };
    h["neat"] = unary_transform("neat", [](const Sfa& a, OpCounters*) { return to_neat(a); });
    h["normalize"] = unary_transform("normalize", [](const Sfa& a, OpCounters* c) { return to_normalized(a, c); });
    h["feasible"] = unary_transform("feasible", [](const Sfa& a, OpCounters* c) { return to_feasible(a, c); });
    h["complete"] = unary_transform("complete", [](const Sfa& a, OpCounters* c) { return complete(a, c); });
    h["determinize"] = unary_transform("determinize", [](const Sfa& a, OpCounters* c) { return determinize(a, c); });
    h["minimize"] = unary_transform("minimize", [](const Sfa& a, OpCounters* c) { return minimize(a, c); });
    h["complement"] = unary_transform("complement", [](const Sfa& a, OpCounters* c) { return complement(a, c); });
    h["canon-neat"] =
        unary_transform("canon-neat", [](const Sfa& a, OpCounters* c) { return canonical_minimal_neat(a, c); });
    h["canon-norm"] =
        unary_transform("canon-norm", [](const Sfa& a, OpCounters* c) { return canonical_minimal_normalized(a, c); });
    h["intersect"] = binary_product("intersect", ProductMode::Intersect);
    h["union"] = binary_product("union", ProductMode::Union);
    h["member"] = [](const Options& opt) {
        const Sfa a = load(opt.files.at(0));
        const Word w = parse_word(opt.word, a.binding());
        bool r = false;
        const double ms = timed([&] { r = membership(a, w); });
        return decision("member", {a}, r, {}, ms);
    };
    h["empty"] = [](const Options& opt) {
        const Sfa a = load(opt.files.at(0));
        OpCounters c;
        bool r = false;
        const double ms = timed([&] { r = is_empty(a, opt.assume_feasible, &c); });
        return decision("empty", {a}, r, c, ms);
    };
    h["include"] = [](const Options& opt) {
        const Sfa a = load(opt.files.at(0));
        const Sfa b = load(opt.files.at(1));
        OpCounters c;
        std::optional<Word> w;
        const double ms = timed([&] { w = inclusion_counterexample(a, b, &c); });
        Outcome o = decision("include", {a, b}, !w.has_value(), c, ms);
        o.report.result = {{"included", !w.has_value()}, {"counterexample", w ? word_json(*w) : json(nullptr)}};
        return o;
    };
    h["equiv"] = [](const Options& opt) {
        const Sfa a = load(opt.files.at(0));
        const Sfa b = load(opt.files.at(1));
        OpCounters c;
        bool r = false;
        const double ms = timed([&] { r = equivalent(a, b, &c); });
        return decision("equiv", {a, b}, r, c, ms);
    };
    h["dot"] = [](const Options& opt) {
        const Sfa a = load(opt.files.at(0));
        std::string text;
        const double ms = timed([&] { text = export_dot(a); });
        Outcome o;
        o.report.op = "dot";
        o.report.inputs.push_back(size_triple(a));
        o.report.ms = ms;
        if (!opt.out.empty()) {
            std::ofstream out(opt.out, std::ios::binary);
            if (!out) {
                throw Error("cannot write '" + opt.out + "'");
            }
            out << text;
            o.report.result = opt.out;
        } else {
            o.report.result = text;
            o.text = text;
        }
        return o;
    };
    h["debug oracle-equal"] = [](const Options& opt) {
        const Sfa a = load(opt.files.at(0));
        const Sfa b = load(opt.files.at(1));
        bool r = false;
        const double ms = timed([&] { r = oracle::oracle_equal(a, b); });
        return decision("debug oracle-equal", {a, b}, r, {}, ms);
    };
    h["debug concretize"] = [](const Options& opt) {
        const Sfa a = load(opt.files.at(0));
        oracle::ConcreteDfa d;
        const double ms = timed([&] { d = oracle::concretize(a, oracle::default_alphabet(a)); });
        Outcome o;
        o.report.op = "debug concretize";
        o.report.inputs.push_back(size_triple(a));
        o.report.ms = ms;
        json alphabet = json::array();
        for (const auto& l : d.alphabet) {
            alphabet.push_back(to_string(l));
        }
        o.report.result = {{"alphabet", alphabet},
                           {"states", d.state_count()},
                           {"nerode_classes", oracle::nerode_class_count(d)},
                           {"empty", oracle::dfa_empty(d)}};
        return o;
    };
    return h;
}

struct Command {
    std::string key;
    std::string help;
    std::size_t files;
    bool word = false;
    bool feasible_flag = false;
};

const std::vector<Command>& commands() {
    static const std::vector<Command> cs{
        {"validate", "check structural invariants (exit 1 if violated)", 1},
        {"metrics", "size triple and neat/normalized/deterministic/complete/feasible", 1},
        {"neat", "rewrite every label into basic predicates", 1},
        {"normalize", "merge parallel edges", 1},
        {"feasible", "drop unsatisfiable edges", 1},
        {"complete", "add a sink for uncovered letters", 1},
        {"determinize", "subset construction with minterms", 1},
        {"minimize", "minimize a deterministic automaton", 1},
        {"complement", "complement a deterministic automaton", 1},
        {"intersect", "product accepting the intersection", 2},
        {"union", "product accepting the union (deterministic complete inputs)", 2},
        {"canon-neat", "canonical minimal neat form (interval algebra)", 1},
        {"canon-norm", "canonical minimal normalized form (interval algebra)", 1},
        {"member", "decide membership of --word", 1, true},
        {"empty", "decide language emptiness", 1, false, true},
        {"include", "decide L(A) included in L(B), with a counterexample", 2},
        {"equiv", "decide language equivalence", 2},
        {"dot", "Graphviz export", 1},
    };
    return cs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symfa: symbolic finite automata over interval and propositional algebras"};
    app.require_subcommand(1);
    Options opt;
    std::string selected;

    auto add_common = [&](CLI::App* sub, const Command& c) {
        const char* names[] = {"A", "B"};
        for (std::size_t i = 0; i < c.files; ++i) {
            sub->add_option_function<std::string>(
                   names[i], [&opt](const std::string& f) { opt.files.push_back(f); }, "SFA file")
                ->required()
                ->check(CLI::ExistingFile);
        }
        sub->add_flag("--json", opt.json, "machine-readable report");
        sub->add_option("--out,-o", opt.out, "write the output automaton (or DOT text) to this path");
        if (c.word) {
            sub->add_option("--word,-w", opt.word, "comma-separated letters: integers or bit strings like 101")
                ->required();
        }
        if (c.feasible_flag) {
            sub->add_flag("--assume-feasible", opt.assume_feasible, "skip satisfiability checks on edges");
        }
        sub->callback([&selected, key = c.key] { selected = key; });
    };
    for (const auto& c : commands()) {
        add_common(app.add_subcommand(c.key, c.help), c);
    }
    auto* debug = app.add_subcommand("debug", "brute-force oracle tools for troubleshooting");
    debug->require_subcommand(1);
    add_common(debug->add_subcommand("oracle-equal", "language equality on the concrete window"),
               Command{"debug oracle-equal", "", 2});
    add_common(debug->add_subcommand("concretize", "explicit DFA over the concrete window"),
               Command{"debug concretize", "", 1});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const auto hs = handlers();
        Outcome o = hs.at(selected)(opt);
        if (opt.json) {
            std::cout << report_json(o.report).dump(2) << "\n";
        } else if (!o.text.empty()) {
            std::cout << o.text;
        } else {
            print_human(std::cout, o.report);
        }
        if (o.decision) {
            return *o.decision ? 0 : 1;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
