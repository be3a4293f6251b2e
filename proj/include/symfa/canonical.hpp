#ifndef SYMFA_CANONICAL_HPP
#define SYMFA_CANONICAL_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "operations.hpp"

namespace symfa {

class UnsupportedAlgebra : public Error {
public:
    using Error::Error;
};

namespace detail {

struct CanonicalEdge {
    IntervalAtom atom;
    StateId to;
};

/// Per state: maximal intervals with their target, sorted by lower bound.
inline std::vector<std::vector<CanonicalEdge>> canonical_edges(const Sfa& a) {
    const IntervalAlgebra alg{a.binding().domain()};
    std::vector<std::vector<CanonicalEdge>> out(a.state_count());
    const auto outgoing = a.outgoing();
    for (StateId q = 0; q < a.state_count(); ++q) {
        std::map<StateId, IntervalDnf> by_target;
        for (auto i : outgoing[q]) {
            const auto& t = a.transitions()[i];
            auto& r = by_target[t.to];
            r = r.unite(alg.region(t.pred));
        }
        for (const auto& [to, region] : by_target) {
            for (const auto& atom : region.atoms()) {
                out[q].push_back(CanonicalEdge{atom, to});
            }
        }
        std::sort(out[q].begin(), out[q].end(),
                  [](const CanonicalEdge& x, const CanonicalEdge& y) { return x.atom < y.atom; });
    }
    return out;
}

inline Sfa canonical_neat_form(const Sfa& a, bool normalized) {
    const auto edges = canonical_edges(a);
    std::vector<StateId> order;
    std::vector<std::size_t> index(a.state_count(), a.state_count());
    std::deque<StateId> work{a.initial()};
    index[a.initial()] = 0;
    order.push_back(a.initial());
    while (!work.empty()) {
        const StateId q = work.front();
        work.pop_front();
        for (const auto& e : edges[q]) {
            if (index[e.to] == a.state_count()) {
                index[e.to] = order.size();
                order.push_back(e.to);
                work.push_back(e.to);
            }
        }
    }

    Sfa out(a.binding());
    for (std::size_t i = 0; i < order.size(); ++i) {
        out.add_state("q" + std::to_string(i), a.is_accepting(order[i]));
    }
    out.set_initial(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& es = edges[order[i]];
        if (!normalized) {
            for (const auto& e : es) {
                out.add_transition(i, Predicate::atom(e.atom), index[e.to]);
            }
            continue;
        }
        std::map<std::size_t, std::vector<Predicate>> by_target;
        for (const auto& e : es) {
            by_target[index[e.to]].push_back(Predicate::atom(e.atom));
        }
        for (const auto& [to, ps] : by_target) {
            out.add_transition(i, mk_or(ps), to);
        }
    }
    return out;
}

inline Sfa minimal_complete_dfa(const Sfa& a, OpCounters* counters) {
    if (!a.binding().is_interval()) {
        throw UnsupportedAlgebra("canonical minimal forms exist only over the interval algebra");
    }
    return minimize(complete(determinize(a, counters), counters), counters);
}

}  // namespace detail

/// The unique minimal-state neat automaton of L(a): minimal complete DFA,
/// one transition per maximal interval, states named q0.. in breadth-first
/// order with edges explored by ascending interval.
inline Sfa canonical_minimal_neat(const Sfa& a, OpCounters* counters = nullptr) {
    return detail::canonical_neat_form(detail::minimal_complete_dfa(a, counters), false);
}

/// canonical_minimal_neat with parallel edges merged; disjuncts ordered by
/// lower bound, edges of a state ordered by target index.
inline Sfa canonical_minimal_normalized(const Sfa& a, OpCounters* counters = nullptr) {
    return detail::canonical_neat_form(detail::minimal_complete_dfa(a, counters), true);
}

}  // namespace symfa

#endif
