#ifndef SYMFA_TRANSFORMS_HPP
#define SYMFA_TRANSFORMS_HPP

#include <map>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "sfa.hpp"

namespace symfa {

/// Copy of a with the same states and no transitions.
inline Sfa copy_states(const Sfa& a) {
    Sfa out(a.binding());
    for (StateId q = 0; q < a.state_count(); ++q) {
        out.add_state(a.state_name(q), a.is_accepting(q));
    }
    out.set_initial(a.initial());
    return out;
}

/// Every transition predicate is replaced by one transition per disjunct
/// of its DNF. Interval predicates use the linear canonical DNF;
/// propositional ones use distribution and drop contradictory monomials.
inline Sfa to_neat(const Sfa& a) {
    Sfa out = copy_states(a);
    for (const auto& t : a.transitions()) {
        if (a.binding().is_interval()) {
            const auto dnf = to_dnf(t.pred, a.binding().domain());
            for (const auto& atom : dnf.atoms()) {
                out.add_transition_unique(t.from, Predicate::atom(atom), t.to);
            }
        } else {
            for (const auto& m : prop_dnf_monomials(t.pred)) {
                out.add_transition_unique(t.from, monomial_predicate(m), t.to);
            }
        }
    }
    return out;
}

/// Merges parallel edges into one disjunction per (from, to) pair, in order
/// of first appearance.
inline Sfa to_normalized(const Sfa& a, OpCounters* counters = nullptr) {
    Sfa out = copy_states(a);
    std::vector<std::pair<StateId, StateId>> order;
    std::map<std::pair<StateId, StateId>, std::vector<Predicate>> groups;
    for (const auto& t : a.transitions()) {
        auto key = std::make_pair(t.from, t.to);
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) {
            order.push_back(key);
        }
        it->second.push_back(t.pred);
    }
    for (const auto& key : order) {
        const auto& ps = groups[key];
        if (ps.size() > 1) {
            detail::count_disj(counters, ps.size() - 1);
        }
        out.add_transition(key.first, mk_or(ps), key.second);
    }
    return out;
}

/// Drops exactly the unsatisfiable transitions.
inline Sfa to_feasible(const Sfa& a, OpCounters* counters = nullptr) {
    Sfa out = copy_states(a);
    for (const auto& t : a.transitions()) {
        if (sat(a.binding(), t.pred, counters)) {
            out.add_transition(t.from, t.pred, t.to);
        }
    }
    return out;
}

namespace detail {

/// Residual regions of each state: the letters with no outgoing transition.
template <EffectiveBooleanAlgebra Alg>
std::vector<typename Alg::region_type> residuals(const Alg& alg, const Sfa& a, OpCounters* counters) {
    std::vector<typename Alg::region_type> out;
    const auto outgoing = a.outgoing();
    for (StateId q = 0; q < a.state_count(); ++q) {
        auto covered = alg.complement(alg.top());
        for (auto i : outgoing[q]) {
            covered = alg.join(covered, alg.region(a.transitions()[i].pred));
            count_disj(counters);
        }
        count_sat(counters);
        out.push_back(alg.complement(covered));
    }
    return out;
}

}  // namespace detail

/// Adds a non-accepting sink and routes every uncovered letter to it.
///
/// Complete input is returned unchanged. For neat input the residual of a
/// state is emitted as pairwise-disjoint basic predicates (gap intervals,
/// at most m+1 per state, or disjoint monomials) so the result stays neat.
/// Otherwise each state gets a single edge labeled with the negated
/// disjunction of its outgoing predicates.
inline Sfa complete(const Sfa& a, OpCounters* counters = nullptr) {
    const bool neat = is_neat(a);
    return with_algebra(a.binding(), [&](const auto& alg) {
        const auto gaps = detail::residuals(alg, a, counters);
        bool already = true;
        for (const auto& g : gaps) {
            already = already && alg.is_empty(g);
        }
        if (already) {
            return a;
        }
        Sfa out = a;
        const StateId sink = out.add_state(fresh_state_name(a, "sink"));
        const auto outgoing = a.outgoing();
        for (StateId q = 0; q < a.state_count(); ++q) {
            if (alg.is_empty(gaps[q])) {
                continue;
            }
            if (neat) {
                for (const auto& p : alg.basic_cover(gaps[q])) {
                    out.add_transition(q, p, sink);
                }
            } else {
                std::vector<Predicate> ps;
                for (auto i : outgoing[q]) {
                    ps.push_back(a.transitions()[i].pred);
                }
                out.add_transition(q, mk_not(mk_or(ps)), sink);
            }
        }
        out.add_transition(sink, Predicate::truth(), sink);
        return out;
    });
}

}  // namespace symfa

#endif
