#ifndef SYMFA_OPERATIONS_HPP
#define SYMFA_OPERATIONS_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "sfa.hpp"
#include "transforms.hpp"

namespace symfa {

enum class ProductMode : std::uint8_t { Intersect, Union };

namespace detail {

inline void require_same_binding(const Sfa& a, const Sfa& b) {
    if (a.binding() != b.binding()) {
        throw Error("automata are over different algebras");
    }
}

template <EffectiveBooleanAlgebra Alg>
std::vector<typename Alg::region_type> transition_regions(const Alg& alg, const Sfa& a) {
    std::vector<typename Alg::region_type> out;
    out.reserve(a.transitions().size());
    for (const auto& t : a.transitions()) {
        out.push_back(alg.region(t.pred));
    }
    return out;
}

/// Conjunction of two transition labels as emitted by the product.
/// Interval labels are re-expressed canonically (one atom for atoms);
/// monomials are merged literal-wise.
template <EffectiveBooleanAlgebra Alg>
Predicate product_label(const Alg& alg, const Predicate& p, const Predicate& q,
                        const typename Alg::region_type& both) {
    if constexpr (Alg::monotonic) {
        return alg.to_predicate(both);
    } else {
        auto mp = as_monomial(p);
        auto mq = as_monomial(q);
        if (mp && mq) {
            Monomial m;
            std::merge(mp->begin(), mp->end(), mq->begin(), mq->end(), std::back_inserter(m));
            m.erase(std::unique(m.begin(), m.end()), m.end());
            return monomial_predicate(m);
        }
        return mk_and({p, q});
    }
}

}  // namespace detail

/// Synchronized product over the reachable pairs. Unsatisfiable
/// synchronized labels are pruned, so the output is feasible.
inline Sfa product(const Sfa& a, const Sfa& b, ProductMode mode, OpCounters* counters = nullptr) {
    detail::require_same_binding(a, b);
    if (mode == ProductMode::Union) {
        if (!is_deterministic(a) || !is_deterministic(b) || !is_complete(a) || !is_complete(b)) {
            throw Error("union product needs deterministic and complete operands");
        }
    }
    return with_algebra(a.binding(), [&](const auto& alg) {
        const auto ra = detail::transition_regions(alg, a);
        const auto rb = detail::transition_regions(alg, b);
        const auto oa = a.outgoing();
        const auto ob = b.outgoing();

        Sfa out(a.binding());
        std::map<std::pair<StateId, StateId>, StateId> ids;
        std::deque<std::pair<StateId, StateId>> work;
        auto intern = [&](StateId p, StateId q) {
            auto [it, inserted] = ids.try_emplace({p, q}, 0);
            if (inserted) {
                const bool acc = mode == ProductMode::Intersect ? (a.is_accepting(p) && b.is_accepting(q))
                                                                : (a.is_accepting(p) || b.is_accepting(q));
                it->second = out.add_state("(" + a.state_name(p) + "," + b.state_name(q) + ")", acc);
                work.emplace_back(p, q);
            }
            return it->second;
        };
        out.set_initial(intern(a.initial(), b.initial()));
        while (!work.empty()) {
            auto [p, q] = work.front();
            work.pop_front();
            const StateId from = ids.at({p, q});
            for (auto i : oa[p]) {
                for (auto j : ob[q]) {
                    detail::count_conj(counters);
                    detail::count_sat(counters);
                    auto both = alg.meet(ra[i], rb[j]);
                    if (alg.is_empty(both)) {
                        continue;
                    }
                    const auto& ti = a.transitions()[i];
                    const auto& tj = b.transitions()[j];
                    auto label = detail::product_label(alg, ti.pred, tj.pred, both);
                    const StateId to = intern(ti.to, tj.to);
                    out.add_transition_unique(from, label, to);
                }
            }
        }
        return out;
    });
}

/// Completes a deterministic automaton and swaps accepting states.
inline Sfa complement(const Sfa& a, OpCounters* counters = nullptr) {
    if (!is_deterministic(a, counters)) {
        throw Error("complement needs a deterministic automaton; determinize first");
    }
    Sfa c = complete(a, counters);
    for (StateId q = 0; q < c.state_count(); ++q) {
        c.set_accepting(q, !c.is_accepting(q));
    }
    return c;
}

/// Subset construction with minterms.
///
/// For a macro-state, every outgoing component transition splits the
/// current regions into the part inside and outside its label; empty parts
/// are pruned as soon as they appear. The all-negative minterm is dropped.
/// Minterms leading to the same macro-state are joined and emitted as
/// pairwise-disjoint basic labels, so the output is always neat.
inline Sfa determinize(const Sfa& a, OpCounters* counters = nullptr) {
    return with_algebra(a.binding(), [&](const auto& alg) {
        using Region = typename std::decay_t<decltype(alg)>::region_type;
        const auto regions = detail::transition_regions(alg, a);
        const auto outgoing = a.outgoing();

        Sfa out(a.binding());
        std::map<std::vector<StateId>, StateId> ids;
        std::deque<std::vector<StateId>> work;
        auto intern = [&](const std::vector<StateId>& set) {
            auto [it, inserted] = ids.try_emplace(set, 0);
            if (inserted) {
                std::string name = "{";
                bool acc = false;
                for (std::size_t i = 0; i < set.size(); ++i) {
                    name += (i ? "," : "") + a.state_name(set[i]);
                    acc = acc || a.is_accepting(set[i]);
                }
                it->second = out.add_state(name + "}", acc);
                work.push_back(set);
            }
            return it->second;
        };
        out.set_initial(intern({a.initial()}));

        while (!work.empty()) {
            const auto macro = work.front();
            work.pop_front();
            const StateId from = ids.at(macro);

            std::vector<std::size_t> ts;
            for (auto q : macro) {
                ts.insert(ts.end(), outgoing[q].begin(), outgoing[q].end());
            }
            struct Minterm {
                Region region;
                std::vector<StateId> targets;
            };
            std::vector<Minterm> minterms{Minterm{alg.top(), {}}};
            for (auto i : ts) {
                std::vector<Minterm> next;
                const auto negated = alg.complement(regions[i]);
                for (auto& mt : minterms) {
                    detail::count_conj(counters, 2);
                    detail::count_sat(counters);
                    detail::count_sat(counters);
                    auto in = alg.meet(mt.region, regions[i]);
                    auto out_part = alg.meet(mt.region, negated);
                    if (!alg.is_empty(in)) {
                        auto targets = mt.targets;
                        targets.push_back(a.transitions()[i].to);
                        next.push_back(Minterm{std::move(in), std::move(targets)});
                    }
                    if (!alg.is_empty(out_part)) {
                        next.push_back(Minterm{std::move(out_part), std::move(mt.targets)});
                    }
                }
                minterms = std::move(next);
            }

            std::map<std::vector<StateId>, Region> by_target;
            for (auto& mt : minterms) {
                if (mt.targets.empty()) {
                    continue;
                }
                std::sort(mt.targets.begin(), mt.targets.end());
                mt.targets.erase(std::unique(mt.targets.begin(), mt.targets.end()), mt.targets.end());
                auto [it, inserted] = by_target.try_emplace(mt.targets, mt.region);
                if (!inserted) {
                    detail::count_disj(counters);
                    it->second = alg.join(it->second, mt.region);
                }
            }
            for (const auto& [targets, region] : by_target) {
                const StateId to = intern(targets);
                for (const auto& p : alg.basic_cover(region)) {
                    out.add_transition(from, p, to);
                }
            }
        }
        return out;
    });
}

/// Moore-style minimization of a deterministic automaton.
///
/// Unreachable states are removed and the automaton is completed. Starting
/// from {F, Q\F}, each block is split by the target blocks its states take
/// on the minterms of the block's outgoing labels, until stable. The
/// quotient keeps the transitions of one representative per block. If the
/// input was incomplete, the dead block introduced by completion is removed
/// again, and the edges added by completion are never copied.
inline Sfa minimize(const Sfa& input, OpCounters* counters = nullptr) {
    if (!is_deterministic(input, counters)) {
        throw Error("minimize needs a deterministic automaton; determinize first");
    }
    const Sfa reach = restrict_states(input, reachable_states(input));
    const bool neat = is_neat(reach);
    const Sfa a = complete(reach, counters);
    const bool was_complete = a.state_count() == reach.state_count();
    // complete() only appends, so these indices are the input's own edges
    const std::size_t own_edges = reach.transitions().size();

    return with_algebra(a.binding(), [&](const auto& alg) {
        using Alg = std::decay_t<decltype(alg)>;
        using Region = typename Alg::region_type;
        const auto regions = detail::transition_regions(alg, a);
        const auto outgoing = a.outgoing();
        const std::size_t n = a.state_count();

        std::vector<std::size_t> block(n);
        std::size_t block_count = 0;
        {
            std::map<bool, std::size_t> first;
            for (StateId q = 0; q < n; ++q) {
                auto [it, inserted] = first.try_emplace(a.is_accepting(q), block_count);
                block_count += inserted ? 1 : 0;
                block[q] = it->second;
            }
        }

        while (true) {
            std::vector<std::vector<StateId>> members(block_count);
            for (StateId q = 0; q < n; ++q) {
                members[block[q]].push_back(q);
            }
            std::vector<std::size_t> next(n);
            std::size_t next_count = 0;
            for (const auto& states : members) {
                std::vector<std::size_t> ts;
                for (auto q : states) {
                    ts.insert(ts.end(), outgoing[q].begin(), outgoing[q].end());
                }
                // minterm -> set of block transitions whose label contains it
                std::vector<std::pair<Region, std::vector<bool>>> minterms{{alg.top(), std::vector<bool>(ts.size())}};
                for (std::size_t k = 0; k < ts.size(); ++k) {
                    std::vector<std::pair<Region, std::vector<bool>>> split;
                    const auto negated = alg.complement(regions[ts[k]]);
                    for (auto& [region, inside] : minterms) {
                        detail::count_conj(counters, 2);
                        detail::count_sat(counters);
                        detail::count_sat(counters);
                        auto in = alg.meet(region, regions[ts[k]]);
                        auto out_part = alg.meet(region, negated);
                        if (!alg.is_empty(in)) {
                            auto flags = inside;
                            flags[k] = true;
                            split.emplace_back(std::move(in), std::move(flags));
                        }
                        if (!alg.is_empty(out_part)) {
                            split.emplace_back(std::move(out_part), std::move(inside));
                        }
                    }
                    minterms = std::move(split);
                }
                std::map<std::vector<std::size_t>, std::size_t> by_signature;
                std::size_t offset = 0;
                for (auto q : states) {
                    const std::size_t base = offset;
                    offset += outgoing[q].size();
                    std::vector<std::size_t> signature;
                    signature.reserve(minterms.size());
                    for (const auto& [region, inside] : minterms) {
                        std::size_t target = block_count;  // unreachable on complete input
                        for (std::size_t k = 0; k < outgoing[q].size(); ++k) {
                            if (inside[base + k]) {
                                target = block[a.transitions()[outgoing[q][k]].to];
                                break;
                            }
                        }
                        signature.push_back(target);
                    }
                    auto [it, inserted] = by_signature.try_emplace(std::move(signature), next_count);
                    next_count += inserted ? 1 : 0;
                    next[q] = it->second;
                }
            }
            const bool stable = next_count == block_count;
            block = std::move(next);
            block_count = next_count;
            if (stable) {
                break;
            }
        }

        // Renumber blocks in order of their first state.
        std::vector<std::size_t> order(block_count, block_count);
        std::vector<StateId> rep;
        for (StateId q = 0; q < n; ++q) {
            if (order[block[q]] == block_count) {
                order[block[q]] = rep.size();
                rep.push_back(q);
            }
        }
        for (auto& b : block) {
            b = order[b];
        }

        std::vector<bool> keep(block_count, true);
        if (!was_complete) {
            // Blocks that cannot reach an accepting block are dead.
            std::vector<bool> live(block_count, false);
            for (std::size_t b = 0; b < block_count; ++b) {
                live[b] = a.is_accepting(rep[b]);
            }
            for (bool changed = true; changed;) {
                changed = false;
                for (const auto& t : a.transitions()) {
                    if (!live[block[t.from]] && live[block[t.to]]) {
                        live[block[t.from]] = true;
                        changed = true;
                    }
                }
            }
            keep = live;
            keep[block[a.initial()]] = true;
        }

        Sfa out(a.binding());
        std::vector<StateId> id(block_count, 0);
        for (std::size_t b = 0; b < block_count; ++b) {
            if (keep[b]) {
                id[b] = out.add_state(a.state_name(rep[b]), a.is_accepting(rep[b]));
            }
        }
        out.set_initial(id[block[a.initial()]]);
        for (std::size_t b = 0; b < block_count; ++b) {
            if (!keep[b]) {
                continue;
            }
            std::vector<std::size_t> ts;
            for (auto i : outgoing[rep[b]]) {
                if (i < own_edges) {
                    ts.push_back(i);
                }
            }
            if constexpr (Alg::monotonic) {
                std::map<std::size_t, Region> by_target;
                for (auto i : ts) {
                    const std::size_t tb = block[a.transitions()[i].to];
                    auto [it, inserted] = by_target.try_emplace(tb, regions[i]);
                    if (!inserted) {
                        detail::count_disj(counters);
                        it->second = alg.join(it->second, regions[i]);
                    }
                }
                for (const auto& [tb, region] : by_target) {
                    if (!keep[tb]) {
                        continue;
                    }
                    if (neat) {
                        for (const auto& p : alg.basic_cover(region)) {
                            out.add_transition(id[b], p, id[tb]);
                        }
                    } else if (!alg.is_empty(region)) {
                        out.add_transition(id[b], alg.to_predicate(region), id[tb]);
                    }
                }
            } else {
                for (auto i : ts) {
                    const std::size_t tb = block[a.transitions()[i].to];
                    if (keep[tb] && !alg.is_empty(regions[i])) {
                        out.add_transition_unique(id[b], a.transitions()[i].pred, id[tb]);
                    }
                }
            }
        }
        return out;
    });
}

/// Reachability of an accepting state. Without assume_feasible each explored
/// transition costs one satisfiability check and unsatisfiable ones are
/// not followed.
inline bool is_empty(const Sfa& a, bool assume_feasible, OpCounters* counters = nullptr) {
    std::vector<bool> seen(a.state_count(), false);
    std::vector<StateId> stack{a.initial()};
    seen[a.initial()] = true;
    const auto outgoing = a.outgoing();
    while (!stack.empty()) {
        const StateId q = stack.back();
        stack.pop_back();
        if (a.is_accepting(q)) {
            return false;
        }
        for (auto i : outgoing[q]) {
            const auto& t = a.transitions()[i];
            if (seen[t.to]) {
                continue;
            }
            if (!assume_feasible && !sat(a.binding(), t.pred, counters)) {
                continue;
            }
            seen[t.to] = true;
            stack.push_back(t.to);
        }
    }
    return true;
}

/// Shortest accepted word (breadth-first), built from satisfiability
/// witnesses of the transition labels.
inline std::optional<Word> accepted_word(const Sfa& a, OpCounters* counters = nullptr) {
    std::vector<std::optional<std::pair<StateId, Letter>>> parent(a.state_count());
    std::vector<bool> seen(a.state_count(), false);
    std::deque<StateId> work{a.initial()};
    seen[a.initial()] = true;
    const auto outgoing = a.outgoing();
    while (!work.empty()) {
        const StateId q = work.front();
        work.pop_front();
        if (a.is_accepting(q)) {
            Word w;
            for (StateId s = q; parent[s]; s = parent[s]->first) {
                w.push_back(parent[s]->second);
            }
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (auto i : outgoing[q]) {
            const auto& t = a.transitions()[i];
            if (seen[t.to]) {
                continue;
            }
            if (auto x = sat(a.binding(), t.pred, counters)) {
                seen[t.to] = true;
                parent[t.to] = std::make_pair(q, *x);
                work.push_back(t.to);
            }
        }
    }
    return std::nullopt;
}

namespace detail {

inline Sfa inclusion_witness_automaton(const Sfa& a, const Sfa& b, OpCounters* counters) {
    require_same_binding(a, b);
    const Sfa det_b = is_deterministic(b, counters) ? b : determinize(b, counters);
    return product(a, complement(det_b, counters), ProductMode::Intersect, counters);
}

}  // namespace detail

/// L(a) ⊆ L(b), via emptiness of a ∩ complement(b). b is determinized
/// first when it is not deterministic.
inline bool includes(const Sfa& a, const Sfa& b, OpCounters* counters = nullptr) {
    return is_empty(detail::inclusion_witness_automaton(a, b, counters), true, counters);
}

/// A word in L(a) \ L(b), if any.
inline std::optional<Word> inclusion_counterexample(const Sfa& a, const Sfa& b, OpCounters* counters = nullptr) {
    return accepted_word(detail::inclusion_witness_automaton(a, b, counters), counters);
}

inline bool equivalent(const Sfa& a, const Sfa& b, OpCounters* counters = nullptr) {
    return includes(a, b, counters) && includes(b, a, counters);
}

}  // namespace symfa

#endif
