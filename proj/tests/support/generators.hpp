#ifndef SYMFA_TESTS_GENERATORS_HPP
#define SYMFA_TESTS_GENERATORS_HPP

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <symfa/symfa.hpp>

// Random predicates, automata and language-preserving rewrites for
// property tests. Everything is driven by an explicit std::mt19937_64.

namespace symfa::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// Random interval atom with endpoints in [lo, hi]; occasionally unbounded.
inline IntervalAtom random_interval_atom(Rng& rng, std::int64_t lo = 0, std::int64_t hi = 40) {
    while (true) {
        Bound a = coin(rng, 0.1) ? Bound::neg_inf() : Bound::finite(uniform_int(rng, lo, hi));
        Bound b = coin(rng, 0.1) ? Bound::pos_inf() : Bound::finite(uniform_int(rng, lo, hi));
        if (auto atom = IntervalAtom::make(std::min(a, b), std::max(a, b))) {
            return *atom;
        }
    }
}

/// Random predicate tree with predicate_size at most budget (>= 1).
inline Predicate random_interval_predicate(Rng& rng, std::size_t budget, std::int64_t lo = 0, std::int64_t hi = 40) {
    if (budget < 3 || coin(rng, 0.2)) {
        if (budget >= 2 && coin(rng, 0.25)) {
            return Predicate::negation(random_interval_predicate(rng, budget - 1, lo, hi));
        }
        if (coin(rng, 0.03)) {
            return coin(rng) ? Predicate::truth() : Predicate::falsity();
        }
        return Predicate::atom(random_interval_atom(rng, lo, hi));
    }
    if (coin(rng, 0.15)) {
        return Predicate::negation(random_interval_predicate(rng, budget - 1, lo, hi));
    }
    const std::size_t arity = uniform(rng, 2, std::min<std::size_t>(4, (budget + 1) / 2));
    std::size_t rest = budget - (arity - 1);
    std::vector<Predicate> cs;
    for (std::size_t i = 0; i < arity; ++i) {
        const std::size_t left = arity - i - 1;
        const std::size_t share = i + 1 == arity ? rest : uniform(rng, 1, rest - left);
        cs.push_back(random_interval_predicate(rng, share, lo, hi));
        rest -= share;
    }
    return coin(rng) ? Predicate::conjunction(std::move(cs)) : Predicate::disjunction(std::move(cs));
}

inline Predicate random_monomial(Rng& rng, std::size_t k, std::size_t max_len) {
    std::vector<Predicate> lits;
    const std::size_t len = uniform(rng, 1, max_len);
    for (std::size_t i = 0; i < len; ++i) {
        lits.push_back(literal(static_cast<std::uint8_t>(uniform(rng, 0, k - 1)), coin(rng)));
    }
    return lits.size() == 1 ? lits.front() : Predicate::conjunction(std::move(lits));
}

inline Predicate random_prop_predicate(Rng& rng, std::size_t k, std::size_t budget) {
    if (budget < 3 || coin(rng, 0.25)) {
        if (budget >= 2 && coin(rng, 0.2)) {
            return Predicate::negation(random_prop_predicate(rng, k, budget - 1));
        }
        return literal(static_cast<std::uint8_t>(uniform(rng, 0, k - 1)), coin(rng));
    }
    const std::size_t left = uniform(rng, 1, budget - 2);
    auto a = random_prop_predicate(rng, k, left);
    auto b = random_prop_predicate(rng, k, budget - 1 - left);
    return coin(rng) ? Predicate::conjunction({a, b}) : Predicate::disjunction({a, b});
}

struct SfaShape {
    std::size_t max_states = 5;
    std::size_t max_degree = 4;
    bool neat = true;
    bool deterministic = false;
    bool complete = false;  // only honored when deterministic
    bool join_pieces = false;  // non-neat deterministic labels may join two pieces
    std::int64_t lo = 0;
    std::int64_t hi = 40;
    std::size_t pred_budget = 7;
};

inline Sfa random_states(Rng& rng, const AlgebraBinding& b, std::size_t n) {
    Sfa a(b);
    for (std::size_t i = 0; i < n; ++i) {
        a.add_state("s" + std::to_string(i), coin(rng, 0.4));
    }
    a.set_initial(0);
    return a;
}

/// Deterministic interval edges: a random partition of the line into at
/// most max_degree pieces, each routed to a random target (or dropped).
inline void add_interval_partition(Rng& rng, Sfa& a, StateId q, const SfaShape& shape) {
    const std::size_t piece_count = uniform(rng, 1, shape.max_degree);
    std::set<std::int64_t> cuts;
    while (cuts.size() + 1 < piece_count) {
        cuts.insert(uniform_int(rng, shape.lo, shape.hi));
    }
    std::vector<Bound> bounds{Bound::neg_inf()};
    for (auto c : cuts) {
        bounds.push_back(Bound::finite(c));
    }
    bounds.push_back(Bound::pos_inf());
    std::vector<Predicate> pieces;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        if (!shape.complete && coin(rng, 0.2)) {
            continue;
        }
        auto atom = IntervalAtom::make(bounds[i], bounds[i + 1]);
        if (!atom) {
            continue;
        }
        Predicate p = Predicate::atom(*atom);
        if (!shape.neat && coin(rng, 0.3)) {
            p = Predicate::negation(Predicate::negation(p));
        } else if (coin(rng, 0.2)) {
            // basic but not atomic: conjunction with a superset interval
            p = Predicate::conjunction({p, Predicate::atom(IntervalAtom(bounds[i], Bound::pos_inf()))});
        }
        pieces.push_back(p);
    }
    if (!shape.neat && shape.join_pieces && pieces.size() >= 3 && coin(rng, 0.6)) {
        // two non-adjacent pieces share one label
        const std::size_t i = uniform(rng, 0, pieces.size() - 3);
        const std::size_t j = uniform(rng, i + 2, pieces.size() - 1);
        pieces[i] = Predicate::disjunction({pieces[i], pieces[j]});
        pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(j));
    }
    for (auto& p : pieces) {
        a.add_transition(q, std::move(p), uniform(rng, 0, a.state_count() - 1));
    }
}

/// Deterministic monomial edges: disjoint cubes from random variable splits.
inline void add_cube_partition(Rng& rng, Sfa& a, StateId q, std::size_t k, const SfaShape& shape) {
    std::vector<Monomial> cubes{Monomial{}};
    while (cubes.size() < shape.max_degree && coin(rng, 0.7)) {
        const std::size_t pick = uniform(rng, 0, cubes.size() - 1);
        Monomial c = cubes[pick];
        std::vector<std::uint8_t> free;
        for (std::uint8_t v = 0; v < k; ++v) {
            if (std::none_of(c.begin(), c.end(), [&](const LiteralAtom& l) { return l.var == v; })) {
                free.push_back(v);
            }
        }
        if (free.empty()) {
            break;
        }
        const auto v = free[uniform(rng, 0, free.size() - 1)];
        Monomial pos = c;
        Monomial neg = c;
        pos.push_back(LiteralAtom{v, false});
        neg.push_back(LiteralAtom{v, true});
        std::sort(pos.begin(), pos.end());
        std::sort(neg.begin(), neg.end());
        cubes[pick] = pos;
        cubes.push_back(neg);
    }
    for (const auto& c : cubes) {
        if (!shape.complete && coin(rng, 0.2)) {
            continue;
        }
        Predicate p = monomial_predicate(c);
        if (!shape.neat && coin(rng, 0.3)) {
            p = Predicate::negation(Predicate::negation(p));
        }
        a.add_transition(q, p, uniform(rng, 0, a.state_count() - 1));
    }
}

inline Sfa random_interval_sfa(Rng& rng, const SfaShape& shape,
                               const AlgebraBinding& binding = AlgebraBinding::interval()) {
    Sfa a = random_states(rng, binding, uniform(rng, 1, shape.max_states));
    for (StateId q = 0; q < a.state_count(); ++q) {
        if (shape.deterministic) {
            add_interval_partition(rng, a, q, shape);
            continue;
        }
        const std::size_t degree = uniform(rng, 0, shape.max_degree);
        for (std::size_t i = 0; i < degree; ++i) {
            Predicate p = shape.neat ? Predicate::atom(random_interval_atom(rng, shape.lo, shape.hi))
                                     : random_interval_predicate(rng, uniform(rng, 1, shape.pred_budget), shape.lo,
                                                                 shape.hi);
            if (shape.neat && coin(rng, 0.15)) {
                p = Predicate::conjunction({p, Predicate::atom(random_interval_atom(rng, shape.lo, shape.hi))});
            }
            a.add_transition_unique(q, p, uniform(rng, 0, a.state_count() - 1));
        }
    }
    return a;
}

inline Sfa random_prop_sfa(Rng& rng, std::size_t k, const SfaShape& shape) {
    Sfa a = random_states(rng, AlgebraBinding::propositional(k), uniform(rng, 1, shape.max_states));
    for (StateId q = 0; q < a.state_count(); ++q) {
        if (shape.deterministic) {
            add_cube_partition(rng, a, q, k, shape);
            continue;
        }
        const std::size_t degree = uniform(rng, 0, shape.max_degree);
        for (std::size_t i = 0; i < degree; ++i) {
            Predicate p = shape.neat ? random_monomial(rng, k, std::min<std::size_t>(k, 3))
                                     : random_prop_predicate(rng, k, uniform(rng, 1, shape.pred_budget));
            a.add_transition_unique(q, p, uniform(rng, 0, a.state_count() - 1));
        }
    }
    return a;
}

/// Random word over a finite alphabet.
inline Word random_word(Rng& rng, const std::vector<Letter>& alphabet, std::size_t max_len) {
    Word w;
    const std::size_t len = uniform(rng, 0, max_len);
    for (std::size_t i = 0; i < len; ++i) {
        w.push_back(alphabet[uniform(rng, 0, alphabet.size() - 1)]);
    }
    return w;
}

// ---------------------------------------------------------------------------
// Language-preserving rewrites (interval binding).

/// Semantically equal, syntactically different predicate.
/// A random atom of the binding's algebra.
inline Predicate random_cut(Rng& rng, const AlgebraBinding& b) {
    if (b.is_interval()) {
        return Predicate::atom(random_interval_atom(rng));
    }
    return Predicate::atom(LiteralAtom{static_cast<std::uint8_t>(uniform(rng, 0, b.arity() - 1)), coin(rng)});
}

inline Predicate reexpress(Rng& rng, const Predicate& p, const AlgebraBinding& b) {
    switch (uniform(rng, 0, 4)) {
        case 0: return Predicate::negation(Predicate::negation(p));
        case 1:
            if (b.is_interval()) {
                return to_dnf(p, b.domain()).to_predicate();
            }
            return Predicate::negation(Predicate::negation(p));
        case 2: return Predicate::conjunction({p, Predicate::truth()});
        case 3: return Predicate::disjunction({p, Predicate::falsity()});
        default: {
            // p = (p ∧ a) ∨ (p ∧ ¬a)
            auto a = random_cut(rng, b);
            return Predicate::disjunction(
                {Predicate::conjunction({p, a}), Predicate::conjunction({p, Predicate::negation(a)})});
        }
    }
}

/// Copies state q into a fresh equivalent state and redirects a random
/// subset of the edges entering q to the copy.
inline Sfa split_state(Rng& rng, const Sfa& a) {
    const StateId q = uniform(rng, 0, a.state_count() - 1);
    Sfa out = a;
    const StateId copy = out.add_state(fresh_state_name(a, a.state_name(q) + "'"), a.is_accepting(q));
    std::vector<Transition> ts;
    for (const auto& t : a.transitions()) {
        Transition moved = t;
        if (t.to == q && coin(rng)) {
            moved.to = copy;
        }
        ts.push_back(moved);
    }
    for (const auto& t : a.transitions()) {
        if (t.from == q) {
            ts.push_back(Transition{copy, t.pred, t.to == q && coin(rng) ? copy : t.to});
        }
    }
    out.set_transitions(std::move(ts));
    return out;
}

/// Replaces one edge by two whose labels partition it.
inline Sfa split_edge(Rng& rng, const Sfa& a) {
    if (a.transitions().empty()) {
        return a;
    }
    auto ts = a.transitions();
    const std::size_t i = uniform(rng, 0, ts.size() - 1);
    const auto cut = random_cut(rng, a.binding());
    const Transition t = ts[i];
    ts[i].pred = mk_and({t.pred, cut});
    ts.push_back(Transition{t.from, Predicate::conjunction({t.pred, Predicate::negation(cut)}), t.to});
    Sfa out = a;
    out.set_transitions(std::move(ts));
    return out;
}

inline Sfa rewrite_labels(Rng& rng, const Sfa& a) {
    auto ts = a.transitions();
    for (auto& t : ts) {
        if (coin(rng, 0.4)) {
            t.pred = reexpress(rng, t.pred, a.binding());
        }
    }
    Sfa out = a;
    out.set_transitions(std::move(ts));
    return out;
}

/// A random chain of language-preserving rewrites.
inline Sfa equivalent_variant(Rng& rng, const Sfa& a, std::size_t steps = 4) {
    Sfa out = a;
    for (std::size_t i = 0; i < steps; ++i) {
        switch (uniform(rng, 0, 3)) {
            case 0: out = split_state(rng, out); break;
            case 1: out = split_edge(rng, out); break;
            case 2: out = to_normalized(out); break;
            default: out = rewrite_labels(rng, out); break;
        }
    }
    return out;
}

}  // namespace symfa::testing

#endif
