#ifndef SYMFA_SFA_HPP
#define SYMFA_SFA_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "algebra.hpp"
#include "predicate.hpp"

namespace symfa {

using StateId = std::size_t;

struct Transition {
    StateId from = 0;
    Predicate pred;
    StateId to = 0;

    friend bool operator==(const Transition&, const Transition&) = default;
    friend std::strong_ordering operator<=>(const Transition& a, const Transition& b) {
        if (auto c = a.from <=> b.from; c != 0) {
            return c;
        }
        if (auto c = a.to <=> b.to; c != 0) {
            return c;
        }
        return compare(a.pred, b.pred);
    }
};

/// <n, m, l>: states, maximal out-degree, largest predicate size.
struct SizeTriple {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t l = 0;

    friend bool operator==(const SizeTriple&, const SizeTriple&) = default;
};

/// Symbolic finite automaton with named states and a single initial state.
///
/// States are dense ids; names are the external identity and must be unique.
/// add_transition does not check endpoints or duplicates so that validate()
/// can report them.
class Sfa {
public:
    explicit Sfa(AlgebraBinding binding) : binding_(std::move(binding)) {}

    StateId add_state(std::string name, bool accepting = false) {
        if (name.empty()) {
            throw Error("empty state name");
        }
        if (index_.contains(name)) {
            throw Error("duplicate state '" + name + "'");
        }
        const StateId id = names_.size();
        index_.emplace(name, id);
        names_.push_back(std::move(name));
        accepting_.push_back(accepting);
        return id;
    }

    void set_initial(StateId q) {
        check_state(q);
        initial_ = q;
    }
    void set_accepting(StateId q, bool accepting = true) {
        check_state(q);
        accepting_[q] = accepting;
    }
    void add_transition(StateId from, Predicate pred, StateId to) {
        transitions_.push_back(Transition{from, std::move(pred), to});
    }
    /// Appends unless an identical triple is already present.
    bool add_transition_unique(StateId from, const Predicate& pred, StateId to) {
        Transition t{from, pred, to};
        if (std::find(transitions_.begin(), transitions_.end(), t) != transitions_.end()) {
            return false;
        }
        transitions_.push_back(std::move(t));
        return true;
    }
    void set_transitions(std::vector<Transition> ts) { transitions_ = std::move(ts); }

    const AlgebraBinding& binding() const { return binding_; }
    std::size_t state_count() const { return names_.size(); }
    const std::string& state_name(StateId q) const { return names_.at(q); }
    const std::vector<std::string>& state_names() const { return names_; }
    std::optional<StateId> find_state(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }
    StateId initial() const { return initial_; }
    bool is_accepting(StateId q) const { return accepting_.at(q); }
    const std::vector<Transition>& transitions() const { return transitions_; }

    /// Transition indices grouped by source state.
    std::vector<std::vector<std::size_t>> outgoing() const {
        std::vector<std::vector<std::size_t>> out(state_count());
        for (std::size_t i = 0; i < transitions_.size(); ++i) {
            if (transitions_[i].from < out.size()) {
                out[transitions_[i].from].push_back(i);
            }
        }
        return out;
    }

    friend bool operator==(const Sfa& a, const Sfa& b) {
        return a.binding_ == b.binding_ && a.names_ == b.names_ && a.initial_ == b.initial_ &&
               a.accepting_ == b.accepting_ && a.transitions_ == b.transitions_;
    }

private:
    void check_state(StateId q) const {
        if (q >= names_.size()) {
            throw Error("unknown state " + std::to_string(q));
        }
    }

    AlgebraBinding binding_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, StateId> index_;
    std::vector<bool> accepting_;
    StateId initial_ = 0;
    std::vector<Transition> transitions_;
};

/// Structural equality up to transition order.
inline bool same_up_to_transition_order(const Sfa& a, const Sfa& b) {
    if (a.binding() != b.binding() || a.state_names() != b.state_names() || a.initial() != b.initial()) {
        return false;
    }
    for (StateId q = 0; q < a.state_count(); ++q) {
        if (a.is_accepting(q) != b.is_accepting(q)) {
            return false;
        }
    }
    auto ta = a.transitions();
    auto tb = b.transitions();
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    return ta == tb;
}

inline std::vector<std::string> validate(const Sfa& a) {
    std::vector<std::string> issues;
    if (a.state_count() == 0) {
        issues.emplace_back("automaton has no states");
    } else if (a.initial() >= a.state_count()) {
        issues.emplace_back("unknown initial state " + std::to_string(a.initial()));
    }
    const auto& ts = a.transitions();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const auto& t = ts[i];
        for (StateId q : {t.from, t.to}) {
            if (q >= a.state_count()) {
                issues.push_back("unknown state " + std::to_string(q) + " in transition " + std::to_string(i));
            }
        }
        if (auto why = check_predicate(a.binding(), t.pred); !why.empty()) {
            issues.push_back("transition " + std::to_string(i) + ": " + why);
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (ts[j] == t) {
                issues.push_back("duplicate transition " + std::to_string(i) + " (same as " + std::to_string(j) + ")");
                break;
            }
        }
    }
    return issues;
}

inline bool is_deterministic(const Sfa& a, OpCounters* counters = nullptr) {
    const auto& ts = a.transitions();
    for (const auto& out : a.outgoing()) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            for (std::size_t j = i + 1; j < out.size(); ++j) {
                detail::count_conj(counters);
                if (sat(a.binding(), mk_and({ts[out[i]].pred, ts[out[j]].pred}), counters)) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool is_complete(const Sfa& a, OpCounters* counters = nullptr) {
    const auto& ts = a.transitions();
    for (const auto& out : a.outgoing()) {
        std::vector<Predicate> ps;
        for (auto i : out) {
            ps.push_back(ts[i].pred);
        }
        detail::count_disj(counters);
        if (sat(a.binding(), mk_not(mk_or(ps)), counters)) {
            return false;
        }
    }
    return true;
}

inline bool is_neat(const Sfa& a) {
    return std::all_of(a.transitions().begin(), a.transitions().end(),
                       [](const Transition& t) { return is_basic(t.pred); });
}

inline bool is_normalized(const Sfa& a) {
    std::vector<std::pair<StateId, StateId>> pairs;
    for (const auto& t : a.transitions()) {
        pairs.emplace_back(t.from, t.to);
    }
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

inline bool is_feasible(const Sfa& a, OpCounters* counters = nullptr) {
    return std::all_of(a.transitions().begin(), a.transitions().end(), [&](const Transition& t) {
        return sat(a.binding(), t.pred, counters).has_value();
    });
}

/// Frontier simulation; exact for nondeterministic automata too.
inline bool membership(const Sfa& a, const Word& word) {
    std::vector<bool> frontier(a.state_count(), false);
    frontier[a.initial()] = true;
    const auto out = a.outgoing();
    for (const auto& letter : word) {
        std::vector<bool> next(a.state_count(), false);
        bool any = false;
        for (StateId q = 0; q < a.state_count(); ++q) {
            if (!frontier[q]) {
                continue;
            }
            for (auto i : out[q]) {
                const auto& t = a.transitions()[i];
                if (!next[t.to] && eval(a.binding(), t.pred, letter)) {
                    next[t.to] = true;
                    any = true;
                }
            }
        }
        if (!any) {
            return false;
        }
        frontier = std::move(next);
    }
    for (StateId q = 0; q < a.state_count(); ++q) {
        if (frontier[q] && a.is_accepting(q)) {
            return true;
        }
    }
    return false;
}

inline SizeTriple size_triple(const Sfa& a) {
    SizeTriple s;
    s.n = a.state_count();
    for (const auto& out : a.outgoing()) {
        s.m = std::max(s.m, out.size());
    }
    for (const auto& t : a.transitions()) {
        s.l = std::max(s.l, predicate_size(t.pred));
    }
    return s;
}

/// States reachable from the initial state.
inline std::vector<bool> reachable_states(const Sfa& a) {
    std::vector<bool> seen(a.state_count(), false);
    std::vector<StateId> stack{a.initial()};
    seen[a.initial()] = true;
    const auto out = a.outgoing();
    while (!stack.empty()) {
        const StateId q = stack.back();
        stack.pop_back();
        for (auto i : out[q]) {
            const StateId p = a.transitions()[i].to;
            if (!seen[p]) {
                seen[p] = true;
                stack.push_back(p);
            }
        }
    }
    return seen;
}

/// Copy restricted to the given states (order and names preserved).
inline Sfa restrict_states(const Sfa& a, const std::vector<bool>& keep) {
    Sfa out(a.binding());
    std::vector<StateId> remap(a.state_count(), 0);
    for (StateId q = 0; q < a.state_count(); ++q) {
        if (keep[q]) {
            remap[q] = out.add_state(a.state_name(q), a.is_accepting(q));
        }
    }
    out.set_initial(remap[a.initial()]);
    for (const auto& t : a.transitions()) {
        if (keep[t.from] && keep[t.to]) {
            out.add_transition(remap[t.from], t.pred, remap[t.to]);
        }
    }
    return out;
}

/// A state name not yet used in a, derived from base.
inline std::string fresh_state_name(const Sfa& a, const std::string& base) {
    if (!a.find_state(base)) {
        return base;
    }
    for (std::size_t i = 1;; ++i) {
        auto candidate = base + "_" + std::to_string(i);
        if (!a.find_state(candidate)) {
            return candidate;
        }
    }
}

}  // namespace symfa

#endif
