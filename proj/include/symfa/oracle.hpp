#ifndef SYMFA_ORACLE_HPP
#define SYMFA_ORACLE_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sfa.hpp"

// Brute-force ground truth over a finite alphabet. Only eval is used here;
// nothing in this header goes through sat, regions or the symbolic
// operations, so it can check them.

namespace symfa::oracle {

/// Explicit DFA; delta[state][letter index] is total.
struct ConcreteDfa {
    std::vector<Letter> alphabet;
    std::size_t initial = 0;
    std::vector<bool> accepting;
    std::vector<std::vector<std::size_t>> delta;

    std::size_t state_count() const { return delta.size(); }

    std::optional<std::size_t> letter_index(const Letter& l) const {
        auto it = std::find(alphabet.begin(), alphabet.end(), l);
        if (it == alphabet.end()) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - alphabet.begin());
    }

    bool accepts(const Word& w) const {
        std::size_t q = initial;
        for (const auto& l : w) {
            auto i = letter_index(l);
            if (!i) {
                throw Error("letter " + to_string(l) + " outside the oracle alphabet");
            }
            q = delta[q][*i];
        }
        return accepting[q];
    }
};

namespace detail {

inline void collect_endpoints(const Predicate& p, std::set<std::int64_t>& out) {
    if (p.is_atom()) {
        if (const auto* ia = std::get_if<IntervalAtom>(&p.atom_value())) {
            for (const auto& b : {ia->lo(), ia->hi()}) {
                if (b.is_finite()) {
                    out.insert(b.value());
                }
            }
        }
        return;
    }
    for (const auto& c : p.children()) {
        collect_endpoints(c, out);
    }
}

}  // namespace detail

/// Interval binding: every integer from (least endpoint - 2) to
/// (greatest endpoint + 2), clipped to the domain. Propositional binding:
/// all valuations in lexicographic order.
inline std::vector<Letter> default_alphabet(std::initializer_list<const Sfa*> automata) {
    const auto& binding = (*automata.begin())->binding();
    std::vector<Letter> out;
    if (!binding.is_interval()) {
        const std::uint32_t count = 1u << binding.arity();
        for (std::uint32_t r = 0; r < count; ++r) {
            out.emplace_back(Valuation::from_lex_rank(r, binding.arity()));
        }
        return out;
    }
    std::set<std::int64_t> ends;
    for (const auto& b : {binding.domain().lo(), binding.domain().hi()}) {
        if (b.is_finite()) {
            ends.insert(b.value());
        }
    }
    for (const Sfa* a : automata) {
        for (const auto& t : a->transitions()) {
            detail::collect_endpoints(t.pred, ends);
        }
    }
    std::int64_t lo = ends.empty() ? 0 : *ends.begin();
    std::int64_t hi = ends.empty() ? 0 : *ends.rbegin();
    for (std::int64_t x = lo - 2; x <= hi + 2; ++x) {
        if (binding.domain().contains(x)) {
            out.emplace_back(x);
        }
    }
    return out;
}

inline std::vector<Letter> default_alphabet(const Sfa& a) { return default_alphabet({&a}); }

/// Subset construction restricted to the alphabet; includes the empty
/// macro-state so the result is total.
inline ConcreteDfa concretize(const Sfa& a, const std::vector<Letter>& alphabet) {
    if (alphabet.empty()) {
        throw Error("oracle alphabet is empty");
    }
    const auto& ts = a.transitions();
    std::vector<std::vector<bool>> label(ts.size(), std::vector<bool>(alphabet.size()));
    for (std::size_t i = 0; i < ts.size(); ++i) {
        for (std::size_t x = 0; x < alphabet.size(); ++x) {
            label[i][x] = eval(a.binding(), ts[i].pred, alphabet[x]);
        }
    }
    ConcreteDfa dfa;
    dfa.alphabet = alphabet;
    std::map<std::vector<bool>, std::size_t> ids;
    std::deque<std::vector<bool>> work;
    auto intern = [&](const std::vector<bool>& set) {
        auto [it, inserted] = ids.try_emplace(set, dfa.delta.size());
        if (inserted) {
            bool acc = false;
            for (StateId q = 0; q < set.size(); ++q) {
                acc = acc || (set[q] && a.is_accepting(q));
            }
            dfa.accepting.push_back(acc);
            dfa.delta.emplace_back(alphabet.size(), 0);
            work.push_back(set);
        }
        return it->second;
    };
    std::vector<bool> init(a.state_count(), false);
    init[a.initial()] = true;
    dfa.initial = intern(init);
    while (!work.empty()) {
        const auto set = work.front();
        work.pop_front();
        const std::size_t from = ids.at(set);
        for (std::size_t x = 0; x < alphabet.size(); ++x) {
            std::vector<bool> next(a.state_count(), false);
            for (std::size_t i = 0; i < ts.size(); ++i) {
                if (set[ts[i].from] && label[i][x]) {
                    next[ts[i].to] = true;
                }
            }
            const std::size_t to = intern(next);
            dfa.delta[from][x] = to;
        }
    }
    return dfa;
}

inline bool dfa_empty(const ConcreteDfa& d) {
    std::vector<bool> seen(d.state_count(), false);
    std::vector<std::size_t> stack{d.initial};
    seen[d.initial] = true;
    while (!stack.empty()) {
        auto q = stack.back();
        stack.pop_back();
        if (d.accepting[q]) {
            return false;
        }
        for (auto p : d.delta[q]) {
            if (!seen[p]) {
                seen[p] = true;
                stack.push_back(p);
            }
        }
    }
    return true;
}

/// L(x) ⊆ L(y) for DFAs over the same alphabet.
inline bool dfa_subset(const ConcreteDfa& x, const ConcreteDfa& y) {
    std::set<std::pair<std::size_t, std::size_t>> seen{{x.initial, y.initial}};
    std::vector<std::pair<std::size_t, std::size_t>> stack{{x.initial, y.initial}};
    while (!stack.empty()) {
        auto [p, q] = stack.back();
        stack.pop_back();
        if (x.accepting[p] && !y.accepting[q]) {
            return false;
        }
        for (std::size_t l = 0; l < x.alphabet.size(); ++l) {
            std::pair<std::size_t, std::size_t> next{x.delta[p][l], y.delta[q][l]};
            if (seen.insert(next).second) {
                stack.push_back(next);
            }
        }
    }
    return true;
}

inline bool oracle_subset(const Sfa& a, const Sfa& b, const std::vector<Letter>& alphabet) {
    if (a.binding() != b.binding()) {
        throw Error("automata are over different algebras");
    }
    return dfa_subset(concretize(a, alphabet), concretize(b, alphabet));
}

inline bool oracle_subset(const Sfa& a, const Sfa& b) { return oracle_subset(a, b, default_alphabet({&a, &b})); }

inline bool oracle_equal(const Sfa& a, const Sfa& b, const std::vector<Letter>& alphabet) {
    if (a.binding() != b.binding()) {
        throw Error("automata are over different algebras");
    }
    auto x = concretize(a, alphabet);
    auto y = concretize(b, alphabet);
    return dfa_subset(x, y) && dfa_subset(y, x);
}

inline bool oracle_equal(const Sfa& a, const Sfa& b) { return oracle_equal(a, b, default_alphabet({&a, &b})); }

/// Number of Myhill-Nerode classes of the (total) DFA's language, i.e. the
/// state count of the minimal complete DFA.
inline std::size_t nerode_class_count(const ConcreteDfa& d) {
    std::vector<bool> reach(d.state_count(), false);
    std::vector<std::size_t> stack{d.initial};
    reach[d.initial] = true;
    while (!stack.empty()) {
        auto q = stack.back();
        stack.pop_back();
        for (auto p : d.delta[q]) {
            if (!reach[p]) {
                reach[p] = true;
                stack.push_back(p);
            }
        }
    }
    std::vector<std::size_t> cls(d.state_count(), 0);
    for (std::size_t q = 0; q < d.state_count(); ++q) {
        cls[q] = d.accepting[q] ? 1 : 0;
    }
    std::size_t count = 0;
    while (true) {
        std::map<std::vector<std::size_t>, std::size_t> sig;
        std::vector<std::size_t> next(d.state_count(), 0);
        for (std::size_t q = 0; q < d.state_count(); ++q) {
            if (!reach[q]) {
                continue;
            }
            std::vector<std::size_t> key{cls[q]};
            for (auto p : d.delta[q]) {
                key.push_back(cls[p]);
            }
            next[q] = sig.try_emplace(std::move(key), sig.size()).first->second;
        }
        cls = std::move(next);
        if (sig.size() == count) {
            return count;
        }
        count = sig.size();
    }
}

}  // namespace symfa::oracle

#endif
