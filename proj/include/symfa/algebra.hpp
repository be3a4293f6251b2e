#ifndef SYMFA_ALGEBRA_HPP
#define SYMFA_ALGEBRA_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "interval.hpp"
#include "predicate.hpp"
#include "propositional.hpp"

namespace symfa {

/// Which concrete algebra an automaton's predicates live in.
///
/// The interval algebra carries its domain [d_inf, d_sup); by default that
/// is all of Z. Propositional bindings carry the ordered proposition names.
class AlgebraBinding {
public:
    enum class Kind : std::uint8_t { Interval, Propositional };

    static AlgebraBinding interval(IntervalAtom domain = IntervalAtom::full()) {
        AlgebraBinding b;
        b.kind_ = Kind::Interval;
        b.domain_ = domain;
        return b;
    }

    static AlgebraBinding propositional(std::vector<std::string> names) {
        if (names.empty() || names.size() > kMaxPropositions) {
            throw Error("propositional algebra needs 1.." + std::to_string(kMaxPropositions) + " propositions");
        }
        std::set<std::string> seen;
        for (const auto& n : names) {
            if (n.empty()) {
                throw Error("empty proposition name");
            }
            if (!seen.insert(n).second) {
                throw Error("duplicate proposition name '" + n + "'");
            }
        }
        AlgebraBinding b;
        b.kind_ = Kind::Propositional;
        b.props_ = std::move(names);
        return b;
    }

    /// Propositions named p1..pk.
    static AlgebraBinding propositional(std::size_t k) {
        std::vector<std::string> names;
        for (std::size_t i = 1; i <= k; ++i) {
            names.push_back("p" + std::to_string(i));
        }
        return propositional(std::move(names));
    }

    Kind kind() const { return kind_; }
    bool is_interval() const { return kind_ == Kind::Interval; }
    const IntervalAtom& domain() const { return domain_; }
    const std::vector<std::string>& props() const { return props_; }
    std::size_t arity() const { return props_.size(); }

    std::optional<std::uint8_t> prop_index(std::string_view name) const {
        auto it = std::find(props_.begin(), props_.end(), name);
        if (it == props_.end()) {
            return std::nullopt;
        }
        return static_cast<std::uint8_t>(it - props_.begin());
    }

    friend bool operator==(const AlgebraBinding&, const AlgebraBinding&) = default;

private:
    Kind kind_ = Kind::Interval;
    IntervalAtom domain_;
    std::vector<std::string> props_;
};

using Letter = std::variant<std::int64_t, Valuation>;
using Word = std::vector<Letter>;

inline std::string to_string(const Letter& l) {
    if (const auto* i = std::get_if<std::int64_t>(&l)) {
        return std::to_string(*i);
    }
    return std::get<Valuation>(l).to_string();
}

/// Cost instrumentation; one instance per operation call.
struct OpCounters {
    std::uint64_t sat_calls = 0;
    std::uint64_t conj_built = 0;
    std::uint64_t disj_built = 0;
};

namespace detail {
inline void count_sat(OpCounters* c) {
    if (c != nullptr) {
        ++c->sat_calls;
    }
}
inline void count_conj(OpCounters* c, std::uint64_t n = 1) {
    if (c != nullptr) {
        c->conj_built += n;
    }
}
inline void count_disj(OpCounters* c, std::uint64_t n = 1) {
    if (c != nullptr) {
        c->disj_built += n;
    }
}
}  // namespace detail

/// Empty string when p is well-formed for the binding, else a reason.
inline std::string check_predicate(const AlgebraBinding& b, const Predicate& p) {
    if (p.is_atom()) {
        if (b.is_interval()) {
            return std::holds_alternative<IntervalAtom>(p.atom_value()) ? "" : "propositional atom in interval algebra";
        }
        const auto* lit = std::get_if<LiteralAtom>(&p.atom_value());
        if (lit == nullptr) {
            return "interval atom in propositional algebra";
        }
        return lit->var < b.arity() ? "" : "proposition index out of range";
    }
    for (const auto& c : p.children()) {
        if (auto why = check_predicate(b, c); !why.empty()) {
            return why;
        }
    }
    return {};
}

inline bool eval(const AlgebraBinding& b, const Predicate& p, const Letter& letter) {
    if (b.is_interval()) {
        const auto* x = std::get_if<std::int64_t>(&letter);
        if (x == nullptr) {
            throw Error("valuation letter given to the interval algebra");
        }
        if (!b.domain().contains(*x)) {
            throw Error("letter " + std::to_string(*x) + " outside domain " + b.domain().to_string());
        }
        struct Rec {
            std::int64_t x;
            bool operator()(const Predicate& q) const {
                switch (q.kind()) {
                    case Predicate::Kind::True: return true;
                    case Predicate::Kind::False: return false;
                    case Predicate::Kind::Atom: {
                        const auto* ia = std::get_if<IntervalAtom>(&q.atom_value());
                        if (ia == nullptr) {
                            throw Error("propositional atom in interval algebra");
                        }
                        return ia->contains(x);
                    }
                    case Predicate::Kind::Not: return !(*this)(q.operand());
                    case Predicate::Kind::And:
                        return std::all_of(q.children().begin(), q.children().end(), *this);
                    case Predicate::Kind::Or:
                        return std::any_of(q.children().begin(), q.children().end(), *this);
                }
                return false;
            }
        };
        return Rec{*x}(p);
    }
    const auto* v = std::get_if<Valuation>(&letter);
    if (v == nullptr) {
        throw Error("integer letter given to the propositional algebra");
    }
    if (v->width() != b.arity()) {
        throw Error("valuation width " + std::to_string(v->width()) + " does not match " +
                    std::to_string(b.arity()) + " propositions");
    }
    return prop_eval(p, *v);
}

/// A witness letter of p, or nullopt when p denotes the empty set.
inline std::optional<Letter> sat(const AlgebraBinding& b, const Predicate& p, OpCounters* counters = nullptr) {
    detail::count_sat(counters);
    if (b.is_interval()) {
        if (auto x = interval_sat(p, b.domain())) {
            return Letter{*x};
        }
        return std::nullopt;
    }
    if (auto v = prop_sat(p, b.arity())) {
        return Letter{*v};
    }
    return std::nullopt;
}

/// Effective Boolean algebra over explicit denotations ("regions").
///
/// Every algebra maps a predicate to a region, supports the Boolean
/// operations and emptiness on regions, and can write a region back as a
/// list of pairwise-disjoint basic predicates.
template <class A>
concept EffectiveBooleanAlgebra = requires(const A& alg, const Predicate& p, const typename A::region_type& r,
                                           const typename A::letter_type& x) {
    { alg.region(p) } -> std::same_as<typename A::region_type>;
    { alg.top() } -> std::same_as<typename A::region_type>;
    { alg.meet(r, r) } -> std::same_as<typename A::region_type>;
    { alg.join(r, r) } -> std::same_as<typename A::region_type>;
    { alg.complement(r) } -> std::same_as<typename A::region_type>;
    { alg.is_empty(r) } -> std::same_as<bool>;
    { alg.contains(r, x) } -> std::same_as<bool>;
    { alg.basic_cover(r) } -> std::same_as<std::vector<Predicate>>;
    { alg.to_predicate(r) } -> std::same_as<Predicate>;
    { A::monotonic } -> std::convertible_to<bool>;
};

struct IntervalAlgebra {
    using region_type = IntervalDnf;
    using letter_type = std::int64_t;
    static constexpr bool monotonic = true;

    IntervalAtom domain;

    region_type region(const Predicate& p) const { return to_dnf(p, domain); }
    region_type top() const { return IntervalDnf(domain); }
    region_type meet(const region_type& a, const region_type& b) const { return a.intersect(b); }
    region_type join(const region_type& a, const region_type& b) const { return a.unite(b); }
    region_type complement(const region_type& a) const { return a.complement(domain); }
    bool is_empty(const region_type& a) const { return a.empty(); }
    bool contains(const region_type& a, letter_type x) const { return a.contains(x); }
    std::vector<Predicate> basic_cover(const region_type& a) const {
        std::vector<Predicate> out;
        for (const auto& atom : a.atoms()) {
            out.push_back(Predicate::atom(atom));
        }
        return out;
    }
    Predicate to_predicate(const region_type& a) const { return a.to_predicate(); }
};

struct PropositionalAlgebra {
    using region_type = ValuationSet;
    using letter_type = Valuation;
    static constexpr bool monotonic = false;

    std::size_t arity;

    region_type region(const Predicate& p) const { return ValuationSet::of(p, arity); }
    region_type top() const { return ValuationSet(arity, true); }
    region_type meet(const region_type& a, const region_type& b) const { return a & b; }
    region_type join(const region_type& a, const region_type& b) const { return a | b; }
    region_type complement(const region_type& a) const { return ~a; }
    bool is_empty(const region_type& a) const { return a.empty(); }
    bool contains(const region_type& a, const letter_type& v) const { return a.contains(v); }
    std::vector<Predicate> basic_cover(const region_type& a) const {
        std::vector<Predicate> out;
        for (const auto& m : cube_cover(a)) {
            out.push_back(monomial_predicate(m));
        }
        return out;
    }
    Predicate to_predicate(const region_type& a) const { return mk_or(basic_cover(a)); }
};

static_assert(EffectiveBooleanAlgebra<IntervalAlgebra>);
static_assert(EffectiveBooleanAlgebra<PropositionalAlgebra>);

/// Calls f with the algebra object matching the binding.
template <class F>
decltype(auto) with_algebra(const AlgebraBinding& b, F&& f) {
    if (b.is_interval()) {
        return std::forward<F>(f)(IntervalAlgebra{b.domain()});
    }
    return std::forward<F>(f)(PropositionalAlgebra{b.arity()});
}

}  // namespace symfa

#endif
