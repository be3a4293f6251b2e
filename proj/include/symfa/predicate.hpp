#ifndef SYMFA_PREDICATE_HPP
#define SYMFA_PREDICATE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace symfa {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Endpoint of an interval atom: a finite integer or one of the two sentinels.
class Bound {
public:
    enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

    constexpr Bound() = default;

    static constexpr Bound neg_inf() { return Bound(Kind::NegInf, 0); }
    static constexpr Bound pos_inf() { return Bound(Kind::PosInf, 0); }
    static constexpr Bound finite(std::int64_t v) { return Bound(Kind::Finite, v); }

    constexpr Kind kind() const { return kind_; }
    constexpr bool is_finite() const { return kind_ == Kind::Finite; }
    constexpr std::int64_t value() const { return value_; }

    friend constexpr std::strong_ordering operator<=>(const Bound& a, const Bound& b) {
        if (a.kind_ != b.kind_) {
            return a.kind_ <=> b.kind_;
        }
        if (a.kind_ == Kind::Finite) {
            return a.value_ <=> b.value_;
        }
        return std::strong_ordering::equal;
    }
    friend constexpr bool operator==(const Bound& a, const Bound& b) {
        return (a <=> b) == 0;
    }

    /// true iff the finite letter x satisfies bound <= x
    constexpr bool at_or_below(std::int64_t x) const {
        return kind_ == Kind::NegInf || (kind_ == Kind::Finite && value_ <= x);
    }
    /// true iff the finite letter x satisfies x < bound
    constexpr bool strictly_above(std::int64_t x) const {
        return kind_ == Kind::PosInf || (kind_ == Kind::Finite && x < value_);
    }

    std::string to_string() const {
        switch (kind_) {
            case Kind::NegInf: return "-inf";
            case Kind::PosInf: return "inf";
            case Kind::Finite: break;
        }
        return std::to_string(value_);
    }

private:
    constexpr Bound(Kind k, std::int64_t v) : kind_(k), value_(v) {}

    Kind kind_ = Kind::Finite;
    std::int64_t value_ = 0;
};

/// Half-open interval [lo, hi) over the integers; always nonempty.
class IntervalAtom {
public:
    IntervalAtom() : IntervalAtom(Bound::neg_inf(), Bound::pos_inf()) {}

    IntervalAtom(Bound lo, Bound hi) : lo_(lo), hi_(hi) {
        if (!proper(lo, hi)) {
            throw Error("improper interval [" + lo.to_string() + "," + hi.to_string() + ")");
        }
    }

    static std::optional<IntervalAtom> make(Bound lo, Bound hi) {
        if (!proper(lo, hi)) {
            return std::nullopt;
        }
        return IntervalAtom(lo, hi);
    }
    static IntervalAtom full() { return IntervalAtom(); }

    static bool proper(Bound lo, Bound hi) {
        if (lo.kind() == Bound::Kind::PosInf || hi.kind() == Bound::Kind::NegInf) {
            return false;
        }
        return lo < hi;
    }

    const Bound& lo() const { return lo_; }
    const Bound& hi() const { return hi_; }

    bool contains(std::int64_t x) const { return lo_.at_or_below(x) && hi_.strictly_above(x); }

    std::string to_string() const { return "[" + lo_.to_string() + "," + hi_.to_string() + ")"; }

    friend std::strong_ordering operator<=>(const IntervalAtom&, const IntervalAtom&) = default;
    friend bool operator==(const IntervalAtom&, const IntervalAtom&) = default;

private:
    Bound lo_;
    Bound hi_;
};

/// A proposition or its negation; the polarity lives inside the atom.
struct LiteralAtom {
    std::uint8_t var = 0;
    bool negated = false;

    friend std::strong_ordering operator<=>(const LiteralAtom&, const LiteralAtom&) = default;
    friend bool operator==(const LiteralAtom&, const LiteralAtom&) = default;
};

using Atom = std::variant<IntervalAtom, LiteralAtom>;

inline std::strong_ordering compare_atoms(const Atom& a, const Atom& b) {
    if (a.index() != b.index()) {
        return a.index() <=> b.index();
    }
    if (const auto* ia = std::get_if<IntervalAtom>(&a)) {
        return *ia <=> std::get<IntervalAtom>(b);
    }
    return std::get<LiteralAtom>(a) <=> std::get<LiteralAtom>(b);
}

/// Immutable predicate tree. Copies share structure.
///
/// The raw factories (conjunction, disjunction, negation) build exactly the
/// node asked for; the mk_* functions below apply light simplification.
class Predicate {
public:
    enum class Kind : std::uint8_t { False, True, Atom, And, Or, Not };

    Predicate() : Predicate(falsity()) {}

    static Predicate truth();
    static Predicate falsity();
    static Predicate atom(Atom a);
    static Predicate conjunction(std::vector<Predicate> children) {
        return nary(Kind::And, std::move(children));
    }
    static Predicate disjunction(std::vector<Predicate> children) {
        return nary(Kind::Or, std::move(children));
    }
    static Predicate negation(Predicate child);

    Kind kind() const;
    bool is_true() const { return kind() == Kind::True; }
    bool is_false() const { return kind() == Kind::False; }
    bool is_atom() const { return kind() == Kind::Atom; }
    bool is_constant() const { return is_true() || is_false(); }

    const Atom& atom_value() const;
    std::span<const Predicate> children() const;
    const Predicate& operand() const;

    friend std::strong_ordering compare(const Predicate& a, const Predicate& b) {
        if (a.node_ == b.node_) {
            return std::strong_ordering::equal;
        }
        if (a.kind() != b.kind()) {
            return a.kind() <=> b.kind();
        }
        if (a.kind() == Kind::Atom) {
            return compare_atoms(a.atom_value(), b.atom_value());
        }
        auto ca = a.children();
        auto cb = b.children();
        for (std::size_t i = 0; i < ca.size() && i < cb.size(); ++i) {
            auto c = compare(ca[i], cb[i]);
            if (c != 0) {
                return c;
            }
        }
        return ca.size() <=> cb.size();
    }
    friend std::strong_ordering operator<=>(const Predicate& a, const Predicate& b) { return compare(a, b); }
    friend bool operator==(const Predicate& a, const Predicate& b) { return compare(a, b) == 0; }

private:
    struct Node;

    explicit Predicate(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static Predicate nary(Kind k, std::vector<Predicate> children);

    std::shared_ptr<const Node> node_;
};

struct Predicate::Node {
    Kind kind;
    std::optional<Atom> atom;
    std::vector<Predicate> children;
};

inline Predicate Predicate::truth() {
    static const Predicate p(std::make_shared<const Node>(Node{Kind::True, std::nullopt, {}}));
    return p;
}
inline Predicate Predicate::falsity() {
    static const Predicate p(std::make_shared<const Node>(Node{Kind::False, std::nullopt, {}}));
    return p;
}
inline Predicate Predicate::atom(Atom a) {
    return Predicate(std::make_shared<const Node>(Node{Kind::Atom, std::move(a), {}}));
}
inline Predicate Predicate::negation(Predicate child) {
    std::vector<Predicate> c;
    c.push_back(std::move(child));
    return Predicate(std::make_shared<const Node>(Node{Kind::Not, std::nullopt, std::move(c)}));
}
inline Predicate::Kind Predicate::kind() const { return node_->kind; }
inline const Atom& Predicate::atom_value() const { return *node_->atom; }
inline std::span<const Predicate> Predicate::children() const { return node_->children; }
inline const Predicate& Predicate::operand() const { return node_->children.front(); }

inline Predicate Predicate::nary(Kind k, std::vector<Predicate> children) {
    if (children.size() < 2) {
        throw Error(std::string(k == Kind::And ? "and" : "or") + " node needs at least two operands");
    }
    return Predicate(std::make_shared<const Node>(Node{k, std::nullopt, std::move(children)}));
}

inline Predicate interval(Bound lo, Bound hi) { return Predicate::atom(IntervalAtom(lo, hi)); }
inline Predicate interval(std::int64_t lo, std::int64_t hi) {
    return interval(Bound::finite(lo), Bound::finite(hi));
}
inline Predicate literal(std::uint8_t var, bool negated = false) {
    return Predicate::atom(LiteralAtom{var, negated});
}

namespace detail {

inline Predicate make_nary(Predicate::Kind kind, std::span<const Predicate> ps) {
    const bool is_and = kind == Predicate::Kind::And;
    std::vector<Predicate> flat;
    flat.reserve(ps.size());
    for (const auto& p : ps) {
        if (is_and ? p.is_true() : p.is_false()) {
            continue;
        }
        if (is_and ? p.is_false() : p.is_true()) {
            return p;
        }
        if (p.kind() == kind) {
            flat.insert(flat.end(), p.children().begin(), p.children().end());
        } else {
            flat.push_back(p);
        }
    }
    if (flat.empty()) {
        return is_and ? Predicate::truth() : Predicate::falsity();
    }
    if (flat.size() == 1) {
        return flat.front();
    }
    return is_and ? Predicate::conjunction(std::move(flat)) : Predicate::disjunction(std::move(flat));
}

}  // namespace detail

inline Predicate mk_and(std::span<const Predicate> ps) { return detail::make_nary(Predicate::Kind::And, ps); }
inline Predicate mk_or(std::span<const Predicate> ps) { return detail::make_nary(Predicate::Kind::Or, ps); }
inline Predicate mk_and(std::initializer_list<Predicate> ps) { return mk_and(std::span(ps.begin(), ps.size())); }
inline Predicate mk_or(std::initializer_list<Predicate> ps) { return mk_or(std::span(ps.begin(), ps.size())); }

/// Negation with constant folding, double-negation removal and literal
/// polarity folding. Interval atoms are wrapped, never rewritten.
inline Predicate mk_not(const Predicate& p) {
    switch (p.kind()) {
        case Predicate::Kind::True: return Predicate::falsity();
        case Predicate::Kind::False: return Predicate::truth();
        case Predicate::Kind::Not: return p.operand();
        case Predicate::Kind::Atom:
            if (const auto* lit = std::get_if<LiteralAtom>(&p.atom_value())) {
                return literal(lit->var, !lit->negated);
            }
            break;
        default: break;
    }
    return Predicate::negation(p);
}

enum class PredicateClass : std::uint8_t { Atomic, Basic, General };

inline PredicateClass classify(const Predicate& p) {
    switch (p.kind()) {
        case Predicate::Kind::True:
        case Predicate::Kind::False:
        case Predicate::Kind::Atom: return PredicateClass::Atomic;
        case Predicate::Kind::And:
            for (const auto& c : p.children()) {
                if (!c.is_atom() && !c.is_constant()) {
                    return PredicateClass::General;
                }
            }
            return PredicateClass::Basic;
        default: return PredicateClass::General;
    }
}

inline bool is_basic(const Predicate& p) { return classify(p) != PredicateClass::General; }

/// Parse-tree size: leaves count one, an n-ary connective counts n-1 binary
/// operators, negation counts one.
inline std::size_t predicate_size(const Predicate& p) {
    switch (p.kind()) {
        case Predicate::Kind::And:
        case Predicate::Kind::Or: {
            std::size_t s = p.children().size() - 1;
            for (const auto& c : p.children()) {
                s += predicate_size(c);
            }
            return s;
        }
        case Predicate::Kind::Not: return 1 + predicate_size(p.operand());
        default: return 1;
    }
}

/// Number of atom leaves (constants included).
inline std::size_t leaf_count(const Predicate& p) {
    if (p.children().empty()) {
        return 1;
    }
    std::size_t s = 0;
    for (const auto& c : p.children()) {
        s += leaf_count(c);
    }
    return s;
}

inline std::string to_string(const Predicate& p, std::span<const std::string> prop_names = {}) {
    auto atom_text = [&](const Atom& a) -> std::string {
        if (const auto* ia = std::get_if<IntervalAtom>(&a)) {
            return ia->to_string();
        }
        const auto& lit = std::get<LiteralAtom>(a);
        std::string name = lit.var < prop_names.size() ? prop_names[lit.var] : "p" + std::to_string(lit.var + 1);
        return (lit.negated ? "¬" : "") + name;
    };
    switch (p.kind()) {
        case Predicate::Kind::True: return "⊤";
        case Predicate::Kind::False: return "⊥";
        case Predicate::Kind::Atom: return atom_text(p.atom_value());
        case Predicate::Kind::Not: {
            const auto& c = p.operand();
            auto inner = to_string(c, prop_names);
            return "¬" + (c.children().empty() ? inner : "(" + inner + ")");
        }
        case Predicate::Kind::And:
        case Predicate::Kind::Or: {
            const bool is_and = p.kind() == Predicate::Kind::And;
            std::string out;
            for (const auto& c : p.children()) {
                if (!out.empty()) {
                    out += is_and ? "∧" : " ∨ ";
                }
                auto inner = to_string(c, prop_names);
                const bool wrap = c.kind() == Predicate::Kind::And || c.kind() == Predicate::Kind::Or;
                out += wrap ? "(" + inner + ")" : inner;
            }
            return out;
        }
    }
    return {};
}

}  // namespace symfa

#endif
