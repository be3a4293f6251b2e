#ifndef SYMFA_PROPOSITIONAL_HPP
#define SYMFA_PROPOSITIONAL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "predicate.hpp"

namespace symfa {

/// Upper limit on the number of propositions; valuation enumeration is 2^k.
inline constexpr std::size_t kMaxPropositions = 16;

/// A point of B^k. Bit i holds the value of proposition i.
class Valuation {
public:
    Valuation() = default;
    Valuation(std::uint32_t bits, std::size_t width) : bits_(bits), width_(static_cast<std::uint8_t>(width)) {
        if (width == 0 || width > kMaxPropositions) {
            throw Error("valuation width must be in 1.." + std::to_string(kMaxPropositions));
        }
        bits_ &= static_cast<std::uint32_t>((1u << width) - 1);
    }

    /// The valuation at position `rank` of the lexicographic order on bit
    /// strings written with proposition 0 first.
    static Valuation from_lex_rank(std::uint32_t rank, std::size_t width) {
        std::uint32_t bits = 0;
        for (std::size_t i = 0; i < width; ++i) {
            if ((rank >> (width - 1 - i)) & 1u) {
                bits |= 1u << i;
            }
        }
        return {bits, width};
    }

    /// "101" means p1=1, p2=0, p3=1.
    static Valuation parse(std::string_view text) {
        if (text.empty() || text.size() > kMaxPropositions) {
            throw Error("bad valuation '" + std::string(text) + "'");
        }
        std::uint32_t bits = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '1') {
                bits |= 1u << i;
            } else if (text[i] != '0') {
                throw Error("bad valuation '" + std::string(text) + "'");
            }
        }
        return {bits, text.size()};
    }

    bool operator[](std::size_t i) const { return (bits_ >> i) & 1u; }
    std::uint32_t bits() const { return bits_; }
    std::size_t width() const { return width_; }

    std::string to_string() const {
        std::string s(width_, '0');
        for (std::size_t i = 0; i < width_; ++i) {
            if ((*this)[i]) {
                s[i] = '1';
            }
        }
        return s;
    }

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        return a.to_string() <=> b.to_string();
    }

private:
    std::uint32_t bits_ = 0;
    std::uint8_t width_ = 0;
};

/// Literals sorted by variable, no repeats.
using Monomial = std::vector<LiteralAtom>;

inline bool literal_holds(const LiteralAtom& lit, const Valuation& v) { return v[lit.var] != lit.negated; }

/// Single scan: unsatisfiable iff some variable occurs with both polarities.
inline std::optional<Valuation> monomial_sat(std::span<const LiteralAtom> lits, std::size_t k) {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
    for (const auto& l : lits) {
        if (l.var >= k) {
            throw Error("literal index out of range");
        }
        (l.negated ? neg : pos) |= 1u << l.var;
    }
    if ((pos & neg) != 0) {
        return std::nullopt;
    }
    return Valuation(pos, k);
}

inline bool prop_eval(const Predicate& p, const Valuation& v) {
    switch (p.kind()) {
        case Predicate::Kind::True: return true;
        case Predicate::Kind::False: return false;
        case Predicate::Kind::Atom: {
            const auto* lit = std::get_if<LiteralAtom>(&p.atom_value());
            if (lit == nullptr || lit->var >= v.width()) {
                throw Error("atom does not belong to the propositional algebra");
            }
            return literal_holds(*lit, v);
        }
        case Predicate::Kind::Not: return !prop_eval(p.operand(), v);
        case Predicate::Kind::And:
            return std::all_of(p.children().begin(), p.children().end(),
                               [&](const Predicate& c) { return prop_eval(c, v); });
        case Predicate::Kind::Or:
            return std::any_of(p.children().begin(), p.children().end(),
                               [&](const Predicate& c) { return prop_eval(c, v); });
    }
    return false;
}

/// Literals of a basic predicate, or nullopt if p is not basic. A False
/// conjunct yields nullopt as well (no monomial denotes it).
inline std::optional<Monomial> as_monomial(const Predicate& p) {
    Monomial m;
    auto add = [&](const Predicate& c) {
        if (c.is_true()) {
            return true;
        }
        if (!c.is_atom()) {
            return false;
        }
        const auto* lit = std::get_if<LiteralAtom>(&c.atom_value());
        if (lit == nullptr) {
            return false;
        }
        m.push_back(*lit);
        return true;
    };
    if (p.kind() == Predicate::Kind::And) {
        for (const auto& c : p.children()) {
            if (!add(c)) {
                return std::nullopt;
            }
        }
    } else if (!add(p)) {
        return std::nullopt;
    }
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
}

inline Predicate monomial_predicate(const Monomial& m) {
    std::vector<Predicate> ps;
    ps.reserve(m.size());
    for (const auto& l : m) {
        ps.push_back(Predicate::atom(l));
    }
    return mk_and(ps);
}

/// Basic predicates go through monomial_sat; anything else enumerates B^k in
/// lexicographic order and returns the first model.
inline std::optional<Valuation> prop_sat(const Predicate& p, std::size_t k) {
    if (k == 0 || k > kMaxPropositions) {
        throw Error("number of propositions must be in 1.." + std::to_string(kMaxPropositions));
    }
    if (p.is_false()) {
        return std::nullopt;
    }
    if (auto m = as_monomial(p)) {
        return monomial_sat(*m, k);
    }
    const std::uint32_t count = 1u << k;
    for (std::uint32_t r = 0; r < count; ++r) {
        auto v = Valuation::from_lex_rank(r, k);
        if (prop_eval(p, v)) {
            return v;
        }
    }
    return std::nullopt;
}

namespace detail {

inline std::optional<Monomial> merge_monomials(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i].var == out[i - 1].var) {
            return std::nullopt;
        }
    }
    return out;
}

inline std::set<Monomial> prop_dnf_set(const Predicate& p, bool negate) {
    using K = Predicate::Kind;
    switch (p.kind()) {
        case K::True: return negate ? std::set<Monomial>{} : std::set<Monomial>{Monomial{}};
        case K::False: return negate ? std::set<Monomial>{Monomial{}} : std::set<Monomial>{};
        case K::Atom: {
            const auto* lit = std::get_if<LiteralAtom>(&p.atom_value());
            if (lit == nullptr) {
                throw Error("interval atom under the propositional algebra");
            }
            return {Monomial{LiteralAtom{lit->var, lit->negated != negate}}};
        }
        case K::Not: return prop_dnf_set(p.operand(), !negate);
        case K::And:
        case K::Or: {
            const bool conj = (p.kind() == K::And) != negate;
            std::set<Monomial> acc;
            bool first = true;
            for (const auto& c : p.children()) {
                auto part = prop_dnf_set(c, negate);
                if (!conj) {
                    acc.insert(part.begin(), part.end());
                    continue;
                }
                if (first) {
                    acc = std::move(part);
                } else {
                    std::set<Monomial> next;
                    for (const auto& x : acc) {
                        for (const auto& y : part) {
                            if (auto m = merge_monomials(x, y)) {
                                next.insert(std::move(*m));
                            }
                        }
                    }
                    acc = std::move(next);
                }
                first = false;
                if (acc.empty()) {
                    break;
                }
            }
            return acc;
        }
    }
    return {};
}

}  // namespace detail

/// Satisfiable monomials of a DNF equivalent to p (NNF, then distribution).
inline std::vector<Monomial> prop_dnf_monomials(const Predicate& p) {
    auto s = detail::prop_dnf_set(p, false);
    return {s.begin(), s.end()};
}

inline Predicate prop_to_dnf(const Predicate& p) {
    std::vector<Predicate> ds;
    for (const auto& m : prop_dnf_monomials(p)) {
        ds.push_back(monomial_predicate(m));
    }
    return mk_or(ds);
}

/// Explicit subset of B^k, indexed by Valuation::bits().
class ValuationSet {
public:
    ValuationSet() = default;
    explicit ValuationSet(std::size_t k, bool full = false) : k_(k), bits_(std::size_t{1} << k, full) {}

    static ValuationSet of(const Predicate& p, std::size_t k) {
        ValuationSet s(k);
        for (std::uint32_t b = 0; b < s.bits_.size(); ++b) {
            s.bits_[b] = prop_eval(p, Valuation(b, k));
        }
        return s;
    }

    std::size_t arity() const { return k_; }
    bool contains(const Valuation& v) const { return bits_[v.bits()]; }
    bool empty() const { return std::none_of(bits_.begin(), bits_.end(), [](bool b) { return b; }); }

    ValuationSet operator&(const ValuationSet& o) const { return zip(o, [](bool a, bool b) { return a && b; }); }
    ValuationSet operator|(const ValuationSet& o) const { return zip(o, [](bool a, bool b) { return a || b; }); }
    ValuationSet operator~() const {
        ValuationSet out = *this;
        out.bits_.flip();
        return out;
    }

    /// Lexicographically first member.
    std::optional<Valuation> first() const {
        const std::uint32_t count = static_cast<std::uint32_t>(bits_.size());
        for (std::uint32_t r = 0; r < count; ++r) {
            auto v = Valuation::from_lex_rank(r, k_);
            if (contains(v)) {
                return v;
            }
        }
        return std::nullopt;
    }

    friend bool operator==(const ValuationSet&, const ValuationSet&) = default;

private:
    template <class F>
    ValuationSet zip(const ValuationSet& o, F f) const {
        ValuationSet out(k_);
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            out.bits_[i] = f(bits_[i], o.bits_[i]);
        }
        return out;
    }

    std::size_t k_ = 0;
    std::vector<bool> bits_;
};

namespace detail {

struct Cube {
    std::uint32_t mask = 0;
    std::uint32_t value = 0;
};

template <class F>
void for_each_in_cube(const Cube& c, std::size_t k, F f) {
    const std::uint32_t free = ~c.mask & ((1u << k) - 1);
    std::uint32_t sub = free;
    while (true) {
        f(c.value | sub);
        if (sub == 0) {
            break;
        }
        sub = (sub - 1) & free;
    }
}

inline void cube_cover_rec(const ValuationSet& s, std::size_t k, Cube c, std::size_t var, std::vector<Monomial>& out) {
    bool any = false;
    bool all = true;
    for_each_in_cube(c, k, [&](std::uint32_t b) {
        const bool in = s.contains(Valuation(b, k));
        any = any || in;
        all = all && in;
    });
    if (!any) {
        return;
    }
    if (all) {
        Monomial m;
        for (std::size_t i = 0; i < k; ++i) {
            if (c.mask & (1u << i)) {
                m.push_back(LiteralAtom{static_cast<std::uint8_t>(i), (c.value & (1u << i)) == 0});
            }
        }
        out.push_back(std::move(m));
        return;
    }
    // Skip variables the set does not depend on inside this cube.
    for (; var < k; ++var) {
        const std::uint32_t bit = 1u << var;
        if (c.mask & bit) {
            continue;
        }
        bool independent = true;
        for_each_in_cube(Cube{c.mask | bit, c.value}, k, [&](std::uint32_t b) {
            if (s.contains(Valuation(b, k)) != s.contains(Valuation(b | bit, k))) {
                independent = false;
            }
        });
        if (!independent) {
            break;
        }
    }
    const std::uint32_t bit = 1u << var;
    cube_cover_rec(s, k, Cube{c.mask | bit, c.value | bit}, var + 1, out);
    cube_cover_rec(s, k, Cube{c.mask | bit, c.value}, var + 1, out);
}

}  // namespace detail

/// Pairwise-disjoint monomials whose union is exactly s.
inline std::vector<Monomial> cube_cover(const ValuationSet& s) {
    std::vector<Monomial> out;
    detail::cube_cover_rec(s, s.arity(), detail::Cube{}, 0, out);
    return out;
}

}  // namespace symfa

#endif
