#ifndef SYMFA_INTERVAL_HPP
#define SYMFA_INTERVAL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "predicate.hpp"

namespace symfa {

/// Canonical disjunction of intervals: sorted by lower bound, pairwise
/// disjoint and separated by real gaps. The empty list is bottom.
class IntervalDnf {
public:
    IntervalDnf() = default;

    explicit IntervalDnf(IntervalAtom a) : atoms_{a} {}

    /// Sorts and merges arbitrary (possibly overlapping) atoms.
    static IntervalDnf from_atoms(std::vector<IntervalAtom> atoms) {
        std::sort(atoms.begin(), atoms.end());
        IntervalDnf out;
        for (const auto& a : atoms) {
            out.push_merged(a);
        }
        return out;
    }

    std::span<const IntervalAtom> atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }

    bool contains(std::int64_t x) const {
        auto it = std::upper_bound(atoms_.begin(), atoms_.end(), x,
                                   [](std::int64_t v, const IntervalAtom& a) { return a.lo().strictly_above(v); });
        return it != atoms_.begin() && std::prev(it)->contains(x);
    }

    IntervalDnf unite(const IntervalDnf& other) const {
        IntervalDnf out;
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < atoms_.size() || j < other.atoms_.size()) {
            if (j == other.atoms_.size() || (i < atoms_.size() && atoms_[i].lo() <= other.atoms_[j].lo())) {
                out.push_merged(atoms_[i++]);
            } else {
                out.push_merged(other.atoms_[j++]);
            }
        }
        return out;
    }

    /// Linear sweep; the result has at most size() + other.size() atoms.
    IntervalDnf intersect(const IntervalDnf& other) const;

    IntervalDnf complement(const IntervalAtom& domain = IntervalAtom::full()) const {
        IntervalDnf out;
        Bound cursor = domain.lo();
        for (const auto& a : atoms_) {
            if (auto gap = IntervalAtom::make(cursor, std::min(a.lo(), domain.hi()))) {
                out.atoms_.push_back(*gap);
            }
            cursor = std::max(cursor, a.hi());
        }
        if (auto gap = IntervalAtom::make(cursor, domain.hi())) {
            out.atoms_.push_back(*gap);
        }
        return out;
    }

    IntervalDnf clip(const IntervalAtom& domain) const { return intersect(IntervalDnf(domain)); }

    Predicate to_predicate() const {
        std::vector<Predicate> ps;
        ps.reserve(atoms_.size());
        for (const auto& a : atoms_) {
            ps.push_back(Predicate::atom(a));
        }
        return mk_or(ps);
    }

    friend bool operator==(const IntervalDnf&, const IntervalDnf&) = default;

private:
    void push_merged(const IntervalAtom& a) {
        if (!atoms_.empty() && a.lo() <= atoms_.back().hi()) {
            if (a.hi() > atoms_.back().hi()) {
                atoms_.back() = IntervalAtom(atoms_.back().lo(), a.hi());
            }
            return;
        }
        atoms_.push_back(a);
    }

    std::vector<IntervalAtom> atoms_;
};

inline std::optional<IntervalAtom> atom_and(const IntervalAtom& x, const IntervalAtom& y) {
    return IntervalAtom::make(std::max(x.lo(), y.lo()), std::min(x.hi(), y.hi()));
}

/// The complement of one atom: at most two atoms.
inline IntervalDnf atom_not(const IntervalAtom& x, const IntervalAtom& domain = IntervalAtom::full()) {
    return IntervalDnf(x).complement(domain);
}

inline IntervalDnf IntervalDnf::intersect(const IntervalDnf& other) const {
    IntervalDnf out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < atoms_.size() && j < other.atoms_.size()) {
        if (auto both = atom_and(atoms_[i], other.atoms_[j])) {
            out.atoms_.push_back(*both);
        }
        if (atoms_[i].hi() < other.atoms_[j].hi()) {
            ++i;
        } else {
            ++j;
        }
    }
    return out;
}

namespace detail {

inline Predicate interval_nnf(const Predicate& p, bool negate, const IntervalAtom& domain) {
    using K = Predicate::Kind;
    switch (p.kind()) {
        case K::True: return negate ? Predicate::falsity() : p;
        case K::False: return negate ? Predicate::truth() : p;
        case K::Atom: {
            const auto* ia = std::get_if<IntervalAtom>(&p.atom_value());
            if (ia == nullptr) {
                throw Error("propositional atom under the interval algebra");
            }
            return negate ? atom_not(*ia, domain).to_predicate() : p;
        }
        case K::Not: return interval_nnf(p.operand(), !negate, domain);
        case K::And:
        case K::Or: {
            std::vector<Predicate> cs;
            cs.reserve(p.children().size());
            for (const auto& c : p.children()) {
                cs.push_back(interval_nnf(c, negate, domain));
            }
            const bool conj = (p.kind() == K::And) != negate;
            return conj ? mk_and(cs) : mk_or(cs);
        }
    }
    return p;
}

inline IntervalDnf interval_dnf_of_nnf(const Predicate& p, const IntervalAtom& domain) {
    using K = Predicate::Kind;
    switch (p.kind()) {
        case K::True: return IntervalDnf(domain);
        case K::False: return {};
        case K::Atom: return IntervalDnf(std::get<IntervalAtom>(p.atom_value()));
        case K::Or: {
            IntervalDnf acc;
            for (const auto& c : p.children()) {
                acc = acc.unite(interval_dnf_of_nnf(c, domain));
            }
            return acc;
        }
        case K::And: {
            IntervalDnf acc = interval_dnf_of_nnf(p.children().front(), domain);
            for (const auto& c : p.children().subspan(1)) {
                if (acc.empty()) {
                    break;
                }
                acc = acc.intersect(interval_dnf_of_nnf(c, domain));
            }
            return acc;
        }
        case K::Not: break;
    }
    throw Error("negation left in negation normal form");
}

}  // namespace detail

/// Pushes negations down to the atoms and expands each negated atom.
inline Predicate to_nnf(const Predicate& p, const IntervalAtom& domain = IntervalAtom::full()) {
    return detail::interval_nnf(p, false, domain);
}

/// Linear DNF: NNF, then union for disjunctions and the k+l intersection
/// sweep for conjunctions. The result is canonical and clipped to domain.
inline IntervalDnf to_dnf(const Predicate& p, const IntervalAtom& domain = IntervalAtom::full()) {
    return detail::interval_dnf_of_nnf(to_nnf(p, domain), domain).clip(domain);
}

inline IntervalDnf canonicalize(const Predicate& p, const IntervalAtom& domain = IntervalAtom::full()) {
    return to_dnf(p, domain);
}

/// Least-finite-element witness of the first canonical interval.
inline std::optional<std::int64_t> interval_witness(const IntervalDnf& d) {
    if (d.empty()) {
        return std::nullopt;
    }
    const auto& first = d.atoms().front();
    if (first.lo().is_finite()) {
        return first.lo().value();
    }
    if (first.hi().is_finite()) {
        return first.hi().value() - 1;
    }
    return 0;
}

inline std::optional<std::int64_t> interval_sat(const Predicate& p, const IntervalAtom& domain = IntervalAtom::full()) {
    return interval_witness(to_dnf(p, domain));
}

}  // namespace symfa

#endif
