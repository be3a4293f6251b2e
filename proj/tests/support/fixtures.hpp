#ifndef SYMFA_TESTS_FIXTURES_HPP
#define SYMFA_TESTS_FIXTURES_HPP

#include <ostream>
#include <string>

#include <symfa/symfa.hpp>

namespace symfa {

// gtest printers
inline void PrintTo(const Predicate& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const Sfa& a, std::ostream* os) { *os << "\n" << export_dot(a); }
inline void PrintTo(const Transition& t, std::ostream* os) {
    *os << t.from << " -" << to_string(t.pred) << "-> " << t.to;
}

}  // namespace symfa

namespace symfa::testing {

inline std::string source_path(const std::string& rel) { return std::string(SYMFA_SOURCE_DIR) + "/" + rel; }

inline Bound inf() { return Bound::pos_inf(); }
inline Bound fin(std::int64_t v) { return Bound::finite(v); }

/// Interval algebra over the naturals, as in the running example.
inline AlgebraBinding naturals() { return AlgebraBinding::interval(IntervalAtom(fin(0), inf())); }

/// q0 -[0,100)-> q1, q0 -[100,inf)-> q0, q1 -[0,200)-> q1, q1 -[200,inf)-> q0.
inline Sfa fig1() {
    Sfa a(naturals());
    const auto q0 = a.add_state("q0");
    const auto q1 = a.add_state("q1", true);
    a.set_initial(q0);
    a.add_transition(q0, interval(fin(0), fin(100)), q1);
    a.add_transition(q0, interval(fin(100), inf()), q0);
    a.add_transition(q1, interval(fin(0), fin(200)), q1);
    a.add_transition(q1, interval(fin(200), inf()), q0);
    return a;
}

/// Same language as fig1, with q1 split into two equivalent copies.
inline Sfa fig1_split() {
    Sfa a(naturals());
    const auto q0 = a.add_state("q0");
    const auto q1 = a.add_state("q1", true);
    const auto q2 = a.add_state("q1b", true);
    a.set_initial(q0);
    a.add_transition(q0, interval(fin(0), fin(100)), q1);
    a.add_transition(q0, interval(fin(100), inf()), q0);
    a.add_transition(q1, interval(fin(0), fin(50)), q2);
    a.add_transition(q1, interval(fin(50), fin(200)), q1);
    a.add_transition(q1, interval(fin(200), inf()), q0);
    a.add_transition(q2, interval(fin(0), fin(200)), q1);
    a.add_transition(q2, interval(fin(200), inf()), q0);
    return a;
}

/// Single accepting state looping on lo..hi.
inline Sfa loop(const AlgebraBinding& b, Predicate p, bool accepting = true) {
    Sfa a(b);
    const auto q = a.add_state("q", accepting);
    a.set_initial(q);
    a.add_transition(q, std::move(p), q);
    return a;
}

inline Sfa empty_language(const AlgebraBinding& b) {
    Sfa a(b);
    a.set_initial(a.add_state("e"));
    return a;
}

inline Word ints(std::initializer_list<std::int64_t> xs) {
    Word w;
    for (auto x : xs) {
        w.emplace_back(x);
    }
    return w;
}

}  // namespace symfa::testing

#endif
