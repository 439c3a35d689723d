// constructions.hpp -- factorization identities and schedule-built witnesses
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "autoplex/nfa.hpp"
#include "autoplex/search.hpp"
#include "autoplex/words.hpp"

namespace autoplex {

/// One segment of a loop schedule. A path owns `states` fresh states and
/// consumes `states` symbols; a cycle owns `states` fresh states, reused
/// cyclically, and consumes `traverse` symbols (traverse >= states, at least
/// one full revolution; traverse need not be a multiple of states).
struct Segment {
    enum class Kind { path, cycle };
    Kind kind = Kind::path;
    int states = 0;
    int traverse = 0;
};

Segment path_segment(int states);
Segment cycle_segment(int states, int traverse);

struct LoopSchedule {
    std::vector<Segment> segments;
    Word word;
};

/// A schedule that cannot be laid onto its word: length mismatch, a label
/// conflict (the word is not periodic where the schedule assumes it is), or
/// a shape the builder does not support.
class ScheduleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A builder whose result failed engine verification. Builders never return
/// unverified automata.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BuiltWitness {
    Nfa nfa;
    StateSequence sequence;
};

/// Lay the word onto the schedule: fresh states along paths, cyclic reuse
/// inside cycles; each non-final segment spends its last consumed symbol on
/// the exit edge into the next segment. The final segment must be a cycle
/// (acceptance happens mid-cycle). Total states = sum of segment states.
BuiltWitness build_from_schedule(const LoopSchedule& s);

/// Tribonacci factor bookkeeping in the shifted numbering T~_m = T_{m+3}:
/// c(k) = T~_{n-k} and d(k) = |c(k)| = t_{n-k+3}.
struct TribContext {
    int n = 0;

    Word c(int k) const;
    unsigned long long d(int k) const;
};

/// T~_{n-2}^2 prod_{k=6}^{3 floor(n/3)+1} T~_{n-k} is a prefix of T~_n.
bool verify_prefix_theorem(int n);

/// c0 = c2^2 (prod_{k=6}^{3m+1} c_k) c_{3m-1}
///      (prod_{M=m..2} c_{3M} c_{3M-2} c_{3M-1}) c_3, as full string equality.
/// Requires m >= 4 and 3(m+1) <= n.
bool verify_circ_identity(int n, int m);

/// prod_{k=6}^{3m+1} c_k is a prefix of c2. Requires m >= 4.
bool verify_also_prove(int n, int m);

/// c0 = c1 c3 c4 c5 c4 c5 c6 (tail expansion).
bool verify_tail(int n);

/// d0 = d6 + 2 d5 + 3 d4 + 2 d3 + d2.
bool verify_length_identity(int n);

/// x f_{n-2} + y f_n = 2(f_{n-2} + f_n) has the unique nonnegative integer
/// solution x = y = 2.
bool unique_sol_fib(int n);

/// x d2 + y (d4 + d5) = 2(d2 + d4 + d5) has the unique nonnegative integer
/// solution x = y = 2 (context n). Requires d4 > 0.
bool unique_sol_trib(int n);

/// The Fibonacci factor chain from the concluding decomposition, with
/// c(k) = F_{n-k}: every displayed line equals c0. Requires n >= 8.
bool verify_conclusion_decomposition(int n);

/// [Path(f_{n-4}), Cycle(f_{n-5}, 2f_{n-5}+f_{n-6}),
///  Cycle(f_{n-3}, 2f_{n-3}+f_{n-4})] on F_n; 2f_{n-3} states.
ComplexityRecord fibonacci_witness(int n);

/// For n = 10, replay of the published 56-entry state sequence (22 states).
/// Otherwise the experimental generalization
/// [Cycle(f_{n-4}, 2f_{n-4}+f_{n-5}-1), Path(1), Cycle(f_{n-3}, 2f_{n-3}+f_{n-4})]
/// with f_{n-4}+1+f_{n-3} states; returned only when engine-verified.
ComplexityRecord fibonacci_japan_witness(int n);

/// [Cycle(d2, 2d2+S+delta), Path(middle), Cycle(d4+d5, 2(d4+d5)+d6-delta)]
/// on T~_n, where S = sum_{k=6}^{3 floor(n/3)+1} d(k) and delta = n mod 3;
/// deterministic, d1 - S states. Requires n >= 6 (shifted index).
ComplexityRecord tribonacci_witness(int n);

enum class UpperRateKind {
    fib_interm,   // 2 / phi^3
    fib_japan,    // 1/phi^2 + 1/phi^7
    trib_aminus,  // 1/xi - 1/(3 xi^2 + 3 xi + 2)
};

double upper_rate(UpperRateKind kind);

}  // namespace autoplex
