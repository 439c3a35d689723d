// nfa.hpp -- candidate witness automata and the unique-accepting-path checks
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "autoplex/words.hpp"

namespace autoplex {

struct Edge {
    int from = 0;
    int symbol = 0;
    int to = 0;
    auto operator<=>(const Edge&) const = default;
};

/// A nondeterministic finite automaton without epsilon transitions.
/// State 0 is always the start state. Edges are kept sorted and deduplicated.
class Nfa {
public:
    Nfa(int state_count, int alphabet_size, std::vector<Edge> edges,
        std::vector<int> accept);

    int state_count() const { return q_; }
    int alphabet_size() const { return k_; }
    int start() const { return 0; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& accept() const { return accept_; }
    bool is_accept(int state) const;

    bool operator==(const Nfa&) const = default;

private:
    int q_ = 1;
    int k_ = 1;
    std::vector<Edge> edges_;
    std::vector<int> accept_;  // sorted, nonempty
};

/// The states visited by a candidate accepting path: s_0..s_n with s_0 = 0,
/// one state per position of `word` plus one.
struct StateSequence {
    std::vector<int> states;
    Word word;

    /// Restricted-growth canonical form with the stated shape.
    bool well_formed() const;
};

/// The automaton whose edges are exactly the consecutive-pair transitions of
/// the sequence, with accept = {s_n}.
Nfa induce_from_sequence(const StateSequence& seq);

/// Number of walks of length n from the start to any accept state, counting
/// each labeled edge once per step. Saturates at `cap` (>= 2).
long count_accepting_walks(const Nfa& a, std::size_t n, long cap = 2);

/// Number of accepting walks labeled exactly w, saturating at 2.
long spells_word(const Nfa& a, const Word& w);

/// True iff the automaton accepts w and has exactly one accepting walk of
/// length |w| over all labels.
bool is_unique_witness(const Nfa& a, const Word& w);

/// True iff no two edges share (from_state, symbol).
bool is_deterministic_partial(const Nfa& a);

/// Reverse every edge and swap start with the single accept state.
/// Requires |accept| = 1 and relabels so the old accept state becomes 0.
Nfa reverse(const Nfa& a);

/// Graphviz rendering: start marked by an arrow from a point node, accept
/// states doubly circled, edges labeled by their symbols.
std::string to_dot(const Nfa& a);

/// Line-based text format: header "q k start", one "from symbol to" line per
/// edge, then "accept: s1 s2 ...".
std::string to_text(const Nfa& a);
Nfa from_text(const std::string& text);

}  // namespace autoplex
