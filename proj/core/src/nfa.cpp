#include "autoplex/nfa.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace autoplex {

Nfa::Nfa(int state_count, int alphabet_size, std::vector<Edge> edges,
         std::vector<int> accept)
    : q_(state_count),
      k_(alphabet_size),
      edges_(std::move(edges)),
      accept_(std::move(accept)) {
    if (q_ < 1) throw std::domain_error("automaton needs at least one state");
    if (k_ < 1) throw std::domain_error("alphabet must be nonempty");
    if (accept_.empty()) throw std::domain_error("accept set must be nonempty");
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    std::sort(accept_.begin(), accept_.end());
    accept_.erase(std::unique(accept_.begin(), accept_.end()), accept_.end());
    for (const Edge& e : edges_)
        if (e.from < 0 || e.from >= q_ || e.to < 0 || e.to >= q_ ||
            e.symbol < 0 || e.symbol >= k_)
            throw std::domain_error("edge references state or symbol out of range");
    for (int s : accept_)
        if (s < 0 || s >= q_)
            throw std::domain_error("accept state out of range");
}

bool Nfa::is_accept(int state) const {
    return std::binary_search(accept_.begin(), accept_.end(), state);
}

bool StateSequence::well_formed() const {
    if (states.size() != word.size() + 1) return false;
    if (states.front() != 0) return false;
    int max_seen = 0;
    for (int s : states) {
        if (s < 0 || s > max_seen + 1) return false;
        max_seen = std::max(max_seen, s);
    }
    return true;
}

Nfa induce_from_sequence(const StateSequence& seq) {
    if (!seq.well_formed())
        throw std::domain_error("state sequence is not well formed");
    std::vector<Edge> edges;
    int max_state = 0;
    for (std::size_t i = 0; i + 1 < seq.states.size(); ++i) {
        edges.push_back({seq.states[i], seq.word[i], seq.states[i + 1]});
        max_state = std::max(max_state, seq.states[i + 1]);
    }
    return Nfa(max_state + 1, seq.word.alphabet_size(), std::move(edges),
               {seq.states.back()});
}

long count_accepting_walks(const Nfa& a, std::size_t n, long cap) {
    if (cap < 2) throw std::domain_error("cap must be at least 2");
    std::vector<long> cur(a.state_count(), 0), next(a.state_count(), 0);
    cur[a.start()] = 1;
    for (std::size_t step = 0; step < n; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (const Edge& e : a.edges())
            next[e.to] = std::min(cap, next[e.to] + cur[e.from]);
        cur.swap(next);
    }
    long total = 0;
    for (int s : a.accept()) total = std::min(cap, total + cur[s]);
    return total;
}

long spells_word(const Nfa& a, const Word& w) {
    constexpr long cap = 2;
    std::vector<long> cur(a.state_count(), 0), next(a.state_count(), 0);
    cur[a.start()] = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::fill(next.begin(), next.end(), 0);
        for (const Edge& e : a.edges())
            if (e.symbol == w[i])
                next[e.to] = std::min(cap, next[e.to] + cur[e.from]);
        cur.swap(next);
    }
    long total = 0;
    for (int s : a.accept()) total = std::min(cap, total + cur[s]);
    return total;
}

bool is_unique_witness(const Nfa& a, const Word& w) {
    return spells_word(a, w) >= 1 && count_accepting_walks(a, w.size(), 2) == 1;
}

bool is_deterministic_partial(const Nfa& a) {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : a.edges())
        if (!seen.insert({e.from, e.symbol}).second) return false;
    return true;
}

Nfa reverse(const Nfa& a) {
    if (a.accept().size() != 1)
        throw std::domain_error("reverse requires a single accept state");
    const int acc = a.accept().front();
    auto relabel = [acc](int s) { return s == 0 ? acc : (s == acc ? 0 : s); };
    std::vector<Edge> edges;
    edges.reserve(a.edges().size());
    for (const Edge& e : a.edges())
        edges.push_back({relabel(e.to), e.symbol, relabel(e.from)});
    return Nfa(a.state_count(), a.alphabet_size(), std::move(edges),
               {relabel(0)});
}

std::string to_dot(const Nfa& a) {
    std::ostringstream out;
    out << "digraph nfa {\n";
    out << "  rankdir=LR;\n";
    out << "  __start [shape=point];\n";
    for (int s = 0; s < a.state_count(); ++s)
        out << "  q" << s << " [shape=" << (a.is_accept(s) ? "doublecircle" : "circle")
            << "];\n";
    out << "  __start -> q0;\n";
    for (const Edge& e : a.edges())
        out << "  q" << e.from << " -> q" << e.to << " [label=\"" << e.symbol
            << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string to_text(const Nfa& a) {
    std::ostringstream out;
    out << a.state_count() << ' ' << a.alphabet_size() << ' ' << a.start() << '\n';
    for (const Edge& e : a.edges())
        out << e.from << ' ' << e.symbol << ' ' << e.to << '\n';
    out << "accept:";
    for (int s : a.accept()) out << ' ' << s;
    out << '\n';
    return out.str();
}

Nfa from_text(const std::string& text) {
    std::istringstream in(text);
    int q = 0, k = 0, start = 0;
    if (!(in >> q >> k >> start) || start != 0)
        throw std::invalid_argument("bad automaton header");
    std::vector<Edge> edges;
    std::vector<int> accept;
    std::string tok;
    while (in >> tok) {
        if (tok == "accept:") {
            int s;
            while (in >> s) accept.push_back(s);
            break;
        }
        Edge e;
        e.from = std::stoi(tok);
        if (!(in >> e.symbol >> e.to))
            throw std::invalid_argument("bad edge line");
        edges.push_back(e);
    }
    return Nfa(q, k, std::move(edges), std::move(accept));
}

}  // namespace autoplex
