#include <doctest.h>

#include <random>
#include <stdexcept>

#include "autoplex/nfa.hpp"
#include "oracles.hpp"

using namespace autoplex;

namespace {

Nfa random_nfa(std::mt19937& rng, int q, int k, int edge_count) {
    std::uniform_int_distribution<int> state(0, q - 1), symbol(0, k - 1);
    std::vector<Edge> edges;
    for (int i = 0; i < edge_count; ++i)
        edges.push_back({state(rng), symbol(rng), state(rng)});
    return Nfa(q, k, edges, {state(rng)});
}

Word random_word(std::mt19937& rng, int k, int len) {
    std::uniform_int_distribution<int> symbol(0, k - 1);
    std::vector<uint8_t> s;
    for (int i = 0; i < len; ++i) s.push_back(static_cast<uint8_t>(symbol(rng)));
    return Word(s, k);
}

}  // namespace

TEST_CASE("edges are sorted and deduplicated, accept states validated") {
    Nfa a(2, 2, {{1, 0, 0}, {0, 1, 1}, {0, 1, 1}}, {1});
    CHECK(a.edges().size() == 2);
    CHECK(a.edges()[0] == Edge{0, 1, 1});
    CHECK(a.is_accept(1));
    CHECK(!a.is_accept(0));
    CHECK_THROWS_AS(Nfa(2, 2, {}, {}), std::domain_error);
    CHECK_THROWS_AS(Nfa(2, 2, {{0, 0, 5}}, {1}), std::domain_error);
}

TEST_CASE("walk counting agrees with explicit path enumeration") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        Nfa a = random_nfa(rng, 3, 2, 6);
        Word w = random_word(rng, 2, 5);
        long expected = oracles::enumerate_walks(a, w);
        CHECK(spells_word(a, w) == std::min<long>(expected, 2));
    }
}

TEST_CASE("count_accepting_walks counts all labels of a given length") {
    // Two parallel labeled edges 0 -> 1 give two walks of length 1.
    Nfa a(2, 2, {{0, 0, 1}, {0, 1, 1}}, {1});
    CHECK(count_accepting_walks(a, 1) == 2);
    CHECK(count_accepting_walks(a, 2) == 0);
    // Saturation at the cap.
    Nfa loop(1, 2, {{0, 0, 0}, {0, 1, 0}}, {0});
    CHECK(count_accepting_walks(loop, 10, 5) == 5);
}

TEST_CASE("unique witness requires exactly one accepting walk over all labels") {
    Word w = Word::from_string("01010");
    StateSequence seq{{0, 1, 0, 1, 0, 1}, w};
    REQUIRE(seq.well_formed());
    Nfa a = induce_from_sequence(seq);
    CHECK(a.state_count() == 2);
    CHECK(is_unique_witness(a, w));
    CHECK(is_deterministic_partial(a));
    // "0100" induced on one state accepts many length-4 walks.
    Word v = Word::from_string("00");
    Nfa all(1, 2, {{0, 0, 0}}, {0});
    CHECK(spells_word(all, v) == 1);
    CHECK(is_unique_witness(all, v));
    Nfa both(1, 2, {{0, 0, 0}, {0, 1, 0}}, {0});
    CHECK(!is_unique_witness(both, v));  // other labels give more walks
}

TEST_CASE("sequence well-formedness is restricted growth with the right shape") {
    Word w = Word::from_string("010");
    CHECK(StateSequence{{0, 1, 2, 0}, w}.well_formed());
    CHECK(!StateSequence{{0, 2, 1, 0}, w}.well_formed());  // skips state 1
    CHECK(!StateSequence{{1, 0, 1, 0}, w}.well_formed());  // must start at 0
    CHECK(!StateSequence{{0, 1, 0}, w}.well_formed());     // wrong length
}

TEST_CASE("reverse swaps start and accept and preserves witness-ness") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Word w = random_word(rng, 2, 6);
        // a path-shaped candidate sequence from a random restricted growth walk
        std::vector<int> states{0};
        int used = 1;
        for (std::size_t i = 0; i < w.size(); ++i) {
            int s = std::uniform_int_distribution<int>(0, used)(rng);
            states.push_back(s);
            used = std::max(used, s + 1);
        }
        StateSequence seq{states, w};
        Nfa a = induce_from_sequence(seq);
        Nfa r = reverse(a);
        CHECK(r.state_count() == a.state_count());
        CHECK(r.edges().size() == a.edges().size());
        CHECK(spells_word(a, w) == spells_word(r, w.reversed()));
        CHECK(is_unique_witness(a, w) == is_unique_witness(r, w.reversed()));
    }
}

TEST_CASE("text round-trip preserves the automaton") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Nfa a = random_nfa(rng, 4, 3, 8);
        CHECK(from_text(to_text(a)) == a);
    }
}

TEST_CASE("dot rendering shows start, accept and labeled edges") {
    Word w = Word::from_string("01010");
    Nfa a = induce_from_sequence({{0, 1, 0, 1, 0, 1}, w});
    std::string dot = to_dot(a);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("label=\"0\"") != std::string::npos);
    CHECK(dot.find("label=\"1\"") != std::string::npos);
}
