// search.hpp -- exact A_N / A^- by canonical state-sequence enumeration
#pragma once

#include <chrono>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "autoplex/nfa.hpp"
#include "autoplex/repetitions.hpp"
#include "autoplex/words.hpp"

namespace autoplex {

enum class Measure { an, aminus, anlower };
std::string measure_name(Measure m);

struct ComplexityRecord {
    Word word;
    Measure measure = Measure::an;
    int value = 0;
    std::optional<StateSequence> witness;
    PowerFamily family;  // populated for anlower
    long elapsed_ms = 0;
    std::string method;
    bool complete = true;
    int bracket_lo = 0;  // when incomplete: value lies in [bracket_lo, bracket_hi]
    int bracket_hi = 0;
};

nlohmann::json to_json(const ComplexityRecord& rec);

struct SearchConfig {
    int q_min = 0;  // 0 means: start from an_lower(word)
    int q_max = 0;  // 0 means: |word| + 1
    int parallel_split_depth = 4;
    int threads = 1;
    std::string checkpoint_path;  // empty: no checkpointing
    std::optional<double> time_budget_seconds;
    std::optional<std::chrono::steady_clock::time_point> deadline;  // internal
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(int lo, int hi)
        : std::runtime_error("time budget exceeded"), bracket_lo(lo), bracket_hi(hi) {}
    int bracket_lo;
    int bracket_hi;
};

class CheckpointError : public std::runtime_error {
public:
    explicit CheckpointError(const std::string& what) : std::runtime_error(what) {}
};

/// Lexicographically least canonical state sequence over exactly q states
/// whose induced automaton is a unique witness for w (and deterministic-partial
/// in deterministic mode), or nullopt. Deterministic across thread counts.
std::optional<StateSequence> search_fixed_q(const Word& w, int q,
                                            bool deterministic,
                                            const SearchConfig& cfg = {});

/// Least q admitting a witness; ascends from an_lower(w).
ComplexityRecord an_exact(const Word& w, const SearchConfig& cfg = {});

/// Same with the deterministic-partial restriction.
ComplexityRecord aminus_exact(const Word& w, const SearchConfig& cfg = {});

/// Convenience wrapper building the anlower record shape.
ComplexityRecord an_lower_record(const Word& w);

/// Search frontier for checkpoint/resume: the canonical prefixes of the fixed
/// split depth not yet explored, plus identification of the search.
struct CheckpointState {
    std::string digest;
    int q = 0;
    bool deterministic = false;
    std::vector<std::vector<int>> pending;
    bool complete = false;
    std::optional<std::vector<int>> result;
};

std::string word_digest(const Word& w);
void checkpoint_save(const std::string& path, const CheckpointState& state);
CheckpointState checkpoint_load(const std::string& path);

/// All restricted-growth prefixes s_0..s_depth with states below q.
std::vector<std::vector<int>> canonical_prefixes(int depth, int q);

}  // namespace autoplex
