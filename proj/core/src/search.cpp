#include "autoplex/search.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;

namespace autoplex {

std::string measure_name(Measure m) {
    switch (m) {
        case Measure::an: return "AN";
        case Measure::aminus: return "AMINUS";
        case Measure::anlower: return "ANLOWER";
    }
    return "?";
}

nlohmann::json to_json(const ComplexityRecord& rec) {
    nlohmann::json j{{"word", rec.word.str()},
                     {"length", rec.word.size()},
                     {"measure", measure_name(rec.measure)},
                     {"value", rec.value},
                     {"elapsed_ms", rec.elapsed_ms},
                     {"method", rec.method},
                     {"complete", rec.complete}};
    if (rec.witness)
        j["witness"] = rec.witness->states;
    else
        j["witness"] = nullptr;
    if (!rec.family.empty()) {
        nlohmann::json fam = nlohmann::json::array();
        for (const PowerOccurrence& occ : rec.family)
            fam.push_back({{"start", occ.start},
                           {"period", occ.period},
                           {"extent", occ.extent}});
        j["family"] = fam;
    }
    if (!rec.complete) j["bracket"] = {rec.bracket_lo, rec.bracket_hi};
    return j;
}

std::string word_digest(const Word& w) {
    // FNV-1a over the rendered word plus alphabet size.
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](char c) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    };
    for (char c : w.str()) mix(c);
    mix('|');
    mix(static_cast<char>('0' + w.alphabet_size()));
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::vector<std::vector<int>> canonical_prefixes(int depth, int q) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur{0};
    std::function<void(int)> rec = [&](int max_seen) {
        if (static_cast<int>(cur.size()) == depth + 1) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= std::min(q - 1, max_seen + 1); ++v) {
            cur.push_back(v);
            rec(std::max(max_seen, v));
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

void checkpoint_save(const std::string& path, const CheckpointState& state) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw CheckpointError("cannot write checkpoint: " + path);
        out << "autoplex-checkpoint v1\n";
        out << state.digest << ' ' << state.q << ' '
            << (state.deterministic ? "aminus" : "an") << '\n';
        for (const auto& prefix : state.pending) {
            out << "prefix";
            for (int s : prefix) out << ' ' << s;
            out << '\n';
        }
        if (state.complete) {
            if (state.result) {
                out << "result present";
                for (int s : *state.result) out << ' ' << s;
                out << '\n';
            } else {
                out << "result absent\n";
            }
        }
    }
    fs::rename(tmp, path);
}

CheckpointState checkpoint_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CheckpointError("cannot open checkpoint: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "autoplex-checkpoint v1")
        throw CheckpointError("bad checkpoint magic");
    CheckpointState state;
    std::string mode;
    if (!std::getline(in, line))
        throw CheckpointError("missing checkpoint header");
    {
        std::istringstream hs(line);
        if (!(hs >> state.digest >> state.q >> mode) || state.q < 1)
            throw CheckpointError("bad checkpoint header");
    }
    if (mode == "aminus")
        state.deterministic = true;
    else if (mode != "an")
        throw CheckpointError("bad checkpoint mode");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "prefix") {
            std::vector<int> prefix;
            int s;
            while (ls >> s) prefix.push_back(s);
            if (prefix.empty() || prefix.front() != 0)
                throw CheckpointError("bad checkpoint prefix");
            state.pending.push_back(std::move(prefix));
        } else if (tag == "result") {
            std::string kind;
            if (!(ls >> kind)) throw CheckpointError("bad checkpoint result");
            state.complete = true;
            if (kind == "present") {
                std::vector<int> seq;
                int s;
                while (ls >> s) seq.push_back(s);
                state.result = std::move(seq);
            } else if (kind != "absent") {
                throw CheckpointError("bad checkpoint result");
            }
        } else {
            throw CheckpointError("unrecognized checkpoint line");
        }
    }
    return state;
}

namespace {

// Depth-first extension of a canonical state sequence with incremental
// walk counting. cnt[i][s] counts walks of length i from the start to s over
// the edges present when step i was taken; a stale undercount only weakens
// the prune, never the final from-scratch verification.
struct Dfs {
    const Word& w;
    int n, q, k;
    bool det;
    std::vector<int> seq;
    std::vector<char> edge_present;                       // (u*k+a)*q+v
    std::vector<std::vector<std::pair<int, int>>> out;    // from -> (sym, to)
    std::vector<std::vector<uint8_t>> cnt;
    std::vector<int> det_tab;                             // u*k+a -> to, -1 none
    struct Frame {
        int prev_max;
        bool edge_new;
        bool det_set;
    };
    std::vector<Frame> frames;
    int max_state = 0;
    std::function<bool()> should_stop;
    uint64_t nodes = 0;
    bool aborted = false;
    std::optional<std::vector<int>> found;

    Dfs(const Word& word, int states, bool deterministic,
        std::function<bool()> stop)
        : w(word),
          n(static_cast<int>(word.size())),
          q(states),
          k(word.alphabet_size()),
          det(deterministic),
          should_stop(std::move(stop)) {
        seq.reserve(n + 1);
        seq.push_back(0);
        edge_present.assign(static_cast<std::size_t>(q) * k * q, 0);
        out.assign(q, {});
        cnt.assign(n + 1, std::vector<uint8_t>(q, 0));
        cnt[0][0] = 1;
        det_tab.assign(static_cast<std::size_t>(q) * k, -1);
    }

    bool try_push(int v) {
        const int i = static_cast<int>(seq.size()) - 1;
        if (i >= n || v >= q || v > max_state + 1) return false;
        const int new_max = std::max(max_state, v);
        if ((q - 1) - new_max > n - (i + 1)) return false;  // cannot reach q states
        const int u = seq.back();
        const int a = w[i];
        if (det) {
            const int cur = det_tab[u * k + a];
            if (cur != -1 && cur != v) return false;
        }
        const std::size_t eidx = (static_cast<std::size_t>(u) * k + a) * q + v;
        const bool edge_new = !edge_present[eidx];
        if (edge_new) {
            edge_present[eidx] = 1;
            out[u].push_back({a, v});
        }
        auto& next = cnt[i + 1];
        std::fill(next.begin(), next.end(), 0);
        for (int s = 0; s < q; ++s) {
            const uint8_t c = cnt[i][s];
            if (!c) continue;
            for (auto [sym, to] : out[s])
                next[to] = static_cast<uint8_t>(std::min(next[to] + c, 2));
        }
        if (next[v] >= 2) {  // a second walk would reuse the path's suffix
            if (edge_new) {
                edge_present[eidx] = 0;
                out[u].pop_back();
            }
            return false;
        }
        bool det_set = false;
        if (det && det_tab[u * k + a] == -1) {
            det_tab[u * k + a] = v;
            det_set = true;
        }
        frames.push_back({max_state, edge_new, det_set});
        max_state = new_max;
        seq.push_back(v);
        return true;
    }

    void pop() {
        const int v = seq.back();
        seq.pop_back();
        const int i = static_cast<int>(seq.size()) - 1;
        const int u = seq.back();
        const int a = w[i];
        const Frame f = frames.back();
        frames.pop_back();
        max_state = f.prev_max;
        if (f.det_set) det_tab[u * k + a] = -1;
        if (f.edge_new) {
            edge_present[(static_cast<std::size_t>(u) * k + a) * q + v] = 0;
            out[u].pop_back();
        }
    }

    // 0: subtree exhausted, 1: witness found (in `found`), 2: aborted.
    int run() {
        if (++nodes % 2048 == 0 && should_stop && should_stop()) {
            aborted = true;
            return 2;
        }
        const int i = static_cast<int>(seq.size()) - 1;
        if (i == n) {
            if (max_state != q - 1) return 0;
            const Nfa a = induce_from_sequence({seq, w});
            if (count_accepting_walks(a, static_cast<std::size_t>(n), 2) == 1) {
                found = seq;
                return 1;
            }
            return 0;
        }
        const int vmax = std::min(q - 1, max_state + 1);
        for (int v = 0; v <= vmax; ++v) {
            if (!try_push(v)) continue;
            const int r = run();
            pop();
            if (r) return r;
        }
        return 0;
    }
};

}  // namespace

std::optional<StateSequence> search_fixed_q(const Word& w, int q,
                                            bool deterministic,
                                            const SearchConfig& cfg) {
    const int n = static_cast<int>(w.size());
    if (q < 1 || q > n + 1)
        throw std::domain_error("state bound must be in [1, |word|+1]");

    std::optional<std::chrono::steady_clock::time_point> deadline = cfg.deadline;
    if (!deadline && cfg.time_budget_seconds)
        deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(*cfg.time_budget_seconds));

    const int depth = std::clamp(cfg.parallel_split_depth, 0, n);
    const std::string digest = word_digest(w);
    std::vector<std::vector<int>> pending = canonical_prefixes(depth, q);
    if (!cfg.checkpoint_path.empty() && fs::exists(cfg.checkpoint_path)) {
        try {
            CheckpointState ck = checkpoint_load(cfg.checkpoint_path);
            if (ck.digest == digest && ck.q == q &&
                ck.deterministic == deterministic) {
                if (ck.complete) {
                    if (ck.result) return StateSequence{*ck.result, w};
                    return std::nullopt;
                }
                pending = ck.pending;
            }
        } catch (const CheckpointError&) {
            // unreadable or mismatched file: restart clean
        }
    }
    std::sort(pending.begin(), pending.end());

    const std::size_t m = pending.size();
    std::atomic<std::size_t> next_item{0};
    std::atomic<int> best_idx{INT_MAX};
    std::atomic<bool> budget_stop{false};
    std::mutex mu;
    std::vector<char> done(m, 0);
    std::map<std::size_t, std::vector<int>> witnesses;

    auto persist = [&](bool complete, const std::optional<std::vector<int>>& result) {
        if (cfg.checkpoint_path.empty()) return;
        CheckpointState st;
        st.digest = digest;
        st.q = q;
        st.deterministic = deterministic;
        st.complete = complete;
        st.result = result;
        if (!complete)
            for (std::size_t j = 0; j < m; ++j)
                if (!done[j]) st.pending.push_back(pending[j]);
        checkpoint_save(cfg.checkpoint_path, st);
    };

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next_item.fetch_add(1);
            if (i >= m) return;
            if (budget_stop.load()) return;
            if (deadline && std::chrono::steady_clock::now() > *deadline) {
                budget_stop.store(true);
                return;
            }
            if (static_cast<int>(i) > best_idx.load()) {
                std::lock_guard<std::mutex> lock(mu);
                done[i] = 1;  // cannot beat an earlier witness
                continue;
            }
            Dfs dfs(w, q, deterministic, [&, i]() {
                if (budget_stop.load(std::memory_order_relaxed)) return true;
                if (deadline && std::chrono::steady_clock::now() > *deadline) {
                    budget_stop.store(true);
                    return true;
                }
                return static_cast<int>(i) > best_idx.load(std::memory_order_relaxed);
            });
            bool viable = true;
            for (std::size_t j = 1; j < pending[i].size(); ++j)
                if (!dfs.try_push(pending[i][j])) {
                    viable = false;
                    break;
                }
            const int r = viable ? dfs.run() : 0;
            std::lock_guard<std::mutex> lock(mu);
            if (r == 2) {
                if (!budget_stop.load()) done[i] = 1;  // beaten, not budget
                continue;
            }
            done[i] = 1;
            if (r == 1 && dfs.found) {
                witnesses[i] = *dfs.found;
                int expect = best_idx.load();
                while (static_cast<int>(i) < expect &&
                       !best_idx.compare_exchange_weak(expect, static_cast<int>(i))) {
                }
            }
            persist(false, std::nullopt);
        }
    };

    const int threads = std::max(1, cfg.threads);
    if (threads == 1 || m <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < std::min<int>(threads, static_cast<int>(m)); ++t)
            pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    if (budget_stop.load()) {
        persist(false, std::nullopt);
        throw BudgetExceeded(q, n + 1);
    }
    if (!witnesses.empty()) {
        const auto& seq = witnesses.begin()->second;
        persist(true, seq);
        return StateSequence{seq, w};
    }
    persist(true, std::nullopt);
    return std::nullopt;
}

namespace {

ComplexityRecord exact_impl(const Word& w, SearchConfig cfg, bool deterministic) {
    const auto t0 = std::chrono::steady_clock::now();
    ComplexityRecord rec;
    rec.word = w;
    rec.measure = deterministic ? Measure::aminus : Measure::an;
    rec.method = deterministic ? "canonical-dfs-deterministic" : "canonical-dfs";
    const int n = static_cast<int>(w.size());
    if (cfg.time_budget_seconds && !cfg.deadline)
        cfg.deadline = t0 +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(*cfg.time_budget_seconds));

    int q_lo = cfg.q_min > 0 ? cfg.q_min : an_lower(w);
    q_lo = std::max(1, q_lo);
    int q_hi = cfg.q_max > 0 ? std::min(cfg.q_max, n + 1) : n + 1;
    if (!cfg.checkpoint_path.empty() && fs::exists(cfg.checkpoint_path)) {
        try {
            CheckpointState ck = checkpoint_load(cfg.checkpoint_path);
            if (ck.digest == word_digest(w) && ck.deterministic == deterministic &&
                ck.q >= q_lo && ck.q <= q_hi)
                q_lo = ck.q;  // resume where the interrupted run stopped
        } catch (const CheckpointError&) {
        }
    }

    try {
        for (int q = q_lo; q <= q_hi; ++q) {
            auto res = search_fixed_q(w, q, deterministic, cfg);
            if (res) {
                rec.value = q;
                rec.witness = std::move(res);
                break;
            }
        }
    } catch (const BudgetExceeded& e) {
        rec.complete = false;
        rec.bracket_lo = e.bracket_lo;
        rec.bracket_hi = e.bracket_hi;
        rec.value = e.bracket_lo;
    }
    rec.elapsed_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0)
            .count());
    return rec;
}

}  // namespace

ComplexityRecord an_exact(const Word& w, const SearchConfig& cfg) {
    return exact_impl(w, cfg, false);
}

ComplexityRecord aminus_exact(const Word& w, const SearchConfig& cfg) {
    return exact_impl(w, cfg, true);
}

ComplexityRecord an_lower_record(const Word& w) {
    const auto t0 = std::chrono::steady_clock::now();
    AnLowerResult res = an_lower_search(w);
    ComplexityRecord rec;
    rec.word = w;
    rec.measure = Measure::anlower;
    rec.value = res.value;
    rec.family = res.family;
    rec.method = "power-family-bnb";
    rec.elapsed_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0)
            .count());
    return rec;
}

}  // namespace autoplex
