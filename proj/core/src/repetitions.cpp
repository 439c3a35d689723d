#include "autoplex/repetitions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace autoplex {

namespace {

// For one period p: run[i] = number of consecutive positions j >= i with
// w[j] == w[j + p]. The maximal extent of an occurrence at i is p + run[i].
std::vector<int> match_runs(const Word& w, int p) {
    const int n = static_cast<int>(w.size());
    std::vector<int> run(std::max(0, n - p) + 1, 0);
    for (int i = n - p - 1; i >= 0; --i)
        run[i] = (w[i] == w[i + p]) ? run[i + 1] + 1 : 0;
    return run;
}

}  // namespace

std::vector<PowerOccurrence> find_power_candidates(const Word& w) {
    const int n = static_cast<int>(w.size());
    std::vector<PowerOccurrence> out;
    for (int p = 1; 2 * p <= n; ++p) {
        std::vector<int> run = match_runs(w, p);
        for (int start = 0; start + 2 * p <= n; ++start) {
            const int max_extent = p + run[start];
            for (int extent = 2 * p; extent <= max_extent; ++extent)
                out.push_back({start, p, extent});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational critical_exponent(const Word& w) {
    const int n = static_cast<int>(w.size());
    if (n <= 1) return Rational(0);
    Rational best(1);
    for (int p = 1; p < n; ++p) {
        std::vector<int> run = match_runs(w, p);
        int longest = 0;
        for (int i = 0; i + p < n; ++i) longest = std::max(longest, run[i]);
        Rational exp(p + longest, p);
        if (exp > best) best = exp;
    }
    return best;
}

bool strongly_disjoint(const PowerFamily& f) {
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (f[i + 1].start < f[i].start + f[i].extent + 1) return false;
    return true;
}

namespace {

// Nonnegative-integer solutions of sum period_i * y_i == remaining over the
// suffix f[i..], counted with a cap (2 is enough to decide uniqueness).
int count_solutions(const PowerFamily& f, std::size_t i, long long remaining,
                    int cap) {
    if (i == f.size()) return remaining == 0 ? 1 : 0;
    int total = 0;
    for (long long y = 0; y * f[i].period <= remaining; ++y) {
        total += count_solutions(f, i + 1, remaining - y * f[i].period,
                                 cap - total);
        if (total >= cap) return total;
    }
    return total;
}

}  // namespace

bool satisfies_uniqueness(const PowerFamily& f) {
    if (f.size() <= 1) return true;  // alpha*y = alpha*p forces y = p
    long long target = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].extent % f[i].period == 0) return false;
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (f[i].period == f[j].period) return false;
        target += f[i].extent;
    }
    return count_solutions(f, 0, target, 2) == 1;
}

int family_gain(const PowerFamily& f) {
    int gain = 0;
    for (const PowerOccurrence& occ : f) gain += occ.gain();
    return gain;
}

namespace {

struct GainSearch {
    int n = 0;
    std::vector<std::vector<PowerOccurrence>> at;  // candidates by start
    std::vector<int> bound;                        // uniqueness-free optimum
    PowerFamily current;
    PowerFamily best_family;
    int best = 0;

    void dfs(int pos, int gain) {
        if (gain > best && satisfies_uniqueness(current)) {
            best = gain;
            best_family = current;
        }
        for (int s = pos; s < n; ++s) {
            if (gain + bound[s] <= best) return;  // bound is non-increasing
            for (const PowerOccurrence& occ : at[s]) {
                current.push_back(occ);
                dfs(std::min(n, s + occ.extent + 1), gain + occ.gain());
                current.pop_back();
            }
        }
    }
};

}  // namespace

AnLowerResult an_lower_search(const Word& w) {
    const int n = static_cast<int>(w.size());
    GainSearch search;
    search.n = n;
    search.at.assign(n + 1, {});
    for (const PowerOccurrence& occ : find_power_candidates(w))
        search.at[occ.start].push_back(occ);
    search.bound.assign(n + 2, 0);
    for (int pos = n - 1; pos >= 0; --pos) {
        search.bound[pos] = search.bound[pos + 1];
        for (const PowerOccurrence& occ : search.at[pos])
            search.bound[pos] =
                std::max(search.bound[pos],
                         occ.gain() + search.bound[std::min(n, pos + occ.extent + 1)]);
    }
    // Explore higher-payoff occurrences first so the bound bites early.
    for (auto& group : search.at)
        std::sort(group.begin(), group.end(),
                  [&](const PowerOccurrence& a, const PowerOccurrence& b) {
                      int pa = a.gain() + search.bound[std::min(n, a.start + a.extent + 1)];
                      int pb = b.gain() + search.bound[std::min(n, b.start + b.extent + 1)];
                      return pa > pb;
                  });
    search.dfs(0, 0);

    AnLowerResult result;
    result.best_gain = search.best;
    result.family = search.best_family;
    const int numerator = n + 1 - search.best;
    result.value = std::max(1, (numerator + 1) / 2);
    return result;
}

int an_lower(const Word& w) { return an_lower_search(w).value; }

double sept6_bound(std::size_t n, double gamma) {
    if (gamma < 2.0) throw std::domain_error("gamma must be at least 2");
    const double dn = static_cast<double>(n);
    return (dn + 1.0 - std::sqrt(2.0 * dn)) / gamma;
}

double rate_lower(RateKind kind) {
    switch (kind) {
        case RateKind::fibonacci:
            return 2.0 / (5.0 + std::sqrt(5.0));
        case RateKind::tribonacci:
            return constant(ConstantName::trib_lower_rate).value;
        case RateKind::kbonacci_generic:
            return 0.25;
    }
    throw std::domain_error("unknown rate kind");
}

}  // namespace autoplex
