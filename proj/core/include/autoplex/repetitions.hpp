// repetitions.hpp -- power occurrences, critical exponents and the
// strongly-disjoint-family lower bound on nondeterministic automatic complexity
#pragma once

#include <boost/rational.hpp>
#include <vector>

#include "autoplex/words.hpp"

namespace autoplex {

using Rational = boost::rational<long long>;

/// A periodic repetition: the occurrence occupies [start, start + extent)
/// and has word[i] == word[i + period] throughout. Exponent extent/period.
struct PowerOccurrence {
    int start = 0;
    int period = 1;
    int extent = 0;

    Rational exponent() const { return Rational(extent, period); }
    int gain() const { return 1 + extent - 2 * period; }
    auto operator<=>(const PowerOccurrence&) const = default;
};

/// A family of pairwise strongly disjoint occurrences, sorted by start.
using PowerFamily = std::vector<PowerOccurrence>;

/// All at-least-square occurrences (extent >= 2*period), including every
/// sub-extent of each maximal run, sorted by (start, period, extent).
std::vector<PowerOccurrence> find_power_candidates(const Word& w);

/// Maximum exponent over all occurrences (fractional powers included, not
/// restricted to alpha >= 2). 0 for |w| <= 1, otherwise at least 1.
Rational critical_exponent(const Word& w);

/// Consecutive intervals separated by at least one position.
bool strongly_disjoint(const PowerFamily& f);

/// Uniqueness condition on the loop-length equation of a family. For a
/// single occurrence alpha*y = alpha*p forces y = p, so any family with at
/// most one member passes. A larger family passes iff its periods are
/// pairwise distinct, every exponent is fractional, and
/// sum period_i * y_i = sum extent_i has exactly one solution over
/// nonnegative integers. Calibrated against the published lower-bound
/// tables for T_0..T_10 and F_0..F_10.
bool satisfies_uniqueness(const PowerFamily& f);

/// m + sum(extent_i - 2 period_i).
int family_gain(const PowerFamily& f);

struct AnLowerResult {
    int value = 1;
    int best_gain = 0;
    PowerFamily family;  // a gain-maximal valid family
};

/// Branch-and-bound maximization of family_gain over strongly disjoint
/// families passing the uniqueness condition;
/// value = max(1, ceil((n + 1 - best_gain) / 2)).
AnLowerResult an_lower_search(const Word& w);
int an_lower(const Word& w);

/// (n + 1 - sqrt(2n)) / gamma; requires gamma >= 2.
double sept6_bound(std::size_t n, double gamma);

enum class RateKind { fibonacci, tribonacci, kbonacci_generic };

/// Closed-form complexity-rate lower bounds: 2/(5+sqrt 5), the root of
/// 13x^3-22x^2+12x-2 in (0,1), and 1/4 respectively.
double rate_lower(RateKind kind);

}  // namespace autoplex
