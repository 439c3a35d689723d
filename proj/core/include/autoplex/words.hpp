// words.hpp -- k-bonacci numbers, words, morphisms and the algebraic constants
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace autoplex {

/// A finite word over the alphabet {0, ..., k-1}, k <= 9.
/// Text I/O renders symbols as the characters '0'..'8'.
class Word {
public:
    Word() = default;
    Word(std::vector<uint8_t> symbols, int alphabet_size);

    /// Parse from a digit string. With alphabet_size == 0 the alphabet is
    /// inferred as max symbol + 1 (at least 1... empty word gets k = 1).
    static Word from_string(std::string_view text, int alphabet_size = 0);

    int alphabet_size() const { return k_; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    uint8_t operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<uint8_t>& symbols() const { return symbols_; }

    std::string str() const;
    Word reversed() const;

    bool operator==(const Word&) const = default;

private:
    std::vector<uint8_t> symbols_;
    int k_ = 1;
};

/// |W_n^(k)|: 0 for n <= k-2, 1 at n = k-1, afterwards the sum of the
/// previous k values. Throws std::domain_error for k < 2.
unsigned long long kbonacci_number(int k, int n);

/// The n-th k-bonacci word W_n^(k) (Fibonacci for k = 2, Tribonacci for k = 3).
Word kbonacci_word(int k, int n);

/// Image of w under the morphism a_i -> a_0 a_{i+1} (i <= k-2), a_{k-1} -> a_0.
Word apply_morphism(int k, const Word& w);

/// First `len` symbols of the fixed point of the morphism started at a_0.
Word infinite_prefix(int k, std::size_t len);

/// Bisect the unique root of the integer polynomial (ascending coefficients)
/// inside [lo, hi]. Requires a sign change on the bracket.
double refine_root(const std::vector<long long>& poly, double lo, double hi,
                   double tol = 1e-12);

enum class ConstantName {
    phi,                     // positive root of x^2 = x + 1
    xi,                      // real root of x^3 = x^2 + x + 1
    theta,                   // real root of x^3 + x^2 + x = 1 (theta = 1/xi)
    trib_critical_exponent,  // real zero of 2x^3 - 12x^2 + 22x - 13
    trib_lower_rate,         // real root of 13x^3 - 22x^2 + 12x - 2 in (0,1)
};

struct Constant {
    std::string name;
    std::vector<long long> defining_polynomial;  // ascending coefficients
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double value = 0.0;
};

Constant constant(ConstantName which);

}  // namespace autoplex
