#include "autoplex/words.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace autoplex {

namespace {
constexpr int kMaxAlphabet = 9;

void check_alphabet(int k) {
    if (k < 2 || k > kMaxAlphabet)
        throw std::domain_error("alphabet size must be in [2, 9], got " +
                                std::to_string(k));
}
}  // namespace

Word::Word(std::vector<uint8_t> symbols, int alphabet_size)
    : symbols_(std::move(symbols)), k_(alphabet_size) {
    if (k_ < 1 || k_ > kMaxAlphabet)
        throw std::domain_error("alphabet size out of range");
    for (uint8_t s : symbols_)
        if (s >= k_) throw std::domain_error("symbol out of alphabet range");
}

Word Word::from_string(std::string_view text, int alphabet_size) {
    std::vector<uint8_t> symbols;
    symbols.reserve(text.size());
    int max_sym = -1;
    for (char c : text) {
        if (c < '0' || c > '8')
            throw std::domain_error("word characters must be '0'..'8'");
        symbols.push_back(static_cast<uint8_t>(c - '0'));
        max_sym = std::max(max_sym, c - '0');
    }
    int k = alphabet_size > 0 ? alphabet_size : std::max(1, max_sym + 1);
    return Word(std::move(symbols), k);
}

std::string Word::str() const {
    std::string out;
    out.reserve(symbols_.size());
    for (uint8_t s : symbols_) out.push_back(static_cast<char>('0' + s));
    return out;
}

Word Word::reversed() const {
    std::vector<uint8_t> rev(symbols_.rbegin(), symbols_.rend());
    return Word(std::move(rev), k_);
}

unsigned long long kbonacci_number(int k, int n) {
    check_alphabet(k);
    if (n < 0) throw std::domain_error("index must be nonnegative");
    // w_n = |W_n|: zero up to n = k-2, one at n = k-1.
    if (n <= k - 2) return 0;
    if (n == k - 1) return 1;
    std::vector<unsigned long long> vals(static_cast<std::size_t>(n) + 1, 0);
    vals[k - 1] = 1;
    for (int i = k; i <= n; ++i)
        for (int j = i - k; j < i; ++j)
            if (j >= 0) vals[i] += vals[j];
    return vals[n];
}

Word apply_morphism(int k, const Word& w) {
    check_alphabet(k);
    std::vector<uint8_t> out;
    out.reserve(2 * w.size() + 1);
    for (uint8_t s : w.symbols()) {
        if (s >= k) throw std::domain_error("symbol outside alphabet");
        out.push_back(0);
        if (s < k - 1) out.push_back(static_cast<uint8_t>(s + 1));
    }
    return Word(std::move(out), k);
}

Word kbonacci_word(int k, int n) {
    check_alphabet(k);
    if (n < 0) throw std::domain_error("index must be nonnegative");
    if (n <= k - 2) return Word({}, k);
    Word w({static_cast<uint8_t>(k - 1)}, k);
    for (int i = k; i <= n; ++i) w = apply_morphism(k, w);
    return w;
}

Word infinite_prefix(int k, std::size_t len) {
    check_alphabet(k);
    if (len == 0) return Word({}, k);
    Word w({0}, k);
    while (w.size() < len) w = apply_morphism(k, w);
    std::vector<uint8_t> prefix(w.symbols().begin(),
                                w.symbols().begin() + static_cast<long>(len));
    return Word(std::move(prefix), k);
}

namespace {
double eval_poly(const std::vector<long long>& poly, double x) {
    double acc = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        acc = acc * x + static_cast<double>(*it);
    return acc;
}
}  // namespace

double refine_root(const std::vector<long long>& poly, double lo, double hi,
                   double tol) {
    double flo = eval_poly(poly, lo);
    double fhi = eval_poly(poly, hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0) == (fhi < 0))
        throw std::invalid_argument("bracket endpoints must differ in sign");
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        double fmid = eval_poly(poly, mid);
        if (fmid == 0.0) return mid;
        if ((fmid < 0) == (flo < 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

Constant constant(ConstantName which) {
    Constant c;
    switch (which) {
        case ConstantName::phi:
            c = {"phi", {-1, -1, 1}, 1.0, 2.0, 0.0};
            break;
        case ConstantName::xi:
            c = {"xi", {-1, -1, -1, 1}, 1.0, 2.0, 0.0};
            break;
        case ConstantName::theta:
            c = {"theta", {-1, 1, 1, 1}, 0.0, 1.0, 0.0};
            break;
        case ConstantName::trib_critical_exponent:
            c = {"trib_critical_exponent", {-13, 22, -12, 2}, 3.0, 4.0, 0.0};
            break;
        case ConstantName::trib_lower_rate:
            c = {"trib_lower_rate", {-2, 12, -22, 13}, 0.0, 1.0, 0.0};
            break;
    }
    c.value = refine_root(c.defining_polynomial, c.bracket_lo, c.bracket_hi);
    return c;
}

}  // namespace autoplex
