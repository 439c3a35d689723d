// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit on any
// FAIL. Run with --slow to include the opt-in slow cells.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "autoplex/constructions.hpp"
#include "autoplex/repetitions.hpp"
#include "autoplex/search.hpp"
#include "autoplex/words.hpp"
#include "oracles.hpp"

using namespace autoplex;

namespace {

bool slow_mode = false;
int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void report(int criterion, bool ok, double seconds, const std::string& note) {
    std::printf("criterion %2d: %s  (%.1fs)  %s\n", criterion,
                ok ? "PASS" : "FAIL", seconds, note.c_str());
    if (!ok) ++failures;
}

std::string run_cli(const std::string& args) {
    std::string cmd = std::string(AUTOPLEX_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    pclose(pipe);
    return out;
}

void criterion1_lengths() {
    Timer t;
    const unsigned long long tt[] = {0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81};
    const unsigned long long ff[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
    bool ok = true;
    for (int n = 0; n <= 10; ++n)
        ok = ok && kbonacci_number(3, n) == tt[n] && kbonacci_number(2, n) == ff[n];
    ok = ok && t.seconds() < 1.0;
    report(1, ok, t.seconds(), "t_n and f_n length columns");
}

void criterion2_anlower() {
    Timer t;
    const int expT[] = {1, 1, 1, 1, 2, 3, 4, 7, 12, 21, 36};
    const int expF[] = {1, 1, 1, 2, 2, 3, 4, 6, 9, 14, 21};
    bool ok = true;
    for (int n = 0; n <= 10; ++n) {
        ok = ok && an_lower(kbonacci_word(3, n)) == expT[n];
        ok = ok && an_lower(kbonacci_word(2, n)) == expF[n];
    }
    ok = ok && t.seconds() < 600.0;
    report(2, ok, t.seconds(), "A_N^lower columns of both tables");
}

void criterion3_aminus() {
    Timer t;
    const int exp[] = {1, 1, 1, 1, 2, 3, 4, 7};
    bool ok = true;
    for (int n = 0; n <= 7; ++n)
        ok = ok && aminus_exact(kbonacci_word(3, n)).value == exp[n];
    ok = ok && t.seconds() < 60.0;
    std::string note = "A^- of T_0..T_7";
    if (slow_mode) {
        SearchConfig cfg;
        cfg.threads = 4;
        bool t8 = aminus_exact(kbonacci_word(3, 8), cfg).value == 13;
        ok = ok && t8;
        note += ", T_8 = 13";
    } else {
        note += " (T_8 cell: opt-in via --slow)";
    }
    Timer t9;
    int upper = tribonacci_witness(6).value;   // T_9 in shifted numbering
    int lower = an_lower(kbonacci_word(3, 9));
    ok = ok && upper == 22 && lower == 21 && t9.seconds() < 60.0;
    note += "; A^-(T_9) bracketed by [21, 22]";
    report(3, ok, t.seconds(), note);
}

void criterion4_an_exact() {
    Timer t;
    bool ok = an_exact(Word::from_string("0102010")).value == 4 &&
              an_exact(kbonacci_word(3, 7)).value == 7;
    for (int len = 1; len <= 8 && ok; ++len)
        for (unsigned bits = 0; bits < (1u << len) && ok; ++bits) {
            Word w = oracles::binary_word(bits, len);
            int v = an_exact(w).value;
            ok = ok && v == oracles::brute_force_an(w);
            ok = ok && an_exact(w.reversed()).value == v;
            ok = ok && an_exact(oracles::permute_alphabet(w, {1, 0})).value == v;
        }
    ok = ok && t.seconds() < 600.0;
    report(4, ok, t.seconds(),
           "exact A_N values, enumeration agreement, invariances (length <= 8)");
}

void criterion5_squeeze() {
    Timer t;
    bool ok = true;
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 500 && ok; ++trial) {
        int len = 1 + static_cast<int>(rng() % 10);
        Word w = oracles::binary_word(static_cast<unsigned>(rng()), len);
        int lo = an_lower(w);
        int an = an_exact(w).value;
        int am = aminus_exact(w).value;
        ok = lo <= an && an <= am;
    }
    report(5, ok, t.seconds(), "an_lower <= A_N <= A^- on 500 sampled words");
}

void criterion6_constants() {
    Timer t;
    auto near = [](double a, double b, double tol = 1e-9) {
        return std::abs(a - b) < tol;
    };
    const double phi = constant(ConstantName::phi).value;
    const double xi = constant(ConstantName::xi).value;
    bool ok = near(2 + phi, 3.618033988, 1e-8) &&
              near(constant(ConstantName::trib_critical_exponent).value,
                   3.19148788, 1e-8) &&
              near(xi, 1.839286755) &&
              near(rate_lower(RateKind::fibonacci), 2.0 / (5.0 + std::sqrt(5.0))) &&
              near(rate_lower(RateKind::fibonacci), 0.276393202) &&
              near(rate_lower(RateKind::tribonacci), 0.313333478) &&
              near(upper_rate(UpperRateKind::fib_interm), 0.472135955) &&
              near(upper_rate(UpperRateKind::fib_interm), 2.0 / std::pow(phi, 3)) &&
              near(upper_rate(UpperRateKind::fib_japan), 0.41640786499) &&
              near(upper_rate(UpperRateKind::fib_japan),
                   1 / (phi * phi) + 1 / std::pow(phi, 7)) &&
              near(upper_rate(UpperRateKind::trib_aminus), 0.4870856, 1e-7) &&
              near(upper_rate(UpperRateKind::trib_aminus),
                   1 / xi - 1 / (3 * xi * xi + 3 * xi + 2));
    ok = ok && t.seconds() < 1.0;
    report(6, ok, t.seconds(), "algebraic constants and rate bounds to 1e-9");
}

void criterion7_critical_exponents() {
    Timer t;
    bool ok = true;
    // Fibonacci prefixes: nondecreasing along a ladder, bounded by 2 + phi at
    // the full length, above 3.5 somewhere, and equal to the naive scan.
    Word fib = infinite_prefix(2, 10000);
    Rational prev(0);
    bool exceeded = false;
    for (int len : {100, 500, 1000, 2000, 4000, 7000, 10000}) {
        Word prefix(std::vector<uint8_t>(fib.symbols().begin(),
                                         fib.symbols().begin() + len),
                    2);
        Rational ce = critical_exponent(prefix);
        ok = ok && ce >= prev;
        prev = ce;
        if (ce > Rational(7, 2)) exceeded = true;
        if (len <= 2000)
            ok = ok && ce == oracles::naive_critical_exponent(prefix);
    }
    double phi = constant(ConstantName::phi).value;
    ok = ok && exceeded &&
         boost::rational_cast<double>(prev) < 2.0 + phi;
    // Tribonacci prefixes stay below the critical-exponent constant.
    Word trib = infinite_prefix(3, 10000);
    Rational tce = critical_exponent(trib);
    ok = ok && boost::rational_cast<double>(tce) < 3.19148879;
    ok = ok && t.seconds() < 300.0;
    report(7, ok, t.seconds(),
           "critical exponents on 10000-prefixes with naive-scan oracle");
}

void criterion8_factorizations() {
    Timer t;
    bool ok = true;
    for (int n = 8; n <= 30; ++n) ok = ok && verify_prefix_theorem(n);
    for (int n = 15; n <= 30; ++n)
        for (int m = 4; 3 * (m + 1) <= n; ++m)
            ok = ok && verify_circ_identity(n, m) && verify_also_prove(n, m);
    for (int n = 6; n <= 30; ++n) ok = ok && verify_tail(n);
    for (int n = 8; n <= 30; ++n) ok = ok && verify_length_identity(n);
    for (int n = 8; n <= 16; ++n) ok = ok && verify_conclusion_decomposition(n);
    ok = ok && !unique_sol_fib(5);
    for (int n = 6; n <= 30; ++n) ok = ok && unique_sol_fib(n);
    for (int n = 8; n <= 30; ++n) ok = ok && unique_sol_trib(n);
    ok = ok && t.seconds() < 30.0;
    report(8, ok, t.seconds(), "factorization and unique-solution suite, n <= 30");
}

void criterion9_witnesses() {
    Timer t;
    bool ok = true;
    std::string note;
    // The published schedule fails engine verification at n = 8: the automaton
    // admits a second accepting walk of length f_8. Reported honestly.
    bool n8_verified = false;
    try {
        fibonacci_witness(8);
        n8_verified = true;
    } catch (const ConstructionError&) {
    }
    for (int n = 9; n <= 16; ++n) {
        ComplexityRecord rec = fibonacci_witness(n);
        ok = ok && rec.value == 2 * static_cast<int>(kbonacci_number(2, n - 3));
    }
    ok = ok && tribonacci_witness(6).value == 22 &&
         tribonacci_witness(7).value == 41;
    ComplexityRecord japan = fibonacci_japan_witness(10);
    ok = ok && japan.value == 22 && japan.witness &&
         japan.witness->states.size() == 56;
    ok = ok && t.seconds() < 300.0;
    if (!n8_verified) {
        note = "fibonacci_witness(8): published schedule admits a second "
               "accepting walk (verified n in [9,16]; trib 22/41; japan 22)";
        ok = false;
    } else {
        note = "fib n in [8,16], trib 22/41, japan replay 22";
    }
    report(9, ok, t.seconds(), note);
}

void criterion10_tables() {
    Timer t;
    const char* expected1 =
        "n   t_n  T_n             .313t_n  A_N^lower  A^-  (notWide)  .487t_n\n"
        "0   0                    0        1          1               0\n"
        "1   0                    0        1          1               0\n"
        "2   1    2               .3       1          1               0.49\n"
        "3   1    0               .3       1          1               0.49\n"
        "4   2    01              .6       2          2               0.97\n"
        "5   4    0102            1.3      3          3               1.95\n"
        "6   7    0102010         2.2      4          4               3.4\n"
        "7   13   0102010010201   4.1      7          7               6.3\n"
        "8   24   0102...0100102  7.5      12              "
        "           11.7\n"
        "9   44   0102...0102010  13.8     21              22         21.4\n"
        "10  81   0102...0010201  25.4     36              41         39.4\n";
    const char* expected2 =
        "n   f_n  F_n                              .276f_n  A_N^lower  .382f_n\n"
        "0   0                                     0        1          0\n"
        "1   1    1                                .3       1          0.4\n"
        "2   1    0                                .3       1          0.4\n"
        "3   2    01                               .6       2          0.8\n"
        "4   3    010                              .8       2          1.1\n"
        "5   5    01001                            1.4      3          1.9\n"
        "6   8    01001010                         2.2      4          3.1\n"
        "7   13   0100101001001                    3.6      6          5.0\n"
        "8   21   010010100100101001010            5.8      9          8.0\n"
        "9   34   010010100100101001010...1001001  9.4      14         13.0\n"
        "10  55   0100...1010                      15.2     21         21.0\n";
    std::string t1 = run_cli("tables --which 1");
    std::string t2 = run_cli("tables --which 2");
    bool ok = t1 == expected1 && t2 == expected2;
    report(10, ok, t.seconds(), "tables command matches the published cells");
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--slow") == 0) slow_mode = true;
    criterion1_lengths();
    criterion2_anlower();
    criterion3_aminus();
    criterion4_an_exact();
    criterion5_squeeze();
    criterion6_constants();
    criterion7_critical_exponents();
    criterion8_factorizations();
    criterion9_witnesses();
    criterion10_tables();
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
