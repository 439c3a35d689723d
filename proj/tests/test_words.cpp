#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "autoplex/words.hpp"

using namespace autoplex;

TEST_CASE("kbonacci numbers match the published length columns") {
    const unsigned long long t[] = {0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81};
    const unsigned long long f[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
    for (int n = 0; n <= 10; ++n) {
        CHECK(kbonacci_number(3, n) == t[n]);
        CHECK(kbonacci_number(2, n) == f[n]);
    }
    CHECK_THROWS_AS(kbonacci_number(1, 3), std::domain_error);
}

TEST_CASE("kbonacci words and their lengths agree") {
    CHECK(kbonacci_word(3, 0).str() == "");
    CHECK(kbonacci_word(3, 2).str() == "2");
    CHECK(kbonacci_word(3, 3).str() == "0");
    CHECK(kbonacci_word(3, 4).str() == "01");
    CHECK(kbonacci_word(3, 5).str() == "0102");
    CHECK(kbonacci_word(3, 6).str() == "0102010");
    CHECK(kbonacci_word(3, 7).str() == "0102010010201");
    CHECK(kbonacci_word(2, 1).str() == "1");
    CHECK(kbonacci_word(2, 5).str() == "01001");
    CHECK(kbonacci_word(2, 7).str() == "0100101001001");
    for (int k = 2; k <= 4; ++k)
        for (int n = 0; n <= 14; ++n)
            CHECK(kbonacci_word(k, n).size() == kbonacci_number(k, n));
}

TEST_CASE("the morphism generates successive words") {
    for (int k = 2; k <= 4; ++k)
        for (int n = k - 1; n <= 12; ++n)
            CHECK(apply_morphism(k, kbonacci_word(k, n)) == kbonacci_word(k, n + 1));
}

TEST_CASE("words concatenate by the recurrence") {
    // W_n = W_{n-1} W_{n-2} ... W_{n-k}
    for (int k = 2; k <= 3; ++k)
        for (int n = k + 2; n <= 13; ++n) {
            std::string cat;
            for (int j = 1; j <= k; ++j) cat += kbonacci_word(k, n - j).str();
            CHECK(kbonacci_word(k, n).str() == cat);
        }
}

TEST_CASE("infinite prefix is the limit of the finite words") {
    for (int k = 2; k <= 3; ++k) {
        Word w = kbonacci_word(k, 12);
        Word p = infinite_prefix(k, w.size());
        CHECK(p == w);
    }
    CHECK(infinite_prefix(2, 8).str() == "01001010");
}

TEST_CASE("word parsing, printing, reversal") {
    Word w = Word::from_string("0102010");
    CHECK(w.alphabet_size() == 3);
    CHECK(w.size() == 7);
    CHECK(w.reversed().str() == "0102010");
    CHECK(Word::from_string("012").reversed().str() == "210");
    CHECK(Word::from_string("").size() == 0);
    CHECK_THROWS_AS(Word::from_string("0x1"), std::domain_error);
}

TEST_CASE("refine_root bisects to tolerance") {
    // x^2 - 2
    double r = refine_root({-2, 0, 1}, 1.0, 2.0);
    CHECK(std::abs(r - std::sqrt(2.0)) < 1e-9);
    CHECK_THROWS_AS(refine_root({-2, 0, 1}, 2.0, 3.0), std::invalid_argument);
}

TEST_CASE("algebraic constants to 1e-9") {
    const double phi = constant(ConstantName::phi).value;
    CHECK(std::abs(phi - 1.6180339887498949) < 1e-9);
    CHECK(std::abs(2.0 + phi - 3.618033988) < 1e-8);
    const double xi = constant(ConstantName::xi).value;
    CHECK(std::abs(xi - 1.839286755) < 1e-9);
    const double theta = constant(ConstantName::theta).value;
    CHECK(std::abs(theta * xi - 1.0) < 1e-9);
    CHECK(std::abs(constant(ConstantName::trib_critical_exponent).value -
                   3.19148788) < 1e-8);
    CHECK(std::abs(constant(ConstantName::trib_lower_rate).value -
                   0.313333478) < 1e-9);
    // defining polynomials really vanish at the reported values
    for (ConstantName name :
         {ConstantName::phi, ConstantName::xi, ConstantName::theta,
          ConstantName::trib_critical_exponent, ConstantName::trib_lower_rate}) {
        Constant c = constant(name);
        double v = 0.0, x = 1.0;
        for (long long coeff : c.defining_polynomial) {
            v += static_cast<double>(coeff) * x;
            x *= c.value;
        }
        CHECK(std::abs(v) < 1e-6);
    }
}
