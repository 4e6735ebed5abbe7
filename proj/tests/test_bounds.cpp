#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hf/bounds.hpp"

#include <cmath>
#include <vector>

using namespace hf;

namespace {

// Exhaustive oracle for the largest binary code of length n with minimum
// distance >= d, over all 2^(2^n) subsets. Feasible for n = 3 only.
int max_binary_code_size(int n, int d) {
    std::vector<std::vector<int>> space;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = (mask >> i) & 1;
        space.push_back(w);
    }
    int best = 0;
    for (int subset = 1; subset < (1 << (1 << n)); ++subset) {
        std::vector<int> chosen;
        for (int i = 0; i < (1 << n); ++i)
            if ((subset >> i) & 1) chosen.push_back(i);
        bool ok = true;
        for (std::size_t i = 0; i < chosen.size() && ok; ++i)
            for (std::size_t j = i + 1; j < chosen.size() && ok; ++j) {
                int dist = 0;
                for (int k = 0; k < n; ++k)
                    dist += space[static_cast<std::size_t>(chosen[i])][static_cast<std::size_t>(k)] !=
                            space[static_cast<std::size_t>(chosen[j])][static_cast<std::size_t>(k)];
                if (dist < d) ok = false;
            }
        if (ok) best = std::max(best, static_cast<int>(chosen.size()));
    }
    return best;
}

// Direct evaluation of the shell sum used by the classic bounds.
BigInt shell_sum(int q, int n, int top) {
    BigInt sum = 0;
    for (int r = 0; r <= top; ++r)
        sum += binomial_big(static_cast<unsigned>(n), static_cast<unsigned>(r)) *
               pow_big(q - 1, static_cast<unsigned>(r));
    return sum;
}

Code example_code() {
    const Alphabet q3(3);
    return Code::from_words({Word::validate({0, 1, 0, 2}, q3), Word::validate({1, 2, 1, 2}, q3),
                             Word::validate({1, 0, 2, 0}, q3)});
}

// Cumulative sphere sums for the example code, via raw enumeration of
// C_{3,4} rather than the recurrence table.
BigInt cumulative_by_enumeration(const Word& center, int radius) {
    BigInt total = 0;
    for_each_hf(Alphabet(center.q()), center.length(), [&](const std::vector<int>& w) {
        int dist = 0;
        for (int i = 0; i < center.length(); ++i)
            dist += w[static_cast<std::size_t>(i)] != center[static_cast<std::size_t>(i)];
        if (dist <= radius) ++total;
    });
    return total;
}

}  // namespace

TEST_CASE("classic sphere-packing bound") {
    // the exhaustive search over all binary length-3 codes pins the maximum
    CHECK(max_binary_code_size(3, 3) == 2);
    const BoundReport sp = classic_sp(Alphabet(2), 3, 3);
    CHECK(*sp.value == 2);
    CHECK(sp.denominator == BigRat(4));

    CHECK(*classic_sp(Alphabet(3), 4, 1).value == 81);
    const BoundReport sp43 = classic_sp(Alphabet(4), 3, 3);
    CHECK(sp43.denominator == BigRat(10));
    CHECK(*sp43.value == 6);
    CHECK_THROWS_AS(classic_sp(Alphabet(4), 3, 4), BadParameters);
    CHECK_THROWS_AS(classic_sp(Alphabet(4), 3, 0), BadParameters);
}

TEST_CASE("classic Gilbert-Varshamov bound") {
    CHECK(*classic_gv(Alphabet(3), 4, 1).value == 81);
    const BoundReport gv = classic_gv(Alphabet(2), 4, 2);
    CHECK(gv.denominator == BigRat(shell_sum(2, 4, 1)));
    CHECK(*gv.value == 4);  // ceil(16/5)

    // direct evaluation: shell sum 1 + 2*3 = 7, ceil(16/7) = 3; a (2,4,2)
    // code over q=4 exists, so the bound is not tight
    const BoundReport gv42 = classic_gv(Alphabet(4), 2, 2);
    CHECK(gv42.denominator == BigRat(7));
    CHECK(*gv42.value == 3);
    CHECK(gv42.notes.find("lower bound on the maximum") != std::string::npos);
}

TEST_CASE("first upper bound") {
    CHECK(*hf_upper_1(Alphabet(4), 3, 3).value == 6);
    CHECK(*hf_upper_1(Alphabet(4), 5, 5).value == 8);
    for (int n = 1; n <= 8; ++n)
        CHECK(*hf_upper_1(Alphabet(4), n, 1).value == count_hf(Alphabet(4), n));
    CHECK(hf_upper_1(Alphabet(4), 5, 5).radius_used == 2);
    CHECK_THROWS_AS(hf_upper_1(Alphabet(2), 4, 2), BadParameters);
    CHECK_THROWS_AS(hf_upper_1(Alphabet(4), 3, 4), BadParameters);
}

TEST_CASE("first lower bound") {
    CHECK(*hf_lower_1(Alphabet(4), 5, 3).value == 7);
    CHECK(*hf_lower_1(Alphabet(4), 8, 3).value == 74);
    for (int n = 1; n <= 8; ++n)
        CHECK(*hf_lower_1(Alphabet(4), n, 1).value == count_hf(Alphabet(4), n));
    CHECK(hf_lower_1(Alphabet(4), 5, 3).radius_used == 2);
}

TEST_CASE("code-specific bounds on the worked example code") {
    const Code code = example_code();
    CHECK(code.min_distance() == 3);

    // radius-1 cumulative sums by raw enumeration: 4, 5, 4
    std::vector<BigInt> sums;
    for (const Word& w : code.words()) sums.push_back(cumulative_by_enumeration(w, 1));
    CHECK(sums == std::vector<BigInt>{4, 5, 4});

    const BoundReport upper = hf_upper_2(code);
    CHECK(upper.radius_used == 1);
    CHECK(upper.denominator == BigRat(4));
    CHECK(*upper.value == 6);  // floor(24/4)

    // radius-2 cumulative sums by raw enumeration are all 10
    for (const Word& w : code.words()) CHECK(cumulative_by_enumeration(w, 2) == 10);
    const BoundReport lower = hf_lower_2(code);
    CHECK(lower.radius_used == 2);
    CHECK(lower.denominator == BigRat(10));
    CHECK(*lower.value == 3);  // ceil(24/10)
    CHECK(lower.notes.find("rounded up") != std::string::npos);

    const Code singleton = Code::from_words({Word::validate({0, 1}, Alphabet(3))});
    CHECK_THROWS_AS(hf_upper_2(singleton), EmptyDistance);

    const Code everything = Code::from_words(all_hf_words(Alphabet(4), 2));
    CHECK(everything.min_distance() == 1);
    CHECK(*hf_upper_2(everything).value == 12);
    CHECK(*hf_lower_2(everything).value == 12);
}

TEST_CASE("average-based bounds") {
    const Alphabet q4(4);
    CHECK(*hf_upper_3(q4, 4, 3, BigRat(23, 3)).value == 14);
    CHECK(*hf_upper_3(q4, 5, 5, BigRat(41)).value == 7);
    CHECK(*hf_upper_3(q4, 3, 3, BigRat(19, 3)).value == 5);
    CHECK(*hf_lower_3(q4, 5, 3, BigRat(41)).value == 8);
    CHECK(*hf_lower_3(q4, 4, 2, BigRat(23, 3)).value == 15);
    CHECK(*hf_lower_3(q4, 8, 3, average_cumulative(q4, 8, 2)).value == 102);
    CHECK_THROWS_AS(hf_upper_3(q4, 4, 3, BigRat(0)), NonpositiveAverage);
    CHECK_THROWS_AS(hf_lower_3(q4, 4, 3, BigRat(-1)), NonpositiveAverage);
}

TEST_CASE("big-integer logarithms across the machine-word boundary") {
    for (unsigned bits : {20u, 62u, 63u, 64u, 65u, 80u, 200u}) {
        CHECK(log2_big(pow_big(2, bits)) == doctest::Approx(bits).epsilon(1e-12));
        // 2^b -/+ 1 sits within 2^-b of b in the log; beyond 62 bits that is
        // below double resolution, so equality must be near-exact there
        if (bits >= 62) {
            CHECK(log2_big(pow_big(2, bits) - 1) == doctest::Approx(bits).epsilon(1e-12));
            CHECK(log2_big(pow_big(2, bits) + 1) == doctest::Approx(bits).epsilon(1e-12));
        } else {
            CHECK(log2_big(pow_big(2, bits) - 1) ==
                  doctest::Approx(std::log2(std::pow(2.0, bits) - 1)).epsilon(1e-12));
        }
    }
    CHECK(log10_big(pow_big(10, 30)) == doctest::Approx(30.0).epsilon(1e-12));
    CHECK(log2_rat(BigRat(3, 4)) == doctest::Approx(std::log2(0.75)).epsilon(1e-12));
}

TEST_CASE("rates") {
    CHECK(rate_of_value(BigInt(1), 4, 7) == 0.0);
    CHECK(rate_of_value(pow_big(4, 12), 4, 12) == doctest::Approx(1.0).epsilon(1e-12));

    // the whole-space rate approaches log_q(q-1)
    const double log4_3 = std::log2(3.0) / 2.0;
    const double rate500 = rate_log_domain_hf(4, 500, BigRat(1));
    CHECK(rate500 == doctest::Approx(log4_3 + (1.0 - log4_3) / 500).epsilon(1e-12));
    CHECK(rate_of_value(count_hf(Alphabet(4), 500), 4, 500) ==
          doctest::Approx(rate500).epsilon(1e-12));

    // exact and log-domain paths agree across the representation switch
    const BoundReport exact = hf_upper_1(Alphabet(4), 64, 3);
    CHECK(exact.value.has_value());
    CHECK(exact.rate ==
          doctest::Approx(rate_log_domain_hf(4, 64, exact.denominator)).epsilon(1e-9));

    const BoundReport log_only = hf_upper_1(Alphabet(4), 100, 3);
    CHECK_FALSE(log_only.value.has_value());
    CHECK_FALSE(log_only.numerator.has_value());
    CHECK(log_only.notes.find("log-domain") != std::string::npos);
    CHECK(log_only.rate > 0.0);
    CHECK(log_only.rate < 1.0);
    CHECK(log_only.value_log10 ==
          doctest::Approx(log10_rat(BigRat(count_hf(Alphabet(4), 100)) / log_only.denominator))
              .epsilon(1e-9));
}

TEST_CASE("lower bounds never exceed their upper counterparts") {
    const Alphabet q4(4);
    for (int n = 1; n <= 8; ++n) {
        for (int d = 1; d <= std::min(5, n); ++d) {
            CHECK(*hf_lower_1(q4, n, d).value <= *hf_upper_1(q4, n, d).value);
            const BigRat upper_avg = average_cumulative(q4, n, (d - 1) / 2, AveragePath::Auto);
            const BigRat lower_avg = average_cumulative(q4, n, d - 1, AveragePath::Auto);
            CHECK(*hf_lower_3(q4, n, d, lower_avg).value <=
                  *hf_upper_3(q4, n, d, upper_avg).value);
        }
    }
}

TEST_CASE("rates of computed reports stay in range and under the cap") {
    const Alphabet q4(4);
    const double cap_base = std::log2(3.0) / 2.0;  // log_4(3)
    for (int n = 1; n <= 8; ++n) {
        for (int d = 1; d <= std::min(5, n); ++d) {
            std::vector<BoundReport> reports = {hf_upper_1(q4, n, d), hf_lower_1(q4, n, d)};
            if (d <= 3) {
                reports.push_back(
                    hf_upper_3(q4, n, d, average_cumulative(q4, n, (d - 1) / 2)));
                reports.push_back(hf_lower_3(q4, n, d, average_cumulative(q4, n, d - 1)));
            }
            for (const BoundReport& report : reports) {
                CHECK(report.rate >= 0.0);
                CHECK(report.rate <= 1.0);
                CHECK(report.rate <= cap_base + 1.0 / n + 1e-12);
            }
        }
    }
}

TEST_CASE("degenerate distance-1 bounds collapse to the space size") {
    const Alphabet q4(4);
    for (int n : {1, 3, 6}) {
        const BigInt space = count_hf(q4, n);
        CHECK(*hf_upper_1(q4, n, 1).value == space);
        CHECK(*hf_lower_1(q4, n, 1).value == space);
        CHECK(*hf_upper_3(q4, n, 1, BigRat(1)).value == space);
        CHECK(*hf_lower_3(q4, n, 1, BigRat(1)).value == space);
    }
}
