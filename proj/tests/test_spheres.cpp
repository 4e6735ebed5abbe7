#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hf/spheres.hpp"

#include <vector>

using namespace hf;

namespace {

std::vector<BigInt> profile_sizes(const Word& w) { return sphere_profile(w).sizes; }

}  // namespace

TEST_CASE("suffix-count table reproduces the worked radius-2 entries") {
    const Word center = Word::validate({0, 1}, Alphabet(4));
    const STable table(center, 2);
    CHECK(table.entry(2, 2, 0) == 3);
    CHECK(table.entry(2, 2, 1) == 0);
    CHECK(table.entry(2, 2, 2) == 2);
    CHECK(table.entry(2, 2, 3) == 2);
    CHECK(table.sphere_size(2) == 7);
}

TEST_CASE("suffix-count table base cases") {
    const Word single = Word::validate({1}, Alphabet(4));
    const STable table(single, 1);
    // radius 1 reaches every other symbol, radius 0 only the word itself
    CHECK(table.entry(1, 1, 1) == 0);
    CHECK(table.entry(1, 1, 0) == 1);
    CHECK(table.entry(1, 1, 2) == 1);
    CHECK(table.entry(1, 1, 3) == 1);
    CHECK(table.entry(1, 0, 1) == 1);
    CHECK(table.entry(1, 0, 0) == 0);

    const Word longer = Word::validate({0, 1, 2, 1}, Alphabet(4));
    const STable t2(longer, 3);
    for (int k = 1; k <= 4; ++k)
        for (int b = 0; b < 4; ++b)
            CHECK(t2.entry(k, 0, b) ==
                  (b == longer[static_cast<std::size_t>(k - 1)] ? 1 : 0));
}

TEST_CASE("sphere sizes match the worked examples") {
    const Alphabet q5(5);
    CHECK(sphere_size_dp(Word::validate({0, 1, 2}, q5), 1) == 8);
    CHECK(sphere_size_dp(Word::validate({0, 1, 0}, q5), 1) == 9);
    CHECK(sphere_size_dp(max_pattern_word(Alphabet(4), 5), 2) == 36);
    CHECK_THROWS_AS(sphere_size_dp(Word::validate({0, 1}, q5), 3), RadiusOutOfRange);
}

TEST_CASE("sphere profiles match the golden rows") {
    const Alphabet q4(4);
    CHECK(profile_sizes(parse_word("ACGAC", q4)) ==
          std::vector<BigInt>{1, 7, 29, 79, 127, 81});
    CHECK(profile_sizes(parse_word("ACACA", q4)) ==
          std::vector<BigInt>{1, 10, 36, 74, 104, 99});
    CHECK(profile_sizes(Word::validate({2}, Alphabet(6))) == std::vector<BigInt>{1, 5});
}

TEST_CASE("profiles partition the space") {
    for (int q = 2; q <= 5; ++q) {
        for (int n = 1; n <= 6; ++n) {
            const Word w = max_pattern_word(Alphabet(q), n);
            BigInt total = 0;
            for (const BigInt& s : profile_sizes(w)) total += s;
            CHECK(total == count_hf(Alphabet(q), n));
        }
    }
}

TEST_CASE("recurrence equals the enumeration oracle on a full small sweep") {
    for (int q : {3, 4, 5}) {
        for (int n = 1; n <= 5; ++n) {
            for_each_hf(Alphabet(q), n, [&](const std::vector<int>& w) {
                const Word center = Word::unchecked(w, Alphabet(q));
                const std::vector<BigInt> oracle = sphere_profile_oracle(center);
                const std::vector<BigInt> dp = profile_sizes(center);
                CHECK(oracle == dp);
            });
        }
    }
}

TEST_CASE("oracle basics") {
    const Word w = Word::validate({0, 1, 2, 3}, Alphabet(4));
    CHECK(sphere_size_oracle(w, 0) == 1);
    BigInt total = 0;
    for (int r = 0; r <= 4; ++r) total += sphere_size_oracle(w, r);
    CHECK(total == count_hf(Alphabet(4), 4));
    CHECK_THROWS_AS(sphere_size_oracle(w, 1, 10), BudgetExceeded);
}

TEST_CASE("radius-1 closed form") {
    const Alphabet q5(5);
    CHECK(h1_closed_form(Word::validate({0, 1, 2}, q5)) == 8);
    CHECK(h1_closed_form(Word::validate({0, 1, 0}, q5)) == 9);
    CHECK_THROWS_AS(h1_closed_form(Word::validate({0}, q5)), BadParameters);
    for (int q = 2; q <= 6; ++q) {
        for (int n = 2; n <= 6; ++n) {
            for_each_hf(Alphabet(q), n, [&](const std::vector<int>& w) {
                const Word word = Word::unchecked(w, Alphabet(q));
                CHECK(h1_closed_form(word) == sphere_size_dp(word, 1));
            });
        }
    }
}

TEST_CASE("radius-2 closed form") {
    const Alphabet q4(4);
    CHECK(h2_closed_form(parse_word("ACGA", q4)) == 21);
    CHECK(h2_closed_form(parse_word("ACAC", q4)) == 22);
    CHECK_THROWS_AS(h2_closed_form(Word::validate({0, 1}, q4)), BadParameters);
    for (int q = 2; q <= 5; ++q) {
        for (int n = 3; n <= 6; ++n) {
            for_each_hf(Alphabet(q), n, [&](const std::vector<int>& w) {
                const Word word = Word::unchecked(w, Alphabet(q));
                CHECK(h2_closed_form(word) == sphere_size_dp(word, 2));
            });
        }
    }
}

TEST_CASE("extremal pattern closed forms") {
    CHECK(extremal_closed_forms(Alphabet(4), 5, 1) == std::pair<BigInt, BigInt>{7, 10});
    CHECK(extremal_closed_forms(Alphabet(4), 10, 2) == std::pair<BigInt, BigInt>{84, 166});

    // q = 5, n = 3, radius 2 minimizer: 3q^2 - 12q + 14 = 29, confirmed by the
    // recurrence on the period-3 word.
    CHECK(extremal_min_closed_form(Alphabet(5), 3, 2) == 29);
    CHECK(sphere_size_dp(min_pattern_word(Alphabet(5), 3), 2) == 29);

    CHECK_THROWS_AS(extremal_min_closed_form(Alphabet(3), 4, 1), UnsupportedParameters);
    CHECK_THROWS_AS(extremal_min_closed_form(Alphabet(4), 4, 3), UnsupportedParameters);
    CHECK_THROWS_AS(extremal_max_closed_form(Alphabet(4), 1, 2), UnsupportedParameters);

    for (int q = 4; q <= 6; ++q) {
        for (int n = 1; n <= 10; ++n) {
            for (int r : {1, 2}) {
                if (r > n) continue;
                CHECK(extremal_min_closed_form(Alphabet(q), n, r) ==
                      sphere_size_dp(min_pattern_word(Alphabet(q), n), r));
                CHECK(extremal_max_closed_form(Alphabet(q), n, r) ==
                      sphere_size_dp(max_pattern_word(Alphabet(q), n), r));
            }
        }
    }
}

TEST_CASE("extremal search") {
    const ExtremalCenters r1 = extremal_search(Alphabet(4), 4, 1);
    CHECK(r1.cumulative_min == 7);
    CHECK(r1.cumulative_max == 9);
    CHECK(r1.provenance == Provenance::Search);

    const ExtremalCenters r2 = extremal_search(Alphabet(4), 5, 2);
    CHECK(r2.cumulative_min == 37);
    CHECK(r2.cumulative_max == 47);
    CHECK(to_text(r2.a_min) == "01201");
    CHECK(to_text(r2.a_max) == "01010");

    const ExtremalCenters binary = extremal_search(Alphabet(2), 4, 1);
    CHECK(binary.cumulative_min == binary.cumulative_max);

    CHECK_THROWS_AS(extremal_search(Alphabet(4), 8, 1, 100), BudgetExceeded);
}

TEST_CASE("extremal search tie-break is the lexicographically first word") {
    const ExtremalCenters result = extremal_search(Alphabet(4), 4, 1);
    bool before_min = true;
    for_each_hf(Alphabet(4), 4, [&](const std::vector<int>& w) {
        const Word word = Word::unchecked(w, Alphabet(4));
        if (word == result.a_min) before_min = false;
        if (before_min) CHECK(cumulative_sphere_sum(word, 1) > result.cumulative_min);
    });
    CHECK_FALSE(before_min);
}

TEST_CASE("pattern fast path matches search, with the swapped corner searched") {
    for (int n : {4, 5, 6}) {
        for (int radius : {1, 2}) {
            const ExtremalCenters pattern = extremal_centers(Alphabet(4), n, radius);
            const ExtremalCenters searched = extremal_search(Alphabet(4), n, radius);
            CHECK(pattern.provenance == Provenance::Pattern);
            CHECK(pattern.cumulative_min == searched.cumulative_min);
            CHECK(pattern.cumulative_max == searched.cumulative_max);
        }
    }
    // n = 3, radius 2: the period-2 word undercuts the period-3 word, so the
    // fast path must defer to the search.
    const ExtremalCenters corner = extremal_centers(Alphabet(4), 3, 2);
    CHECK(corner.provenance == Provenance::Search);
    CHECK(corner.cumulative_min == 19);
    CHECK(corner.cumulative_max == 20);
    CHECK(to_text(corner.a_min) == "010");
    CHECK(to_text(corner.a_max) == "012");
    // degenerate radii saturate to the whole space
    const ExtremalCenters saturated = extremal_centers(Alphabet(4), 2, 2);
    CHECK(saturated.cumulative_min == 12);
    CHECK(saturated.cumulative_max == 12);
}

TEST_CASE("average cumulative sums: known values") {
    const Alphabet q4(4);
    for (AveragePath path : {AveragePath::Enumeration, AveragePath::Expectation}) {
        CHECK(average_cumulative(q4, 2, 2, path) == 12);
        CHECK(average_cumulative(q4, 3, 2, path) == BigRat(59, 3));
        CHECK(average_cumulative(q4, 5, 2, path) == 41);
        CHECK(average_cumulative(q4, 4, 1, path) == BigRat(23, 3));
        CHECK(average_cumulative(q4, 4, 2, path) == BigRat(265, 9));
    }
}

TEST_CASE("average over C_{4,5} cross-checked against the profile classes") {
    // 10 profile classes with known member counts; the exact mean of the
    // radius-2 cumulative sums is 13284/324 = 41.
    const long long counts[] = {24, 48, 24, 48, 48, 24, 24, 48, 24, 12};
    const long long sums[] = {37, 38, 39, 40, 41, 42, 42, 44, 44, 47};
    BigInt total = 0;
    for (int i = 0; i < 10; ++i) total += BigInt(counts[i]) * sums[i];
    CHECK(total == 13284);
    CHECK(average_cumulative(Alphabet(4), 5, 2, AveragePath::Enumeration) ==
          BigRat(total, 324));
}

TEST_CASE("average paths agree and errors are raised") {
    for (int q : {4, 5}) {
        for (int n = 3; n <= 6; ++n) {
            for (int radius = 0; radius <= 2; ++radius) {
                CHECK(average_cumulative(Alphabet(q), n, radius, AveragePath::Enumeration) ==
                      average_cumulative(Alphabet(q), n, radius, AveragePath::Expectation));
            }
        }
    }
    CHECK_THROWS_AS(average_cumulative(Alphabet(4), 10, 3, AveragePath::Expectation),
                    UnsupportedRadius);
    CHECK_THROWS_AS(average_cumulative(Alphabet(5), 9, 1, AveragePath::Enumeration, 1000),
                    BudgetExceeded);
    // saturated radius: the mean collapses to |C_{q,n}|
    CHECK(average_cumulative(Alphabet(4), 1, 2) == 4);
    CHECK(average_cumulative(Alphabet(5), 2, 2) == 20);
}

TEST_CASE("radius-1 sizes are nondecreasing in the alphabet") {
    for (int n : {3, 5}) {
        const Word base = min_pattern_word(Alphabet(3), n);
        BigInt previous = -1;
        for (int q = 3; q <= 8; ++q) {
            const BigInt size = sphere_size_dp(Word::unchecked(base.symbols(), Alphabet(q)), 1);
            CHECK(size >= previous);
            previous = size;
        }
    }
}

TEST_CASE("golden pattern rows at n = 10") {
    const std::vector<BigInt> a_min = profile_sizes(min_pattern_word(Alphabet(4), 10));
    const std::vector<BigInt> expected_min = {1,    12,   84,    424,   1622, 4806,
                                              10963, 18638, 22002, 15540, 4640};
    CHECK(a_min == expected_min);
    const std::vector<BigInt> a_max = profile_sizes(max_pattern_word(Alphabet(4), 10));
    const std::vector<BigInt> expected_max = {1,    20,   166,   784,   2494, 5932,
                                              11030, 16200, 18494, 15492, 8119};
    CHECK(a_max == expected_max);
}
