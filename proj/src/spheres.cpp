#include "hf/spheres.hpp"

#include <algorithm>
#include <string>

namespace hf {

const BigInt STable::kZero = 0;

std::size_t STable::index(int k, int r, int b) const {
    const int q = center_.q();
    return (static_cast<std::size_t>(k - 1) * static_cast<std::size_t>(max_radius_ + 1) +
            static_cast<std::size_t>(r)) *
               static_cast<std::size_t>(q) +
           static_cast<std::size_t>(b);
}

STable::STable(Word center, int max_radius) : center_(std::move(center)), max_radius_(max_radius) {
    const int n = center_.length();
    const int q = center_.q();
    if (max_radius < 0 || max_radius > n)
        throw RadiusOutOfRange("radius must lie in 0..n");
    entries_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(max_radius_ + 1) *
                        static_cast<std::size_t>(q),
                    BigInt(0));

    // k = 1: distance 0 picks the first center symbol, distance 1 any other.
    entries_[index(1, 0, center_[0])] = 1;
    if (max_radius_ >= 1) {
        for (int b = 0; b < q; ++b)
            if (b != center_[0]) entries_[index(1, 1, b)] = 1;
    }

    std::vector<BigInt> row_sum(static_cast<std::size_t>(max_radius_ + 1));
    for (int k = 2; k <= n; ++k) {
        const int a_k = center_[static_cast<std::size_t>(k - 1)];
        const int r_hi = std::min(k, max_radius_);
        for (int r = 0; r <= std::min(k - 1, max_radius_); ++r) {
            row_sum[static_cast<std::size_t>(r)] = 0;
            for (int c = 0; c < q; ++c)
                row_sum[static_cast<std::size_t>(r)] += entries_[index(k - 1, r, c)];
        }
        entries_[index(k, 0, a_k)] = 1;  // r = 0 row: the prefix itself
        for (int r = 1; r <= r_hi; ++r) {
            for (int b = 0; b < q; ++b) {
                // Keep the last symbol: distance is carried by the shorter
                // prefix. Change it: one unit of distance is spent here.
                const int r_prev = (b == a_k) ? r : r - 1;
                if (r_prev > k - 1) continue;
                entries_[index(k, r, b)] =
                    row_sum[static_cast<std::size_t>(r_prev)] - entries_[index(k - 1, r_prev, b)];
            }
        }
    }
}

const BigInt& STable::entry(int k, int r, int b) const {
    const int n = center_.length();
    const int q = center_.q();
    if (k < 1 || k > n || b < 0 || b >= q || r < 0)
        throw BadParameters("table lookup out of range");
    if (r > max_radius_ || r > k) return kZero;
    return entries_[index(k, r, b)];
}

BigInt STable::sphere_size(int r) const {
    if (r < 0 || r > max_radius_) throw RadiusOutOfRange("radius outside the table");
    const int n = center_.length();
    BigInt total = 0;
    for (int b = 0; b < center_.q(); ++b) total += entry(n, r, b);
    return total;
}

BigInt sphere_size_dp(const Word& center, int r) {
    if (r < 0 || r > center.length()) throw RadiusOutOfRange("radius must lie in 0..n");
    return STable(center, r).sphere_size(r);
}

SphereProfile sphere_profile(const Word& center) {
    const int n = center.length();
    STable table(center, n);
    SphereProfile profile{center, {}};
    profile.sizes.reserve(static_cast<std::size_t>(n + 1));
    for (int r = 0; r <= n; ++r) profile.sizes.push_back(table.sphere_size(r));
    return profile;
}

BigInt cumulative_sphere_sum(const Word& center, int radius) {
    const int r_hi = std::min(radius, center.length());
    if (radius < 0) throw RadiusOutOfRange("radius must be nonnegative");
    STable table(center, r_hi);
    BigInt total = 0;
    for (int r = 0; r <= r_hi; ++r) total += table.sphere_size(r);
    return total;
}

std::vector<BigInt> sphere_profile_oracle(const Word& center, std::uint64_t budget) {
    const int n = center.length();
    if (count_hf(Alphabet(center.q()), n) > budget)
        throw BudgetExceeded("oracle enumeration exceeds the budget");
    std::vector<BigInt> sizes(static_cast<std::size_t>(n + 1), BigInt(0));
    const std::vector<int>& c = center.symbols();
    for_each_hf(Alphabet(center.q()), n, [&](const std::vector<int>& w) {
        int d = 0;
        for (int i = 0; i < n; ++i)
            if (w[static_cast<std::size_t>(i)] != c[static_cast<std::size_t>(i)]) ++d;
        ++sizes[static_cast<std::size_t>(d)];
    });
    return sizes;
}

BigInt sphere_size_oracle(const Word& center, int r, std::uint64_t budget) {
    if (r < 0 || r > center.length()) throw RadiusOutOfRange("radius must lie in 0..n");
    return sphere_profile_oracle(center, budget)[static_cast<std::size_t>(r)];
}

BigInt h1_closed_form(const Word& a) {
    const int n = a.length();
    const int q = a.q();
    if (n < 2) throw BadParameters("the radius-1 closed form requires n >= 2");
    int tau_sum = 0;
    if (n >= 3) tau_sum = characteristic_sequence(a, 2).sum(2, n - 1);
    return BigInt(2) + BigInt(n) * (q - 3) + tau_sum;
}

BigInt h2_closed_form(const Word& a) {
    const int n = a.length();
    const int q = a.q();
    if (n < 3) throw BadParameters("the radius-2 closed form requires n >= 3");
    const CharacteristicSequence t2 = characteristic_sequence(a, 2);
    const bool has_t3 = n >= 4;
    const CharacteristicSequence t3 =
        has_t3 ? characteristic_sequence(a, 3) : CharacteristicSequence{};

    // Changed positions adjacent: the two end pairs, then interior pairs
    // (i, i+1) for i = 2..n-2.
    BigInt consecutive = BigInt(q - 2) * (q - 2) + 1 - t2.tau(2);
    consecutive += BigInt(q - 2) * (q - 2) + 1 - t2.tau(n - 1);
    for (int i = 2; i <= n - 2; ++i) {
        int t3_i = has_t3 ? t3.tau(i) : 0;
        consecutive += BigInt(q - 2) * (q - 3) + 2 - t2.tau(i) - t2.tau(i + 1) - t3_i;
    }

    // Changed positions separated: per-position option counts are q-2 at an
    // end and q-3+tau2 at an interior position, independent across the pair.
    BigInt separated = BigInt(q - 2) * (q - 2);  // pair (1, n)
    BigInt interior_tail = 0;                    // running sum of q-3+tau2 over j..n-1
    for (int j = 3; j <= n - 1; ++j) interior_tail += BigInt(q - 3) + t2.tau(j);
    separated += BigInt(q - 2) * interior_tail;  // pairs (1, j)
    BigInt first_side = 0;
    for (int i = 2; i <= n - 2; ++i) first_side += BigInt(q - 3) + t2.tau(i);
    separated += BigInt(q - 2) * first_side;     // pairs (i, n)
    for (int i = 2; i <= n - 3; ++i) {           // interior pairs (i, j), j >= i+2
        interior_tail -= BigInt(q - 3) + t2.tau(i + 1);  // tail now starts at j = i+2
        separated += (BigInt(q - 3) + t2.tau(i)) * interior_tail;
    }

    return consecutive + separated;
}

Word min_pattern_word(Alphabet alphabet, int n) {
    if (n < 1) throw BadParameters("word length must be at least 1");
    if (alphabet.q < 3) throw BadParameters("the period-3 pattern requires q >= 3");
    std::vector<int> symbols(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) symbols[static_cast<std::size_t>(i)] = i % 3;
    return Word::unchecked(std::move(symbols), alphabet);
}

Word max_pattern_word(Alphabet alphabet, int n) {
    if (n < 1) throw BadParameters("word length must be at least 1");
    std::vector<int> symbols(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) symbols[static_cast<std::size_t>(i)] = i % 2;
    return Word::unchecked(std::move(symbols), alphabet);
}

BigInt extremal_min_closed_form(Alphabet alphabet, int n, int r) {
    const BigInt q = alphabet.q;
    if (alphabet.q < 4) throw UnsupportedParameters("the minimizer closed form requires q >= 4");
    if (n < 1) throw BadParameters("word length must be at least 1");
    if (r == 1) return (q - 3) * n + 2;
    if (r == 2) {
        if (n == 2) return (q - 1) * (q - 2) + 1;
        if (n >= 3)
            return BigInt(n - 4) * (n - 3) / 2 * (q - 3) * (q - 3) +
                   n * (3 * q * q - 15 * q + 19) - 6 * q * q + 33 * q - 43;
        throw UnsupportedParameters("the radius-2 minimizer closed form requires n >= 2");
    }
    throw UnsupportedParameters("closed forms cover radii 1 and 2 only");
}

BigInt extremal_max_closed_form(Alphabet alphabet, int n, int r) {
    const BigInt q = alphabet.q;
    if (alphabet.q < 3) throw UnsupportedParameters("the maximizer closed form requires q >= 3");
    if (n < 1) throw BadParameters("word length must be at least 1");
    if (r == 1) return n == 1 ? q - 1 : BigInt(n) * (q - 2);
    if (r == 2) {
        if (n == 2) return q * q - 3 * q + 3;
        if (n >= 3)
            return BigInt(n - 4) * (n - 3) / 2 * (q - 2) * (q - 2) +
                   n * (3 * q * q - 13 * q + 14) - 6 * q * q + 27 * q - 30;
        throw UnsupportedParameters("the radius-2 maximizer closed form requires n >= 2");
    }
    throw UnsupportedParameters("closed forms cover radii 1 and 2 only");
}

std::pair<BigInt, BigInt> extremal_closed_forms(Alphabet alphabet, int n, int r) {
    return {extremal_min_closed_form(alphabet, n, r), extremal_max_closed_form(alphabet, n, r)};
}

ExtremalCenters extremal_search(Alphabet alphabet, int n, int radius, std::uint64_t budget) {
    if (radius < 0) throw RadiusOutOfRange("radius must be nonnegative");
    if (count_hf(alphabet, n) > budget)
        throw BudgetExceeded("extremal search enumeration exceeds the budget");
    ExtremalCenters result{Word::unchecked({0}, alphabet), Word::unchecked({0}, alphabet),
                           radius, 0, 0, Provenance::Search};
    bool first = true;
    for_each_hf(alphabet, n, [&](const std::vector<int>& w) {
        Word word = Word::unchecked(w, alphabet);
        BigInt sum = cumulative_sphere_sum(word, radius);
        if (first) {
            result.a_min = word;
            result.a_max = word;
            result.cumulative_min = sum;
            result.cumulative_max = sum;
            first = false;
            return;
        }
        // Scan order is lexicographic, so strict comparisons keep the
        // lexicographically first word among ties.
        if (sum < result.cumulative_min) {
            result.cumulative_min = sum;
            result.a_min = word;
        }
        if (sum > result.cumulative_max) {
            result.cumulative_max = sum;
            result.a_max = word;
        }
    });
    return result;
}

ExtremalCenters extremal_centers(Alphabet alphabet, int n, int radius, std::uint64_t budget) {
    if (radius < 0) throw RadiusOutOfRange("radius must be nonnegative");
    const bool degenerate = radius == 0 || radius >= n;
    // The period-3/period-2 patterns extremize cumulative sums for radii 1
    // and 2, except at n = 3 with radius 2 where the roles swap (the
    // period-2 word has the smaller radius-2 cumulative sum there); that
    // corner goes through the search path.
    const bool swapped_corner = radius == 2 && n == 3;
    if (degenerate || (radius <= 2 && alphabet.q >= 4 && !swapped_corner)) {
        Word lo = alphabet.q >= 3 ? min_pattern_word(alphabet, n) : max_pattern_word(alphabet, n);
        ExtremalCenters result{std::move(lo), max_pattern_word(alphabet, n),
                               radius, 1, 1, Provenance::Pattern};
        if (radius >= n) {
            // Spheres partition the space, so the cumulative sum saturates.
            result.cumulative_min = count_hf(alphabet, n);
            result.cumulative_max = result.cumulative_min;
        } else if (radius > 0) {
            for (int r = 1; r <= radius; ++r) {
                result.cumulative_min += extremal_min_closed_form(alphabet, n, r);
                result.cumulative_max += extremal_max_closed_form(alphabet, n, r);
            }
        }
        return result;
    }
    return extremal_search(alphabet, n, radius, budget);
}

namespace {

// Exact mean of the radius-1 sphere size over C_{q,n}, n >= 2.
BigRat expected_h1(int q, int n) {
    const BigRat p2(1, q - 1);
    return BigRat(2) + BigRat(n) * (q - 3) + BigRat(n - 2) * p2;
}

// Exact mean of the radius-2 sphere size over C_{q,n}, n >= 3.
BigRat expected_h2(int q, int n) {
    const BigRat p2(1, q - 1);
    const BigRat p3(q - 2, (q - 1) * (q - 1));
    const BigRat interior = BigRat(q - 3) + p2;  // mean per-position option count
    BigRat consecutive = BigRat(2 * (q - 2) * (q - 2) + 2) +
                         BigRat(n - 3) * ((q - 2) * (q - 3) + 2) -
                         BigRat(2) * (n - 2) * p2 - BigRat(n - 3) * p3;
    BigRat separated = BigRat((q - 2) * (q - 2)) +
                       BigRat(2) * (q - 2) * (n - 3) * interior +
                       BigRat(BigInt(n - 3) * (n - 4), 2) * interior * interior;
    return consecutive + separated;
}

}  // namespace

BigRat average_cumulative(Alphabet alphabet, int n, int radius, AveragePath path,
                          std::uint64_t budget) {
    if (n < 1) throw BadParameters("word length must be at least 1");
    if (radius < 0) throw RadiusOutOfRange("radius must be nonnegative");
    if (path == AveragePath::Auto)
        path = (radius <= 2 || radius >= n) ? AveragePath::Expectation : AveragePath::Enumeration;

    if (path == AveragePath::Expectation) {
        if (radius >= n) return BigRat(count_hf(alphabet, n));
        if (radius == 0) return 1;
        const int q = alphabet.q;
        if (radius == 1) return BigRat(1) + expected_h1(q, n);
        if (radius == 2) return BigRat(1) + expected_h1(q, n) + expected_h2(q, n);
        throw UnsupportedRadius("the expectation path covers radii 0..2");
    }

    const BigInt total_words = count_hf(alphabet, n);
    if (total_words > budget)
        throw BudgetExceeded("average enumeration exceeds the budget");
    BigInt total = 0;
    for_each_hf(alphabet, n, [&](const std::vector<int>& w) {
        total += cumulative_sphere_sum(Word::unchecked(w, alphabet), radius);
    });
    return BigRat(total, total_words);
}

}  // namespace hf
