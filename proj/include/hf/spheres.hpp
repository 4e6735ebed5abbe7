#pragma once

#include "hf/words.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace hf {

// Suffix-count table for one center: entry(k, r, b) is the number of
// homopolymer-free words of length k ending in symbol b at Hamming distance
// exactly r from the length-k prefix of the center. Built bottom-up with a
// single two-branch recurrence seeded by the r = 0 row
// entry(k, 0, b) = [b == a_k].
class STable {
  public:
    STable(Word center, int max_radius);  // RadiusOutOfRange unless 0 <= max_radius <= n

    const Word& center() const { return center_; }
    int max_radius() const { return max_radius_; }

    // Prefix length k in 1..n, radius r >= 0, last symbol b in [0,q).
    // Entries with r > min(k, max_radius) are zero.
    const BigInt& entry(int k, int r, int b) const;

    // |H_r| of the full center: sum of entry(n, r, b) over b.
    BigInt sphere_size(int r) const;

  private:
    Word center_;
    int max_radius_;
    std::vector<BigInt> entries_;  // [k-1][r][b] flattened
    static const BigInt kZero;
    std::size_t index(int k, int r, int b) const;
};

// |H_r(center)| via the recurrence table.
BigInt sphere_size_dp(const Word& center, int r);

// Sphere sizes for every radius 0..n. The sizes partition C_{q,n}:
// they sum to q(q-1)^(n-1).
struct SphereProfile {
    Word center;
    std::vector<BigInt> sizes;  // indexed by radius
};
SphereProfile sphere_profile(const Word& center);

// Sum of sphere sizes for radii 0..min(R, n).
BigInt cumulative_sphere_sum(const Word& center, int radius);

// Brute-force counts over the full enumeration of C_{q,n}; ground truth for
// the recurrence table in tests and verification sweeps.
BigInt sphere_size_oracle(const Word& center, int r, std::uint64_t budget = kDefaultBudget);
std::vector<BigInt> sphere_profile_oracle(const Word& center,
                                          std::uint64_t budget = kDefaultBudget);

// Closed form for |H_1|: 2 + n(q-3) + sum of the type-2 indicators over the
// interior positions. Requires n >= 2.
BigInt h1_closed_form(const Word& a);

// Closed form for |H_2|, assembled from the case analysis over the two
// changed positions (adjacent pair, or a separated pair involving ends or
// interior positions), driven by the type-2 and type-3 indicator sequences.
// Requires n >= 3.
BigInt h2_closed_form(const Word& a);

// Period-3 word 0,1,2,0,1,2,... (cumulative sphere-sum minimizer for
// radius <= 2 when q >= 4) and period-2 word 0,1,0,1,... (maximizer for
// q >= 3). Any word with the same equality pattern has the same profile by
// symbol relabeling.
Word min_pattern_word(Alphabet alphabet, int n);
Word max_pattern_word(Alphabet alphabet, int n);

// Printed closed forms for |H_r| of the pattern words, r in {1,2}.
// Throws UnsupportedParameters outside the stated parameter ranges
// (min side requires q >= 4, max side q >= 3; r = 2 requires n >= 2).
BigInt extremal_min_closed_form(Alphabet alphabet, int n, int r);
BigInt extremal_max_closed_form(Alphabet alphabet, int n, int r);
std::pair<BigInt, BigInt> extremal_closed_forms(Alphabet alphabet, int n, int r);

enum class Provenance { Pattern, Search };

struct ExtremalCenters {
    Word a_min;
    Word a_max;
    int radius;
    BigInt cumulative_min;
    BigInt cumulative_max;
    Provenance provenance;
};

// Exhaustive scan of C_{q,n} for the minimal and maximal cumulative sums up
// to the given radius; ties resolve to the lexicographically first word.
ExtremalCenters extremal_search(Alphabet alphabet, int n, int radius,
                                std::uint64_t budget = kDefaultBudget);

// Pattern closed forms when they apply (radius <= 2, q >= 4, or degenerate
// radii), exhaustive search otherwise.
ExtremalCenters extremal_centers(Alphabet alphabet, int n, int radius,
                                 std::uint64_t budget = kDefaultBudget);

enum class AveragePath { Auto, Enumeration, Expectation };

// Mean cumulative sphere sum over all of C_{q,n}, exact. The enumeration
// path sums recurrence-table values over every center; the expectation path
// applies linearity of expectation to the radius-1/2 closed forms, using
// E[tau2] = 1/(q-1), E[tau3] = (q-2)/(q-1)^2 and independence of the
// indicator factors that get multiplied (their index gap is at least 2).
// The two paths agree exactly; Expectation supports radius <= 2 only
// (UnsupportedRadius otherwise).
BigRat average_cumulative(Alphabet alphabet, int n, int radius,
                          AveragePath path = AveragePath::Auto,
                          std::uint64_t budget = kDefaultBudget);

}  // namespace hf
