#pragma once

#include <array>
#include <string>
#include <vector>

namespace hf::golden {

// Reference values shipped with the artifact, used by the diff engine only;
// computations never read them. Cells known to disagree with the recomputed
// values are kept verbatim and whitelisted in the diff layer.

// Bound grid for q = 4, n = 1..8. value < 0 marks an empty cell.
struct BoundCell {
    const char* block;  // "upper1" | "upper3" | "lower1" | "lower3"
    int d;
    int n;
    long long value;
};
const std::vector<BoundCell>& table1();

// The single cell of table1 whose printed value is a suspected misprint:
// block "upper1", d = 4, n = 5 prints 8 where the radius-1 denominator
// forces the d = 3 row to repeat (as it does in every other column).
bool table1_whitelisted(const std::string& block, int d, int n);

// Sphere profiles of the extremal pattern words for q = 4, n = 1..10.
// kind is "a_min" or "a_max"; both patterns are the same word for n <= 2,
// so n = 1 carries a single merged row.
struct ProfileRow {
    int n;
    const char* kind;  // "a_min" | "a_max" | "a_min=a_max"
    std::array<long long, 10> sizes;  // radii 1..n
};
const std::vector<ProfileRow>& table2();

// Profile classes of C_{4,4} and C_{4,5}: class profile (radii 1..n) and
// member count, ordered lexicographically by profile.
struct ClassRow {
    long long count;
    std::array<long long, 5> profile;
};
const std::vector<ClassRow>& table3();
const std::vector<ClassRow>& table4();

}  // namespace hf::golden
