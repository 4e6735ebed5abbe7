#include "hf/golden.hpp"

namespace hf::golden {

const std::vector<BoundCell>& table1() {
    static const std::vector<BoundCell> rows = [] {
        std::vector<BoundCell> cells;
        auto add_row = [&cells](const char* block, int d, std::array<long long, 8> values) {
            for (int n = 1; n <= 8; ++n) {
                const long long v = values[static_cast<std::size_t>(n - 1)];
                if (v >= 0) cells.push_back({block, d, n, v});
            }
        };
        add_row("upper1", 1, {4, 12, 36, 108, 324, 972, 2916, 8748});
        add_row("upper1", 2, {-1, 12, 36, 108, 324, 972, 2916, 8748});
        add_row("upper1", 3, {-1, -1, 6, 15, 40, 108, 291, 795});
        add_row("upper1", 4, {-1, -1, -1, 15, 8, 108, 291, 795});
        add_row("upper1", 5, {-1, -1, -1, -1, 8, 20, 50, 124});
        add_row("upper3", 1, {4, 12, 36, 108, 324, 972, 2916, 8748});
        add_row("upper3", 2, {-1, 12, 36, 108, 324, 972, 2916, 8748});
        add_row("upper3", 3, {-1, -1, 5, 14, 36, 94, 249, 672});
        add_row("upper3", 4, {-1, -1, -1, 14, 36, 94, 249, 672});
        add_row("upper3", 5, {-1, -1, -1, -1, 7, 17, 41, 101});
        add_row("lower1", 1, {4, 12, 36, 108, 324, 972, 2916, 8748});
        add_row("lower1", 2, {-1, 3, 6, 12, 30, 75, 195, 515});
        add_row("lower1", 3, {-1, -1, 2, 4, 7, 15, 33, 74});
        add_row("lower3", 1, {4, 12, 36, 108, 324, 972, 2916, 8748});
        add_row("lower3", 2, {-1, 3, 6, 15, 36, 95, 250, 673});
        add_row("lower3", 3, {-1, -1, 2, 4, 8, 18, 42, 102});
        return cells;
    }();
    return rows;
}

bool table1_whitelisted(const std::string& block, int d, int n) {
    return block == "upper1" && d == 4 && n == 5;
}

const std::vector<ProfileRow>& table2() {
    static const std::vector<ProfileRow> rows = {
        {1, "a_min=a_max", {3}},
        {2, "a_min", {4, 7}},
        {2, "a_max", {4, 7}},
        {3, "a_min", {5, 14, 16}},
        {3, "a_max", {6, 12, 17}},
        {4, "a_min", {6, 21, 44, 36}},
        {4, "a_max", {8, 22, 36, 41}},
        {5, "a_min", {7, 29, 79, 127, 81}},
        {5, "a_max", {10, 36, 74, 104, 99}},
        {6, "a_min", {8, 38, 124, 269, 350, 182}},
        {6, "a_max", {12, 54, 136, 238, 292, 239}},
        {7, "a_min", {9, 48, 180, 476, 861, 932, 409}},
        {7, "a_max", {14, 76, 230, 480, 734, 804, 577}},
        {8, "a_min", {10, 59, 248, 761, 1702, 2626, 2422, 919}},
        {8, "a_max", {16, 102, 364, 886, 1608, 2198, 2180, 1393}},
        {9, "a_min", {11, 71, 329, 1138, 2977, 5758, 7715, 6179, 2065}},
        {9, "a_max", {18, 132, 546, 1528, 3202, 5180, 6434, 5840, 3363}},
        {10, "a_min", {12, 84, 424, 1622, 4806, 10963, 18638, 22002, 15540, 4640}},
        {10, "a_max", {20, 166, 784, 2494, 5932, 11030, 16200, 18494, 15492, 8119}},
    };
    return rows;
}

const std::vector<ClassRow>& table3() {
    static const std::vector<ClassRow> rows = {
        {24, {6, 21, 44, 36}},
        {24, {6, 22, 42, 37}},
        {48, {7, 22, 39, 39}},
        {12, {8, 22, 36, 41}},
    };
    return rows;
}

const std::vector<ClassRow>& table4() {
    static const std::vector<ClassRow> rows = {
        {24, {7, 29, 79, 127, 81}},
        {48, {7, 30, 79, 124, 83}},
        {24, {7, 31, 80, 119, 86}},
        {48, {8, 31, 79, 117, 88}},
        {48, {8, 32, 79, 114, 90}},
        {24, {8, 33, 76, 117, 89}},
        {24, {8, 33, 77, 115, 90}},
        {48, {9, 34, 76, 110, 94}},
        {24, {9, 34, 77, 108, 95}},
        {12, {10, 36, 74, 104, 99}},
    };
    return rows;
}

}  // namespace hf::golden
