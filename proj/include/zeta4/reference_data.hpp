#pragma once
// Published data for the eta = (68,57;22,...,27) family: the 31 contributing
// representatives in the format (beta0; alpha1..alpha6), and the interval
// list of omega with the attaining row (0 = none given).

#include <array>

namespace refdata {

inline constexpr std::array<std::array<long, 7>, 31> kRepRows = {{
    {68, 22, 23, 24, 25, 26, 27},
    {68, 22, 23, 24, 25, 27, 26},
    {68, 22, 23, 24, 26, 25, 27},
    {68, 22, 23, 25, 24, 26, 27},
    {68, 22, 23, 25, 24, 27, 26},
    {68, 22, 23, 26, 24, 27, 25},
    {68, 22, 24, 23, 25, 26, 27},
    {68, 22, 24, 23, 25, 27, 26},
    {68, 22, 25, 23, 26, 24, 27},
    {67, 21, 22, 23, 25, 26, 27},
    {67, 21, 22, 23, 25, 27, 26},
    {67, 21, 22, 23, 26, 25, 27},
    {67, 21, 22, 25, 23, 26, 27},
    {66, 20, 21, 23, 24, 26, 27},
    {66, 20, 21, 23, 24, 27, 26},
    {66, 20, 21, 23, 26, 24, 27},
    {66, 20, 21, 24, 23, 27, 26},
    {65, 19, 20, 23, 24, 25, 27},
    {65, 19, 20, 23, 24, 27, 25},
    {65, 19, 20, 23, 25, 24, 27},
    {65, 19, 20, 24, 23, 27, 25},
    {65, 19, 21, 22, 23, 26, 27},
    {65, 19, 21, 22, 23, 27, 26},
    {65, 19, 21, 23, 22, 26, 27},
    {65, 19, 21, 23, 22, 27, 26},
    {65, 19, 21, 26, 22, 27, 23},
    {65, 19, 22, 21, 23, 26, 27},
    {65, 19, 23, 20, 24, 27, 25},
    {64, 18, 19, 23, 25, 24, 26},
    {64, 19, 20, 21, 22, 27, 26},
    {64, 19, 21, 20, 22, 26, 27},
}};

struct Interval {
    int value;
    long lo_num, lo_den, hi_num, hi_den;
    int row;
};

inline constexpr std::array<Interval, 229> kOmegaIntervals = {{
    {0, 0, 1, 2, 57, 0},
    {0, 1, 15, 2, 27, 0},
    {0, 7, 16, 25, 57, 0},
    {0, 11, 23, 28, 57, 0},
    {0, 8, 15, 7, 13, 0},
    {0, 22, 23, 56, 57, 0},
    {1, 2, 57, 1, 27, 1},
    {1, 1, 22, 1, 21, 1},
    {1, 1, 17, 1, 16, 1},
    {1, 1, 16, 1, 15, 3},
    {1, 2, 27, 1, 13, 1},
    {1, 2, 15, 3, 22, 1},
    {1, 3, 22, 8, 57, 4},
    {1, 1, 7, 4, 27, 1},
    {1, 5, 23, 2, 9, 1},
    {1, 5, 21, 14, 57, 1},
    {1, 4, 15, 3, 11, 1},
    {1, 2, 7, 7, 24, 1},
    {1, 5, 17, 8, 27, 1},
    {1, 7, 20, 20, 57, 2},
    {1, 6, 17, 5, 14, 1},
    {1, 2, 5, 23, 57, 2},
    {1, 10, 23, 7, 16, 1},
    {1, 25, 57, 11, 25, 1},
    {1, 10, 21, 11, 23, 1},
    {1, 28, 57, 1, 2, 1},
    {1, 9, 17, 8, 15, 1},
    {1, 7, 13, 31, 57, 1},
    {1, 14, 23, 11, 18, 1},
    {1, 11, 18, 35, 57, 4},
    {1, 12, 17, 41, 57, 1},
    {1, 17, 23, 3, 4, 1},
    {1, 13, 17, 10, 13, 1},
    {1, 4, 5, 46, 57, 1},
    {1, 19, 23, 5, 6, 1},
    {1, 20, 23, 7, 8, 1},
    {1, 7, 8, 50, 57, 2},
    {1, 19, 21, 10, 11, 1},
    {1, 10, 11, 52, 57, 7},
    {1, 21, 23, 11, 12, 1},
    {1, 20, 21, 21, 22, 1},
    {1, 21, 22, 22, 23, 7},
    {1, 56, 57, 1, 1, 1},
    {2, 1, 27, 1, 26, 1},
    {2, 1, 23, 1, 22, 1},
    {2, 1, 19, 1, 18, 1},
    {2, 1, 18, 1, 17, 2},
    {2, 1, 13, 2, 25, 1},
    {2, 2, 19, 1, 9, 1},
    {2, 1, 9, 3, 26, 2},
    {2, 2, 17, 7, 57, 1},
    {2, 3, 23, 2, 15, 3},
    {2, 8, 57, 1, 7, 4},
    {2, 4, 27, 3, 20, 20},
    {2, 3, 20, 2, 13, 3},
    {2, 3, 19, 1, 6, 1},
    {2, 4, 23, 10, 57, 11},
    {2, 3, 17, 2, 11, 1},
    {2, 2, 11, 5, 27, 5},
    {2, 4, 21, 11, 57, 6},
    {2, 11, 57, 1, 5, 1},
    {2, 1, 5, 5, 24, 3},
    {2, 4, 19, 5, 23, 1},
    {2, 2, 9, 5, 22, 2},
    {2, 5, 22, 13, 57, 4},
    {2, 13, 57, 3, 13, 2},
    {2, 4, 17, 5, 21, 4},
    {2, 14, 57, 1, 4, 1},
    {2, 5, 19, 4, 15, 3},
    {2, 3, 11, 5, 18, 14},
    {2, 5, 18, 16, 57, 4},
    {2, 16, 57, 2, 7, 2},
    {2, 7, 24, 5, 17, 2},
    {2, 8, 27, 17, 57, 1},
    {2, 7, 23, 4, 13, 3},
    {2, 6, 19, 7, 22, 1},
    {2, 7, 22, 8, 25, 4},
    {2, 8, 25, 9, 26, 1},
    {2, 8, 23, 7, 20, 21},
    {2, 20, 57, 6, 17, 2},
    {2, 5, 14, 4, 11, 3},
    {2, 7, 19, 3, 8, 1},
    {2, 8, 21, 5, 13, 1},
    {2, 9, 23, 2, 5, 1},
    {2, 23, 57, 11, 27, 2},
    {2, 7, 17, 5, 12, 3},
    {2, 8, 19, 10, 23, 1},
    {2, 11, 25, 4, 9, 10},
    {2, 4, 9, 26, 57, 2},
    {2, 9, 19, 10, 21, 4},
    {2, 1, 2, 29, 57, 2},
    {2, 10, 19, 9, 17, 2},
    {2, 31, 57, 6, 11, 1},
    {2, 6, 11, 11, 20, 10},
    {2, 11, 20, 5, 9, 5},
    {2, 4, 7, 15, 26, 2},
    {2, 11, 19, 7, 12, 1},
    {2, 10, 17, 13, 22, 1},
    {2, 13, 22, 16, 27, 6},
    {2, 16, 27, 34, 57, 1},
    {2, 3, 5, 14, 23, 1},
    {2, 35, 57, 8, 13, 4},
    {2, 13, 21, 17, 27, 2},
    {2, 12, 19, 7, 11, 1},
    {2, 7, 11, 16, 25, 4},
    {2, 11, 17, 37, 57, 1},
    {2, 15, 23, 17, 26, 3},
    {2, 17, 26, 17, 25, 1},
    {2, 13, 19, 11, 16, 1},
    {2, 11, 16, 9, 13, 4},
    {2, 16, 23, 7, 10, 14},
    {2, 7, 10, 40, 57, 4},
    {2, 40, 57, 12, 17, 2},
    {2, 41, 57, 18, 25, 1},
    {2, 14, 19, 17, 23, 7},
    {2, 3, 4, 43, 57, 4},
    {2, 43, 57, 19, 25, 2},
    {2, 16, 21, 13, 17, 2},
    {2, 10, 13, 44, 57, 1},
    {2, 18, 23, 11, 14, 3},
    {2, 15, 19, 4, 5, 1},
    {2, 46, 57, 21, 26, 1},
    {2, 17, 21, 13, 16, 1},
    {2, 13, 16, 9, 11, 2},
    {2, 14, 17, 47, 57, 8},
    {2, 47, 57, 19, 23, 1},
    {2, 5, 6, 21, 25, 3},
    {2, 16, 19, 11, 13, 1},
    {2, 13, 15, 20, 23, 7},
    {2, 50, 57, 22, 25, 2},
    {2, 15, 17, 8, 9, 16},
    {2, 17, 19, 9, 10, 1},
    {2, 9, 10, 19, 21, 3},
    {2, 52, 57, 21, 23, 7},
    {2, 11, 12, 23, 25, 27},
    {2, 23, 25, 12, 13, 1},
    {2, 18, 19, 19, 20, 1},
    {2, 19, 20, 20, 21, 3},
    {3, 1, 26, 1, 25, 1},
    {3, 1, 21, 1, 20, 19},
    {3, 1, 20, 1, 19, 23},
    {3, 2, 25, 1, 12, 14},
    {3, 2, 23, 5, 57, 26},
    {3, 5, 57, 1, 11, 13},
    {3, 2, 21, 1, 10, 19},
    {3, 1, 10, 2, 19, 23},
    {3, 3, 26, 2, 17, 2},
    {3, 7, 57, 1, 8, 1},
    {3, 1, 8, 3, 23, 3},
    {3, 2, 13, 3, 19, 19},
    {3, 1, 6, 4, 23, 7},
    {3, 10, 57, 3, 17, 11},
    {3, 5, 27, 3, 16, 30},
    {3, 3, 16, 4, 21, 14},
    {3, 5, 24, 4, 19, 23},
    {3, 3, 13, 4, 17, 4},
    {3, 1, 4, 7, 27, 2},
    {3, 6, 23, 5, 19, 23},
    {3, 17, 57, 3, 10, 1},
    {3, 3, 10, 7, 23, 3},
    {3, 4, 13, 5, 16, 19},
    {3, 5, 16, 6, 19, 21},
    {3, 9, 26, 8, 23, 19},
    {3, 4, 11, 7, 19, 19},
    {3, 3, 8, 8, 21, 10},
    {3, 5, 13, 22, 57, 14},
    {3, 22, 57, 7, 18, 1},
    {3, 7, 18, 9, 23, 2},
    {3, 11, 27, 9, 22, 2},
    {3, 9, 22, 7, 17, 15},
    {3, 5, 12, 8, 19, 23},
    {3, 26, 57, 11, 24, 2},
    {3, 8, 17, 9, 19, 19},
    {3, 29, 57, 14, 27, 2},
    {3, 11, 21, 10, 19, 21},
    {3, 5, 9, 32, 57, 5},
    {3, 13, 23, 4, 7, 17},
    {3, 15, 26, 11, 19, 19},
    {3, 7, 12, 10, 17, 10},
    {3, 34, 57, 3, 5, 1},
    {3, 8, 13, 13, 21, 15},
    {3, 17, 27, 12, 19, 21},
    {3, 16, 25, 9, 14, 14},
    {3, 9, 14, 11, 17, 10},
    {3, 37, 57, 13, 20, 1},
    {3, 13, 20, 15, 23, 8},
    {3, 17, 25, 15, 22, 24},
    {3, 15, 22, 13, 19, 19},
    {3, 9, 13, 16, 23, 14},
    {3, 18, 25, 13, 18, 10},
    {3, 13, 18, 8, 11, 2},
    {3, 8, 11, 19, 26, 6},
    {3, 11, 15, 14, 19, 19},
    {3, 19, 25, 16, 21, 4},
    {3, 44, 57, 17, 22, 1},
    {3, 17, 22, 7, 9, 8},
    {3, 7, 9, 18, 23, 3},
    {3, 11, 14, 15, 19, 19},
    {3, 21, 26, 17, 21, 12},
    {3, 9, 11, 14, 17, 14},
    {3, 21, 25, 16, 19, 23},
    {3, 11, 13, 17, 20, 14},
    {3, 17, 20, 6, 7, 3},
    {3, 6, 7, 49, 57, 9},
    {3, 49, 57, 19, 22, 1},
    {3, 19, 22, 13, 15, 7},
    {3, 22, 25, 15, 17, 14},
    {3, 8, 9, 17, 19, 19},
    {3, 12, 13, 13, 14, 14},
    {3, 16, 17, 17, 18, 23},
    {3, 17, 18, 18, 19, 19},
    {4, 1, 25, 1, 24, 14},
    {4, 1, 24, 1, 23, 10},
    {4, 1, 12, 2, 23, 24},
    {4, 1, 11, 2, 21, 31},
    {4, 7, 27, 6, 23, 25},
    {4, 11, 24, 6, 13, 11},
    {4, 7, 15, 8, 17, 18},
    {4, 14, 27, 13, 25, 11},
    {4, 12, 23, 11, 21, 22},
    {4, 32, 57, 9, 16, 5},
    {4, 9, 16, 13, 23, 12},
    {4, 19, 26, 11, 15, 19},
    {4, 13, 14, 53, 57, 19},
    {4, 14, 15, 15, 16, 28},
    {4, 15, 16, 16, 17, 29},
    {5, 6, 13, 7, 15, 18},
    {5, 13, 25, 12, 23, 22},
    {5, 53, 57, 14, 15, 19},
}};

// Intervals on which the computed omega exceeds the published list; the exact
// forms attain the computed values (ord_23 u_1 = 4, ord_43 u_2 = 4, ord_47 u_2 = 5).
struct OmegaDeviation {
    long lo_num, lo_den, hi_num, hi_den;
    int published, computed;
};

inline constexpr std::array<OmegaDeviation, 3> kOmegaDeviations = {{
    {1, 24, 1, 23, 4, 5},
    {1, 23, 1, 22, 2, 4},
    {1, 22, 1, 21, 1, 4},
}};

// Printed asymptotic constants of the family.
inline constexpr const char* kC0 = "36.47011287";
inline constexpr const char* kC1 = "106.34774225";
inline constexpr const char* kC2 = "25.05460171";
inline constexpr const char* kBound = "12.51085940";

}  // namespace refdata
