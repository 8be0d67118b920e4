#pragma once

#include <array>
#include <cstddef>
#include <string_view>

// Published reference values, transcribed verbatim. Compared against freshly
// computed results by the golden checks.

namespace rooksum::reference {

/// Minimal polynomial of kappa(n, a, b, c). The (0, 0, 0) row stands for every
/// b = 0 case.
struct MinpolEntry {
  int n, a, b, c;
  std::string_view minpol;
};

inline constexpr std::array<MinpolEntry, 58> kMinpolTable{{
    {1, 0, 0, 0, "x-1"},
    {2, 0, 0, 0, "(x-2)x"},
    {2, 1, 1, 0, "x-1"},
    {2, 1, 1, 1, "(x-1)(x+1)"},
    {3, 0, 0, 0, "(x-6)x"},
    {3, 1, 1, 0, "(x-4)(x-1)x"},
    {3, 1, 1, 1, "(x-4)x(x+2)"},
    {3, 2, 1, 0, "(x-2)x"},
    {3, 2, 1, 1, "(x-2)x(x+1)"},
    {4, 0, 0, 0, "(x-24)x"},
    {4, 1, 1, 0, "(x-18)(x-2)x"},
    {4, 1, 1, 1, "(x-18)x(x+6)"},
    {4, 2, 1, 0, "(x-12)(x-4)x"},
    {4, 2, 1, 1, "(x-12)x(x+4)"},
    {4, 3, 1, 0, "(x-6)x"},
    {4, 3, 1, 1, "(x-6)x(x+2)"},
    {4, 2, 2, 0, "(x-4)x"},
    {4, 2, 2, 1, "(x-4)(x+2)x^{2}"},
    {4, 2, 2, 2, "(x-4)x(x+4)"},
    {5, 0, 0, 0, "(x-120)x"},
    {5, 1, 1, 0, "(x-96)(x-6)x"},
    {5, 1, 1, 1, "(x-96)x(x+24)"},
    {5, 2, 1, 0, "(x-72)(x-12)x"},
    {5, 2, 1, 1, "(x-72)x(x+18)"},
    {5, 3, 1, 0, "(x-48)(x-18)x"},
    {5, 3, 1, 1, "(x-48)x(x+12)"},
    {5, 4, 1, 0, "(x-24)x"},
    {5, 4, 1, 1, "(x-24)x(x+6)"},
    {5, 2, 2, 0, "(x-36)(x-16)(x-4)x"},
    {5, 2, 2, 1, "(x-36)x(x+4)"},
    {5, 2, 2, 2, "(x-36)(x-12)x(x+24)"},
    {5, 3, 2, 0, "(x-12)x"},
    {5, 3, 2, 1, "(x-12)(x-2)x(x+4)"},
    {5, 3, 2, 2, "(x-12)(x-4)x(x+8)"},
    {6, 0, 0, 0, "(x-720)x"},
    {6, 1, 1, 0, "(x-600)(x-24)x"},
    {6, 1, 1, 1, "(x-600)x(x+120)"},
    {6, 2, 1, 0, "(x-480)(x-48)x"},
    {6, 2, 1, 1, "(x-480)x(x+96)"},
    {6, 3, 1, 0, "(x-360)(x-72)x"},
    {6, 3, 1, 1, "(x-360)x(x+72)"},
    {6, 4, 1, 0, "(x-240)(x-96)x"},
    {6, 4, 1, 1, "(x-240)x(x+48)"},
    {6, 5, 1, 0, "(x-120)x"},
    {6, 5, 1, 1, "(x-120)x(x+24)"},
    {6, 2, 2, 0, "(x-288)(x-72)(x-8)x"},
    {6, 2, 2, 1, "(x-288)x(x+12)(x+36)"},
    {6, 2, 2, 2, "(x-288)(x-48)x(x+144)"},
    {6, 3, 2, 0, "(x-144)(x-72)(x-24)x"},
    {6, 3, 2, 1, "(x-144)(x+16)x^{2}"},
    {6, 3, 2, 2, "(x-144)(x-24)x(x+72)"},
    {6, 4, 2, 0, "(x-48)x"},
    {6, 4, 2, 1, "(x-48)(x-12)x(x+12)"},
    {6, 4, 2, 2, "(x-48)(x-8)x(x+24)"},
    {6, 3, 3, 0, "(x-36)x"},
    {6, 3, 3, 1, "(x-36)(x-12)x(x+4)(x+12)"},
    {6, 3, 3, 2, "(x-36)(x-12)x(x+4)(x+12)"},
    {6, 3, 3, 3, "(x-36)x(x+36)"},
}};

struct DeltaStatsEntry {
  int n;
  std::size_t dim, center_dim, radical_dim;
};

inline constexpr std::array<DeltaStatsEntry, 4> kDeltaStats{{
    {2, 6, 3, 3},
    {3, 20, 4, 5},
    {4, 70, 5, 39},
    {5, 252, 6, 84},
}};

/// Unity term: coefficient of D(to, from), sets 1-based. Unlisted terms are 0.
struct UnityTerm {
  int n;
  std::string_view to, from, coeff;
};

inline constexpr std::array<UnityTerm, 25> kUnityTerms{{
    {1, "{1}", "{1}", "1"},

    {2, "{1}", "{1}", "1/4"},
    {2, "{2}", "{2}", "1/4"},
    {2, "{1}", "{2}", "-1/4"},
    {2, "{2}", "{1}", "-1/4"},
    {2, "{1,2}", "{1,2}", "1/2"},

    {3, "{1}", "{1}", "1/18"},
    {3, "{2}", "{2}", "1/18"},
    {3, "{3}", "{3}", "1/18"},
    {3, "{1}", "{2}", "-1/36"},
    {3, "{1}", "{3}", "-1/36"},
    {3, "{2}", "{1}", "-1/36"},
    {3, "{2}", "{3}", "-1/36"},
    {3, "{3}", "{1}", "-1/36"},
    {3, "{3}", "{2}", "-1/36"},
    {3, "{1,2}", "{1,2}", "1/6"},
    {3, "{1,3}", "{1,3}", "1/6"},
    {3, "{2,3}", "{2,3}", "1/6"},
    {3, "{1,2}", "{1,3}", "-1/12"},
    {3, "{1,2}", "{2,3}", "-1/12"},
    {3, "{1,3}", "{1,2}", "-1/12"},
    {3, "{1,3}", "{2,3}", "-1/12"},
    {3, "{2,3}", "{1,2}", "-1/12"},
    {3, "{2,3}", "{1,3}", "-1/12"},
    {3, "{1,2,3}", "{1,2,3}", "1/6"},
}};

/// Catalan numbers C_1..C_6, the counts of 123-avoiding permutations.
inline constexpr std::array<std::size_t, 6> kCatalan{{1, 2, 5, 14, 42, 132}};

/// dim(I_2 ∩ sign twist of I_2) at n = 3.
inline constexpr std::size_t kCrossCharRational = 4;
inline constexpr std::size_t kCrossCharF2 = 5;

}  // namespace rooksum::reference
