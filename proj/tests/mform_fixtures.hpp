#pragma once

#include <vector>

// Closed affine forms of the maximal step value M over the dominant cone,
// one per exceptional parabolic case.  Frozen from the coordinate tables in
// docs/conventions.md and cross-checked by hand; max_element must agree with
// these identically.

namespace testutil {

struct MFormFixture {
    const char* type;
    int k;
    std::vector<long long> coeffs;
    long long constant;
};

inline const std::vector<MFormFixture>& m_form_fixtures() {
    static const std::vector<MFormFixture> table = {
        {"E6", 1, {1, 2, 2, 3, 2, 1}, 11},
        {"E6", 2, {1, 1, 2, 3, 2, 1}, 10},
        {"E6", 3, {1, 1, 1, 2, 2, 1}, 8},
        {"E6", 4, {1, 1, 1, 1, 1, 1}, 6},
        {"E6", 5, {1, 1, 2, 2, 1, 1}, 8},
        {"E6", 6, {1, 2, 2, 3, 2, 1}, 11},

        {"E7", 1, {1, 2, 3, 4, 3, 2, 1}, 16},
        {"E7", 2, {1, 1, 2, 3, 3, 2, 1}, 13},
        {"E7", 3, {1, 1, 1, 2, 2, 2, 1}, 10},
        {"E7", 4, {1, 1, 1, 1, 1, 1, 1}, 7},
        {"E7", 5, {1, 1, 2, 2, 1, 1, 1}, 9},
        {"E7", 6, {1, 2, 2, 3, 2, 1, 1}, 12},
        {"E7", 7, {2, 2, 3, 4, 3, 2, 1}, 17},

        {"E8", 1, {1, 3, 3, 5, 4, 3, 2, 1}, 22},
        {"E8", 2, {1, 1, 2, 3, 3, 3, 2, 1}, 16},
        {"E8", 3, {1, 1, 1, 2, 2, 2, 2, 1}, 12},
        {"E8", 4, {1, 1, 1, 1, 1, 1, 1, 1}, 8},
        {"E8", 5, {1, 1, 2, 2, 1, 1, 1, 1}, 10},
        {"E8", 6, {1, 2, 2, 3, 2, 1, 1, 1}, 13},
        {"E8", 7, {2, 2, 3, 4, 3, 2, 1, 1}, 18},
        {"E8", 8, {2, 3, 4, 6, 5, 4, 3, 1}, 28},

        {"F4", 1, {1, 3, 2, 1}, 7},
        {"F4", 2, {1, 1, 1, 1}, 4},
        {"F4", 3, {2, 2, 1, 1}, 6},
        {"F4", 4, {2, 4, 3, 1}, 10},

        {"G2", 1, {1, 3}, 4},
        {"G2", 2, {1, 1}, 2},
    };
    return table;
}

}  // namespace testutil
