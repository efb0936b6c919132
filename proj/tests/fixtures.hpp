#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

namespace fixtures {

// (dim P, dim K) at half-sizes 1, 2, 3, counted by hand from the block forms.
inline const std::map<std::string, std::array<std::pair<std::size_t, std::size_t>, 3>>& catalog_dims()
{
    static const std::map<std::string, std::array<std::pair<std::size_t, std::size_t>, 3>> dims{
        {"1", {{{8, 8}, {32, 32}, {72, 72}}}},
        {"2", {{{4, 4}, {16, 16}, {36, 36}}}},
        {"3/+", {{{6, 2}, {20, 12}, {42, 30}}}},
        {"4/+", {{{2, 6}, {12, 20}, {30, 42}}}},
        {"3/-", {{{2, 2}, {12, 12}, {30, 30}}}},
        {"4/-", {{{6, 6}, {20, 20}, {42, 42}}}},
        {"5", {{{4, 4}, {16, 16}, {36, 36}}}},
        {"6", {{{4, 4}, {16, 16}, {36, 36}}}},
        {"7", {{{4, 4}, {16, 16}, {36, 36}}}},
        {"8", {{{4, 4}, {16, 16}, {36, 36}}}},
        {"9/+", {{{2, 0}, {8, 4}, {18, 12}}}},
        {"10/+", {{{8, 12}, {32, 40}, {72, 84}}}},
        {"11/+", {{{4, 2}, {12, 8}, {24, 18}}}},
        {"12/+", {{{2, 2}, {8, 8}, {18, 18}}}},
        {"9/-", {{{2, 0}, {8, 4}, {18, 12}}}},
        {"10/-", {{{8, 12}, {32, 40}, {72, 84}}}},
        {"11/-", {{{0, 2}, {4, 8}, {12, 18}}}},
        {"12/-", {{{2, 2}, {8, 8}, {18, 18}}}},
        {"13", {{{2, 2}, {8, 8}, {18, 18}}}},
        {"14/+", {{{2, 2}, {8, 8}, {18, 18}}}},
        {"14/-", {{{2, 2}, {8, 8}, {18, 18}}}},
        {"15", {{{8, 8}, {32, 32}, {72, 72}}}},
        {"16/+", {{{2, 2}, {8, 8}, {18, 18}}}},
        {"17/+", {{{3, 1}, {10, 6}, {21, 15}}}},
        {"16/-", {{{2, 2}, {8, 8}, {18, 18}}}},
        {"17/-", {{{1, 1}, {6, 6}, {15, 15}}}},
        {"18a", {{{1, 3}, {6, 10}, {15, 21}}}},
        {"18b/+", {{{1, 1}, {6, 6}, {15, 15}}}},
        {"19/+", {{{3, 1}, {10, 6}, {21, 15}}}},
        {"19'/+", {{{3, 1}, {10, 6}, {21, 15}}}},
        {"18b/-", {{{3, 3}, {10, 10}, {21, 21}}}},
        {"19/-", {{{1, 1}, {6, 6}, {15, 15}}}},
        {"19'/-", {{{1, 1}, {6, 6}, {15, 15}}}},
        {"19+", {{{3, 1}, {10, 6}, {21, 15}}}},
        {"19-", {{{1, 1}, {6, 6}, {15, 15}}}},
        {"19'+", {{{3, 1}, {10, 6}, {21, 15}}}},
        {"19'-", {{{1, 1}, {6, 6}, {15, 15}}}},
        {"20a", {{{6, 10}, {28, 36}, {66, 78}}}},
        {"20b", {{{10, 10}, {36, 36}, {78, 78}}}},
        {"21a/+", {{{3, 1}, {10, 6}, {21, 15}}}},
        {"21b/+", {{{1, 1}, {6, 6}, {15, 15}}}},
        {"21a/-", {{{1, 3}, {6, 10}, {15, 21}}}},
        {"21b/-", {{{3, 3}, {10, 10}, {21, 21}}}},
        {"21a+", {{{3, 1}, {10, 6}, {21, 15}}}},
        {"21b+", {{{1, 1}, {6, 6}, {15, 15}}}},
        {"21a-", {{{1, 3}, {6, 10}, {15, 21}}}},
        {"21b-", {{{3, 3}, {10, 10}, {21, 21}}}},
        {"22/+", {{{1, 0}, {4, 2}, {9, 6}}}},
        {"23/+", {{{4, 6}, {16, 20}, {36, 42}}}},
        {"24/+", {{{2, 1}, {6, 4}, {12, 9}}}},
        {"25/+", {{{1, 0}, {4, 2}, {9, 6}}}},
        {"26/+", {{{4, 6}, {16, 20}, {36, 42}}}},
        {"27/+", {{{2, 1}, {6, 4}, {12, 9}}}},
        {"28/+", {{{2, 4}, {12, 16}, {30, 36}}}},
        {"29/+", {{{4, 2}, {16, 12}, {36, 30}}}},
        {"30/+", {{{4, 6}, {16, 20}, {36, 42}}}},
        {"22/-", {{{1, 0}, {4, 2}, {9, 6}}}},
        {"23/-", {{{4, 6}, {16, 20}, {36, 42}}}},
        {"24/-", {{{0, 1}, {2, 4}, {6, 9}}}},
        {"25/-", {{{1, 0}, {4, 2}, {9, 6}}}},
        {"26/-", {{{4, 6}, {16, 20}, {36, 42}}}},
        {"27/-", {{{0, 1}, {2, 4}, {6, 9}}}},
        {"28/-", {{{6, 4}, {20, 16}, {42, 36}}}},
        {"29/-", {{{4, 2}, {16, 12}, {36, 30}}}},
        {"30/-", {{{4, 6}, {16, 20}, {36, 42}}}},
    };
    return dims;
}

} // namespace fixtures
