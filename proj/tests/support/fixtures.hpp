#pragma once

// Monthly electricity consumption in Ukraine, October 2013 - May 2014,
// stored verbatim from the source table. x2 carries the previous month's
// consumption and x3 the consumption twelve months earlier (a seasonal
// companion); x3 is only published for the first four months.
//
// The source rows are internally inconsistent at one point: x2 should be
// x1 shifted by one month, but the March/April 2014 pair arrives swapped
// (x2[5] = 579065 where the shift predicts 583798, and x2[6] = 583798
// where it predicts 579065). The values are kept as published.

#include <array>

namespace fuzzcast::testing {

inline constexpr std::array<double, 8> kElectricityX1 = {
    558275, 543247, 541478, 582639, 583798, 579065, 578932, 575576};

inline constexpr std::array<double, 8> kElectricityX2 = {
    565640, 558275, 543247, 541478, 582639, 579065, 583798, 578932};

inline constexpr std::array<double, 4> kElectricityX3 = {
    550135, 534579, 573978, 589912};

// indices into kElectricityX2 where the published one-month shift breaks
inline constexpr std::array<int, 2> kElectricityX2SwappedIndices = {5, 6};

}  // namespace fuzzcast::testing
