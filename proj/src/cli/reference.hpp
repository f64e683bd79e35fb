#pragma once

// Published pulse spectrum at A = 100, B = -50 (units of -lambda^2), by basis size.

#include <array>

namespace tra::cli::reference {

inline constexpr std::array<int, 5> kTable1Sizes{15, 20, 30, 50, 100};

inline constexpr std::array<std::array<double, 6>, 5> kTable1{{
    {32.769451481025, 23.244111726158, 15.147885796863, 8.556078496240, 3.599423221309, 0.569752207819},
    {32.769451481022, 23.244111726157, 15.147885796824, 8.556078499364, 3.599423895440, 0.569839867831},
    {32.769451481020, 23.244111726158, 15.147885796824, 8.556078499365, 3.599423896582, 0.569839127953},
    {32.769451481023, 23.244111726158, 15.147885796825, 8.556078499364, 3.599423896564, 0.569839035162},
    {32.769451481023, 23.244111726155, 15.147885796825, 8.556078499364, 3.599423896564, 0.569839032667},
}};

}  // namespace tra::cli::reference
