// Graded-dimension tables at degrees 0,2,...,20.
// Generated by tools/oracles/series_oracle.py; do not edit by hand.
#pragma once
#include <array>

namespace equicoh::expected {

inline constexpr int kCutoff = 20;

// (1+t^2+...+t^2)/(1-t^2)
inline constexpr std::array<long long, 11> kP1BorelSl2{{1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}};

// (1+t^2+...+t^4)/(1-t^2)
inline constexpr std::array<long long, 11> kP2BorelSl2{{1, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3}};

// (1+t^2+...+t^6)/(1-t^2)
inline constexpr std::array<long long, 11> kP3BorelSl2{{1, 2, 3, 4, 4, 4, 4, 4, 4, 4, 4}};

// (1+t^2+...+t^8)/(1-t^2)
inline constexpr std::array<long long, 11> kP4BorelSl2{{1, 2, 3, 4, 5, 5, 5, 5, 5, 5, 5}};

// (1+t^2+...+t^10)/(1-t^2)
inline constexpr std::array<long long, 11> kP5BorelSl2{{1, 2, 3, 4, 5, 6, 6, 6, 6, 6, 6}};

// (1+t^2+...+t^12)/(1-t^2)
inline constexpr std::array<long long, 11> kP6BorelSl2{{1, 2, 3, 4, 5, 6, 7, 7, 7, 7, 7}};

// (1+t^2+...+t^6)/(1-t^4)
inline constexpr std::array<long long, 11> kP3KostantSl2{{1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2}};

// (1+t^2+...+t^8)/(1-t^4)
inline constexpr std::array<long long, 11> kP4KostantSl2{{1, 1, 2, 2, 3, 2, 3, 2, 3, 2, 3}};

// (1+t^2+...+t^10)/(1-t^4)
inline constexpr std::array<long long, 11> kP5KostantSl2{{1, 1, 2, 2, 3, 3, 3, 3, 3, 3, 3}};

// (1+t^2+...+t^4)/(1-t^2)^2
inline constexpr std::array<long long, 11> kP2BorelSl3{{1, 3, 6, 9, 12, 15, 18, 21, 24, 27, 30}};

// (1+t^2+...+t^6)/(1-t^2)^3
inline constexpr std::array<long long, 11> kP3BorelSl4{{1, 4, 10, 20, 34, 52, 74, 100, 130, 164, 202}};

// (1+t^2+...+t^8)/(1-t^2)^4
inline constexpr std::array<long long, 11> kP4BorelSl5{{1, 5, 15, 35, 70, 125, 205, 315, 460, 645, 875}};

// Gaussian [4,2]_t / (1-t^2)^3
inline constexpr std::array<long long, 11> kGr24BorelSl4{{1, 4, 11, 23, 41, 65, 95, 131, 173, 221, 275}};

// Gaussian [4,2]_t / (1-t^2)
inline constexpr std::array<long long, 11> kGr24EmbeddedBorel{{1, 2, 4, 5, 6, 6, 6, 6, 6, 6, 6}};

// S_3 length polynomial / (1-t^2)^2
inline constexpr std::array<long long, 11> kF3Borel{{1, 4, 9, 15, 21, 27, 33, 39, 45, 51, 57}};

// S_3 length polynomial / ((1-t^4)(1-t^6))
inline constexpr std::array<long long, 11> kF3Kostant{{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}};

// (1+t^2+t^4)/((1-t^4)(1-t^6))
inline constexpr std::array<long long, 11> kP2Kostant{{1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6}};

// (1+t^2)^1/(1-t^2)^2
inline constexpr std::array<long long, 11> kBott1BorelA2{{1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21}};

// (1+t^2)^2/(1-t^2)^2
inline constexpr std::array<long long, 11> kBott2BorelA2{{1, 4, 8, 12, 16, 20, 24, 28, 32, 36, 40}};

// (1+t^2)^3/(1-t^2)^2
inline constexpr std::array<long long, 11> kBott3BorelA2{{1, 5, 12, 20, 28, 36, 44, 52, 60, 68, 76}};

// (1+t^2)^4/(1-t^2)^2
inline constexpr std::array<long long, 11> kBott4BorelA2{{1, 6, 17, 32, 48, 64, 80, 96, 112, 128, 144}};

// (1+t^2+2t^4+t^6)/(1-t^2)^3
inline constexpr std::array<long long, 11> kSchubertDivisorGr24{{1, 4, 11, 23, 40, 62, 89, 121, 158, 200, 247}};

// (1+t^2+t^4+t^6)/(1-t^4)
inline constexpr std::array<long long, 11> kDiscriminantP3{{1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2}};

} // namespace equicoh::expected
