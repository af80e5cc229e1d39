#pragma once

// Shared constants for the scalar and AVX2 exp implementations. Range
// reduction x = n*ln2 + r with Cody-Waite split, then a degree-13 Taylor
// polynomial on r in [-ln2/2, ln2/2]. Truncation error ~4e-18 relative;
// both backends must evaluate the identical operation sequence.

namespace evac::kern::detail {

inline constexpr double kExpUnderflow = -708.0;
inline constexpr double kInvLn2 = 1.4426950408889634074;
inline constexpr double kLn2Hi = 6.93147180369123816490e-01;
inline constexpr double kLn2Lo = 1.90821492927058770002e-10;

// Taylor coefficients 1/k!, highest order first (k = 13 ... 0).
inline constexpr double kExpPoly[14] = {
    1.6059043836821614599e-10,  // 1/13!
    2.0876756987868098979e-09,  // 1/12!
    2.5052108385441718775e-08,  // 1/11!
    2.7557319223985890653e-07,  // 1/10!
    2.7557319223985892511e-06,  // 1/9!
    2.4801587301587301566e-05,  // 1/8!
    1.9841269841269841253e-04,  // 1/7!
    1.3888888888888889419e-03,  // 1/6!
    8.3333333333333332177e-03,  // 1/5!
    4.1666666666666664354e-02,  // 1/4!
    1.6666666666666665741e-01,  // 1/3!
    5.0000000000000000000e-01,  // 1/2!
    1.0000000000000000000e+00,  // 1/1!
    1.0000000000000000000e+00,  // 1/0!
};

}  // namespace evac::kern::detail
