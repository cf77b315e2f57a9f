// SPDX-License-Identifier: Apache-2.0
// Generated by tests/oracles/generate.py (mpmath, 60 digits). Do not edit.
#pragma once

namespace oracle {

inline constexpr const char* kSqrt2_10 = "1.4142135624";
inline constexpr const char* kH2Dim6_12 = "1.682515946857";
inline constexpr const char* kH2Dim6_40 = "1.6825159468571331192792243941964399455912";
inline constexpr const char* kA2Dim6_40 = "0.3727843635642172527982735880569040610134";
inline constexpr const char* kA2Dim6Nested_40 = "0.3727843635642172527982735880569040610134";
inline constexpr const char* kBound13_30 = "0.535898384862245412945107316988";

inline constexpr double kAreaS2 = 12.566370614359172954;
inline constexpr double kAreaFlatTorus = 19.739208802178717238;
inline constexpr double kVolS4a67 = 19.336367806215886274;
inline constexpr double kH4IntegralS4a67 = 0.53712132795044128538;

inline constexpr double kBiharmonicS5Half_k1 = 1;
inline constexpr double kCharm4ReducedS5Half = 3.3333333333333333333;
inline constexpr double kCharm6S7Half = 24.960000000000000000;
inline constexpr double kInstabilityS4a67 = -1.7777777777777777778;
inline constexpr double kInstabilityTorus13 = -4.0000000000000000000;

struct Partial {
  int a1, a2;
  double value;
};
inline constexpr Partial kCosCos[] = {
    {0, 0, 0.54801123745163430007},
    {1, 0, -0.16951974093721725562},
    {0, 1, -0.46158349766870512437},
    {2, 0, -0.54801123745163430007},
    {1, 1, 0.14278450805052951202},
    {0, 2, -0.54801123745163430007},
    {3, 0, 0.16951974093721725562},
    {2, 1, 0.46158349766870512437},
    {1, 2, 0.16951974093721725562},
    {0, 3, 0.46158349766870512437},
    {4, 0, 0.54801123745163430007},
    {3, 1, -0.14278450805052951202},
    {2, 2, 0.54801123745163430007},
    {1, 3, -0.14278450805052951202},
    {0, 4, 0.54801123745163430007},
};

inline constexpr Partial kSphereOrder6[] = {
    {6, 0, -0.75996529574701352027},
    {5, 1, -0.16353561227337203659},
    {4, 2, -0.75996529574701352027},
    {3, 3, -0.16353561227337203659},
    {2, 4, -0.75996529574701352027},
    {1, 5, -0.16353561227337203659},
    {0, 6, -0.75996529574701352027},
};

}  // namespace oracle
