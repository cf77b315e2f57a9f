# SPDX-License-Identifier: Apache-2.0
"""Independent mpmath evaluations frozen into tests/oracle_values.hpp.

Run: python3 tests/oracles/generate.py > tests/oracle_values.hpp
"""
import itertools
import mpmath as mp

mp.mp.dps = 60


def s(x, digits=45):
    return mp.nstr(x, digits, strip_zeros=False)


out = []
emit = out.append

emit("// SPDX-License-Identifier: Apache-2.0")
emit("// Generated by tests/oracles/generate.py (mpmath, 60 digits). Do not edit.")
emit("#pragma once")
emit("")
emit("namespace oracle {")
emit("")

sqrt649 = mp.sqrt(649)
emit(f'inline constexpr const char* kSqrt2_10 = "{mp.nstr(mp.sqrt(2), 11)}";')
emit(f'inline constexpr const char* kH2Dim6_12 = "{mp.nstr(mp.mpf(5)/6 + sqrt649/30, 13)}";')
emit(f'inline constexpr const char* kH2Dim6_40 = "{mp.nstr(mp.mpf(5)/6 + sqrt649/30, 41)}";')
emit(f'inline constexpr const char* kA2Dim6_40 = "{mp.nstr((275 - 5*sqrt649)/396, 40)}";')
emit(f'inline constexpr const char* kA2Dim6Nested_40 = "{mp.nstr((25 - 5*mp.sqrt(mp.mpf(59)/11))/36, 40)}";')
emit(f'inline constexpr const char* kBound13_30 = "{mp.nstr(4 - 2*mp.sqrt(3), 30)}";')
emit("")

# Volumes for integrate().
emit(f"inline constexpr double kAreaS2 = {s(4*mp.pi, 20)};")
emit(f"inline constexpr double kAreaFlatTorus = {s(2*mp.pi**2, 20)};")
a2 = mp.mpf(6)/7
vol = 8*mp.pi**2/3 * a2**2
emit(f"inline constexpr double kVolS4a67 = {s(vol, 20)};")
emit(f"inline constexpr double kH4IntegralS4a67 = {s(vol/36, 20)};")
emit("")

# Eigenvalue arithmetic for the residual examples.
lam = 4  # hypersphere(5,1/2): 4 b²/a²
emit(f"inline constexpr double kBiharmonicS5Half_k1 = {s(abs(lam - 4 + 1), 10)};")
emit(f"inline constexpr double kCharm4ReducedS5Half = {s(abs(lam - 4 + mp.mpf(10)/3), 20)};")
lam = 6  # hypersphere(7,1/2): 6 b²/a²
c = 42
val = lam**2 + mp.mpf(c - 36)/3*lam - 72 + mp.mpf(2)/75*(c - 45)*(c - 30)
emit(f"inline constexpr double kCharm6S7Half = {s(abs(val), 20)};")
emit(f"inline constexpr double kInstabilityS4a67 = {s(-4*16*(mp.mpf(1)/6)**2, 20)};")
emit(f"inline constexpr double kInstabilityTorus13 = {s(-4*16*(mp.mpf(1)/4)**2, 20)};")
emit("")

# Mixed partials of f(u1,u2) = (3/4) cos(u1) cos(u2) at (0.3, 0.7), |alpha| <= 4,
# as plain derivatives (not Taylor coefficients).
emit("struct Partial {")
emit("  int a1, a2;")
emit("  double value;")
emit("};")
emit("inline constexpr Partial kCosCos[] = {")
f = lambda x, y: mp.mpf(3)/4*mp.cos(x)*mp.cos(y)
for tot in range(0, 5):
    for a1 in range(tot, -1, -1):
        a2_ = tot - a1
        d = mp.diff(f, (mp.mpf("0.3"), mp.mpf("0.7")), (a1, a2_))
        emit(f"    {{{a1}, {a2_}, {s(d, 20)}}},")
emit("};")
emit("")

# Sixth derivatives of a chart component of the 2-sphere scaled by sqrt(6/7):
# x1 = a sin(u0) cos(u1) at (1.1, 0.4).
emit("inline constexpr Partial kSphereOrder6[] = {")
g = lambda x, y: mp.sqrt(mp.mpf(6)/7)*mp.sin(x)*mp.cos(y)
for a1 in range(6, -1, -1):
    d = mp.diff(g, (mp.mpf("1.1"), mp.mpf("0.4")), (a1, 6 - a1))
    emit(f"    {{{a1}, {6 - a1}, {s(d, 20)}}},")
emit("};")
emit("")
emit("}  // namespace oracle")
print("\n".join(out))
