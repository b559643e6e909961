#ifndef LEROY_CONSTANTS_HPP
#define LEROY_CONSTANTS_HPP

namespace leroy {

/// Base constants every criterion builds its thresholds from.
/// Derived quantities (e^2, e-1, e^2/(e^2-1), ...) are computed at call
/// time from these, never spelled as rounded decimal literals.
struct MathConstants {
  double euler_number;      // e
  double euler_mascheroni;  // delta, limit of H_n - log n
};

inline constexpr MathConstants kMathConstants{
    2.718281828459045235360287471352662498,
    0.577215664901532860606512090082402431};

inline constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace leroy

#endif  // LEROY_CONSTANTS_HPP
