#pragma once

namespace tcnet::asymptotics {

/// Half-width of the window where airy_ai uses its Maclaurin series.
inline constexpr double kAirySeriesWindow = 8.0;

/// Ai(x) for |x| <= 8 from the two Maclaurin series
///   Ai(x) = Ai(0) f(x) + Ai'(0) g(x),
/// summed in extended precision (absolute error well below 1e-10).
/// Throws std::domain_error outside the window.
double airy_ai(double x);

/// Ai'(x) on the same window, by differentiating the series term by term.
double airy_ai_prime(double x);

/// Where log_airy_ai switches from the series to the large-argument expansion.
/// The series loses relative accuracy to cancellation as Ai(x) decays; both
/// errors are near 1e-10 here.
inline constexpr double kLogAiryExpansionFrom = 6.5;

/// ln Ai(x) for x above the largest zero. Uses the series up to
/// kLogAiryExpansionFrom and the large-argument expansion beyond, so it stays
/// finite where Ai underflows.
/// Throws std::domain_error when Ai(x) <= 0.
double log_airy_ai(double x);

/// The largest (least negative) zero of Ai, by bisection on [-3, -2] and a
/// Newton polish. Cached after the first call.
double airy_root_a1();

}  // namespace tcnet::asymptotics
