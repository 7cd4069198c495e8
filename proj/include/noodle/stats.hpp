#pragma once

#include <cmath>
#include <limits>

#include "noodle/errors.hpp"

// Special functions needed by the p-value combiners. Self-contained series /
// continued-fraction implementations, absolute error well below 1e-10 over the
// ranges used here.

namespace noodle {

/// log Gamma(x) for x > 0 (Lanczos, g = 7, 9 terms).
inline double log_gamma(double x)
{
	static const double coef[9] = {
	    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,  771.32342877765313, -176.61502916214059,
	    12.507343278686905,   -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};
	if (x < 0.5) {
		// reflection
		return std::log(3.14159265358979323846 / std::sin(3.14159265358979323846 * x)) - log_gamma(1.0 - x);
	}
	x -= 1.0;
	double a = coef[0];
	double t = x + 7.5;
	for (int i = 1; i < 9; ++i)
		a += coef[i] / (x + i);
	return 0.5 * std::log(2.0 * 3.14159265358979323846) + (x + 0.5) * std::log(t) - t + std::log(a);
}

namespace detail {

// Lower regularized incomplete gamma P(a,x) by power series.
inline double gamma_p_series(double a, double x)
{
	double sum = 1.0 / a;
	double term = sum;
	double ap = a;
	for (int n = 0; n < 500; ++n) {
		ap += 1.0;
		term *= x / ap;
		sum += term;
		if (std::fabs(term) < std::fabs(sum) * 1e-16)
			break;
	}
	return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
}

// Upper regularized incomplete gamma Q(a,x) by Lentz continued fraction.
inline double gamma_q_cf(double a, double x)
{
	const double tiny = 1e-300;
	double b = x + 1.0 - a;
	double c = 1.0 / tiny;
	double d = 1.0 / b;
	double h = d;
	for (int i = 1; i <= 500; ++i) {
		double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
		b += 2.0;
		d = an * d + b;
		if (std::fabs(d) < tiny)
			d = tiny;
		c = b + an / c;
		if (std::fabs(c) < tiny)
			c = tiny;
		d = 1.0 / d;
		double delta = d * c;
		h *= delta;
		if (std::fabs(delta - 1.0) < 1e-16)
			break;
	}
	return h * std::exp(-x + a * std::log(x) - log_gamma(a));
}

} // namespace detail

/// Upper regularized incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a).
inline double gamma_q(double a, double x)
{
	if (a <= 0.0 || x < 0.0)
		throw ArgumentError("gamma_q requires a > 0 and x >= 0");
	if (x == 0.0)
		return 1.0;
	if (x < a + 1.0)
		return 1.0 - detail::gamma_p_series(a, x);
	return detail::gamma_q_cf(a, x);
}

/// Survival function of the chi-square distribution with dof degrees of freedom.
inline double chi2_survival(double x, int dof)
{
	if (dof < 1)
		throw ArgumentError("chi2_survival requires dof >= 1");
	if (x <= 0.0)
		return 1.0;
	return gamma_q(0.5 * dof, 0.5 * x);
}

/// Survival function of the standard normal, 1 - Phi(z).
inline double normal_survival(double z) { return 0.5 * std::erfc(z / 1.41421356237309504880); }

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / 1.41421356237309504880); }

inline double normal_pdf(double z) { return std::exp(-0.5 * z * z) / 2.50662827463100050242; }

/// Inverse standard normal CDF. Acklam's rational approximation followed by one
/// Halley step against erfc; |error| < 1e-13 on (0,1).
inline double probit(double p)
{
	if (p <= 0.0)
		return -std::numeric_limits<double>::infinity();
	if (p >= 1.0)
		return std::numeric_limits<double>::infinity();

	static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,  -2.759285104469687e+02,
	                            1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
	static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
	                            6.680131188771972e+01,  -1.328068155288572e+01};
	static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
	                            -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
	static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
	                            3.754408661907416e+00};
	const double plow = 0.02425;
	double x;
	if (p < plow) {
		double q = std::sqrt(-2.0 * std::log(p));
		x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
		    ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
	} else if (p <= 1.0 - plow) {
		double q = p - 0.5;
		double r = q * q;
		x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
		    (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
	} else {
		double q = std::sqrt(-2.0 * std::log(1.0 - p));
		x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
		    ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
	}
	// Halley refinement
	double e = normal_cdf(x) - p;
	double u = e * 2.50662827463100050242 * std::exp(0.5 * x * x);
	x = x - u / (1.0 + 0.5 * x * u);
	return x;
}

} // namespace noodle
