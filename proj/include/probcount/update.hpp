#pragma once

#include "expansion.hpp"

#include <cmath>

namespace probcount
{
	/// Quotient coefficients outside [-kDivisionSlack, 1 + kDivisionSlack] mean the division
	/// has amplified roundoff beyond repair.
	inline constexpr double kDivisionSlack = 1e-6;
	/// Dividing by x requires the constant coefficient to vanish up to this tolerance.
	inline constexpr double kShiftTolerance = 1e-12;

	namespace detail
	{
		template <typename Scalar>
		void check_quotient_entry(Scalar g, Index i)
		{
			if (!(g >= Scalar(-kDivisionSlack) && g <= Scalar(1 + kDivisionSlack)))
				throw NumericBreakdown("polynomial division unstable: quotient coefficient " + std::to_string(double(g))
									   + " at exponent " + std::to_string(i));
		}

		/// Divides c by (p x + 1 - p). The recurrence runs in whichever direction divides
		/// by the larger of p and 1 - p.
		template <typename Scalar>
		Coefficients<Scalar> divide_by_trial(const Coefficients<Scalar> &c, Scalar p)
		{
			const Index n = c.size();
			const Scalar q = Scalar(1) - p;
			Coefficients<Scalar> g(n - 1);
			Scalar remainder;
			if (p <= Scalar(0.5))
			{
				// c_i = p g_{i-1} + q g_i
				g[0] = c[0] / q;
				check_quotient_entry(g[0], 0);
				for (Index i = 1; i < n - 1; ++i)
				{
					g[i] = (c[i] - p * g[i - 1]) / q;
					check_quotient_entry(g[i], i);
				}
				remainder = c[n - 1] - p * g[n - 2];
			}
			else
			{
				g[n - 2] = c[n - 1] / p;
				check_quotient_entry(g[n - 2], n - 2);
				for (Index i = n - 2; i > 0; --i)
				{
					g[i - 1] = (c[i] - q * g[i]) / p;
					check_quotient_entry(g[i - 1], i - 1);
				}
				remainder = c[0] - q * g[0];
			}
			const double tol = p == Scalar(1) ? kShiftTolerance : kDivisionSlack;
			if (std::abs(double(remainder)) > tol)
				throw NumericBreakdown("polynomial is not divisible by the trial polynomial with p = " + std::to_string(double(p))
									   + " (remainder " + std::to_string(double(remainder)) + ")");
			return g.cwiseMax(Scalar(0));
		}
	} // namespace detail

	/// Replaces one trial's probability in a complete expansion without re-expanding:
	/// F' = F (p_new x + 1 - p_new) / (p_old x + 1 - p_old).
	///
	/// Throws NumericBreakdown when the division is unstable or F does not contain a
	/// trial with p_old; callers should then recompute from scratch.
	template <typename Scalar>
	ProbabilityPolynomial<Scalar> update_trial(const ProbabilityPolynomial<Scalar> &f, const BernoulliTrial<Scalar> &old_trial,
											   const BernoulliTrial<Scalar> &new_trial)
	{
		if (f.is_truncated())
			throw ValidationError("update_trial needs a complete expansion, not a truncated prefix");
		if (f.size() < 2)
			throw ValidationError("update_trial needs an expansion over at least one trial");

		const Coefficients<Scalar> quotient = detail::divide_by_trial(f.coeffs(), old_trial.p());
		Coefficients<Scalar> factor(2);
		factor << new_trial.q(), new_trial.p();
		Coefficients<Scalar> out = detail::convolve_prefix(quotient, factor, quotient.size() + 1);
		out /= out.sum();
		return ProbabilityPolynomial<Scalar>(std::move(out));
	}

	template <typename Scalar>
	ProbabilityPolynomial<Scalar> update_trial(const ProbabilityPolynomial<Scalar> &f, Scalar p_old, Scalar p_new)
	{
		return update_trial(f, BernoulliTrial<Scalar>(p_old), BernoulliTrial<Scalar>(p_new));
	}
} // namespace probcount
