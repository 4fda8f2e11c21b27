#pragma once

#include "errors.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace probcount
{
	/// Single yes/no trial; `p` is the probability of success (e.g. object inside the query region).
	template <typename Scalar = double>
	class BernoulliTrial
	{
	public:
		explicit BernoulliTrial(Scalar p) : p_(p)
		{
			if (!(p >= Scalar(0) && p <= Scalar(1)))
				throw ValidationError("Bernoulli probability must lie in [0, 1], got " + std::to_string(double(p)));
		}

		Scalar p() const { return p_; }
		Scalar q() const { return Scalar(1) - p_; }

	private:
		Scalar p_;
	};

	/// Trial with three outcomes: satisfies (p), does not satisfy (p_bar), undecided (the rest).
	template <typename Scalar = double>
	class TrinaryTrial
	{
	public:
		TrinaryTrial(Scalar p, Scalar p_bar) : p_(p), p_bar_(p_bar)
		{
			// 1e-12 slack so that complementary pairs like (0.7, 0.3) are accepted.
			if (!(p >= Scalar(0) && p_bar >= Scalar(0) && p + p_bar <= Scalar(1) + Scalar(1e-12)))
				throw ValidationError("trinary trial needs p >= 0, p_bar >= 0, p + p_bar <= 1; got p="
									  + std::to_string(double(p)) + " p_bar=" + std::to_string(double(p_bar)));
		}

		Scalar p() const { return p_; }
		Scalar p_bar() const { return p_bar_; }
		Scalar unknown() const
		{
			const Scalar u = Scalar(1) - p_ - p_bar_;
			return u < Scalar(0) ? Scalar(0) : u;
		}

	private:
		Scalar p_;
		Scalar p_bar_;
	};

	template <typename Scalar = double>
	std::vector<BernoulliTrial<Scalar>> make_trials(const std::vector<Scalar> &probabilities)
	{
		std::vector<BernoulliTrial<Scalar>> trials;
		trials.reserve(probabilities.size());
		for (Scalar p : probabilities)
			trials.emplace_back(p);
		return trials;
	}
} // namespace probcount
