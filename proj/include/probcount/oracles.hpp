#pragma once

#include "polynomial.hpp"
#include "trial.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace probcount::oracles
{
	/// Largest trial count the 2^N world enumeration accepts.
	inline constexpr std::size_t kMaxBinaryWorldTrials = 24;
	/// Largest trial count the 3^N world enumeration accepts.
	inline constexpr std::size_t kMaxTrinaryWorldTrials = 15;

	/// Enumerates every success/failure vector in lexicographic order (trial 0 is the most
	/// significant bit of the world index) and adds each world's probability to the bucket
	/// of its success count.
	template <typename Scalar>
	CountDistribution<Scalar> brute_force_pmf(std::span<const BernoulliTrial<Scalar>> trials)
	{
		const std::size_t n = trials.size();
		if (n > kMaxBinaryWorldTrials)
			throw ValidationError("brute_force_pmf: " + std::to_string(n) + " trials exceeds the enumeration bound of "
								  + std::to_string(kMaxBinaryWorldTrials));
		Coefficients<Scalar> pmf = Coefficients<Scalar>::Zero(Index(n) + 1);
		const std::uint64_t worlds = std::uint64_t(1) << n;
		for (std::uint64_t w = 0; w < worlds; ++w)
		{
			Scalar prob(1);
			Index successes = 0;
			for (std::size_t i = 0; i < n; ++i)
			{
				if ((w >> (n - 1 - i)) & 1u)
				{
					prob *= trials[i].p();
					++successes;
				}
				else
				{
					prob *= trials[i].q();
				}
			}
			pmf[successes] += prob;
		}
		return CountDistribution<Scalar>(std::move(pmf));
	}

	template <typename Scalar>
	CountDistribution<Scalar> brute_force_pmf(const std::vector<BernoulliTrial<Scalar>> &trials)
	{
		return brute_force_pmf(std::span<const BernoulliTrial<Scalar>>(trials));
	}

	/// Textbook Poisson-binomial dynamic program:
	/// P_i(j) = p_i P_{i-1}(j-1) + (1 - p_i) P_{i-1}(j), with two rolling rows.
	template <typename Scalar>
	CountDistribution<Scalar> poisson_binomial_recurrence(std::span<const BernoulliTrial<Scalar>> trials)
	{
		const std::size_t n = trials.size();
		std::vector<Scalar> prev(n + 1, Scalar(0)), next(n + 1, Scalar(0));
		prev[0] = Scalar(1);
		for (std::size_t i = 1; i <= n; ++i)
		{
			const Scalar p = trials[i - 1].p();
			next[0] = (Scalar(1) - p) * prev[0];
			for (std::size_t j = 1; j <= i; ++j)
				next[j] = p * prev[j - 1] + (Scalar(1) - p) * prev[j];
			std::swap(prev, next);
		}
		Coefficients<Scalar> pmf(Index(n) + 1);
		for (std::size_t j = 0; j <= n; ++j)
			pmf[Index(j)] = prev[j];
		return CountDistribution<Scalar>(std::move(pmf));
	}

	template <typename Scalar>
	CountDistribution<Scalar> poisson_binomial_recurrence(const std::vector<BernoulliTrial<Scalar>> &trials)
	{
		return poisson_binomial_recurrence(std::span<const BernoulliTrial<Scalar>>(trials));
	}

	/// Enumerates all 3^N outcome assignments (0 = miss, 1 = satisfy, 2 = undecided) in
	/// lexicographic order; trial 0 is the most significant ternary digit.
	template <typename Scalar>
	BivariatePmf<Scalar> brute_force_trinary(std::span<const TrinaryTrial<Scalar>> trials)
	{
		const std::size_t n = trials.size();
		if (n > kMaxTrinaryWorldTrials)
			throw ValidationError("brute_force_trinary: " + std::to_string(n) + " trials exceeds the enumeration bound of "
								  + std::to_string(kMaxTrinaryWorldTrials));
		CoefficientGrid<Scalar> grid = CoefficientGrid<Scalar>::Zero(Index(n) + 1, Index(n) + 1);
		std::uint64_t worlds = 1;
		for (std::size_t i = 0; i < n; ++i)
			worlds *= 3;
		for (std::uint64_t w = 0; w < worlds; ++w)
		{
			Scalar prob(1);
			Index hits = 0, undecided = 0;
			std::uint64_t digits = w;
			for (std::size_t k = n; k-- > 0; digits /= 3)
			{
				const auto &t = trials[k];
				switch (digits % 3)
				{
				case 0: prob *= t.p_bar(); break;
				case 1: prob *= t.p(); ++hits; break;
				default: prob *= t.unknown(); ++undecided; break;
				}
			}
			grid(hits, undecided) += prob;
		}
		return BivariatePmf<Scalar>(std::move(grid));
	}

	template <typename Scalar>
	BivariatePmf<Scalar> brute_force_trinary(const std::vector<TrinaryTrial<Scalar>> &trials)
	{
		return brute_force_trinary(std::span<const TrinaryTrial<Scalar>>(trials));
	}
} // namespace probcount::oracles
