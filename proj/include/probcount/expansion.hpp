#pragma once

#include "polynomial.hpp"
#include "trial.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace probcount
{
	/// p x + (1 - p); collapses to the constant 1 when the trial cannot succeed.
	template <typename Scalar>
	ProbabilityPolynomial<Scalar> poly_from_trial(const BernoulliTrial<Scalar> &trial)
	{
		using Vector = Coefficients<Scalar>;
		if (trial.p() == Scalar(0))
			return ProbabilityPolynomial<Scalar>(Vector::Ones(1));
		Vector c(2);
		c << trial.q(), trial.p();
		return ProbabilityPolynomial<Scalar>(std::move(c));
	}

	namespace detail
	{
		// Coefficient j of the product only reads a[0..j] and b[0..j], so restricting the
		// output range yields an exact prefix of the full product.
		template <typename Scalar>
		Coefficients<Scalar> convolve_prefix(const Coefficients<Scalar> &a, const Coefficients<Scalar> &b, Index keep)
		{
			const Index full = a.size() + b.size() - 1;
			const Index n = std::min(full, keep);
			Coefficients<Scalar> out = Coefficients<Scalar>::Zero(n);
			for (Index i = 0; i < a.size() && i < n; ++i)
			{
				const Scalar ai = a[i];
				const Index jmax = std::min(b.size(), n - i);
				for (Index j = 0; j < jmax; ++j)
					out[i + j] += ai * b[j];
			}
			return out;
		}

		// Multiplies f (holding `len` live coefficients, zero beyond) by each trial polynomial,
		// keeping at most `bound` coefficients. Returns the new live length.
		template <typename Scalar>
		Index expand_in_place(Scalar *f, Index len, Index bound, std::span<const BernoulliTrial<Scalar>> trials)
		{
			for (const auto &t : trials)
			{
				const Scalar p = t.p();
				const Scalar q = t.q();
				len = std::min(len + 1, bound);
				for (Index j = len - 1; j > 0; --j)
					f[j] = q * f[j] + p * f[j - 1];
				f[0] = q * f[0];
			}
			return len;
		}
	} // namespace detail

	/// Full product of two complete polynomials.
	template <typename Scalar>
	ProbabilityPolynomial<Scalar> multiply(const ProbabilityPolynomial<Scalar> &a, const ProbabilityPolynomial<Scalar> &b)
	{
		if (a.is_truncated() || b.is_truncated())
			throw ValidationError("multiply expects complete polynomials; use multiply_truncated");
		return ProbabilityPolynomial<Scalar>(detail::convolve_prefix(a.coeffs(), b.coeffs(), a.size() + b.size() - 1));
	}

	/// Product with every exponent >= `bound` discarded. The result is truncated at the
	/// tightest of `bound` and the operands' own bounds.
	template <typename Scalar>
	ProbabilityPolynomial<Scalar> multiply_truncated(const ProbabilityPolynomial<Scalar> &a,
													 const ProbabilityPolynomial<Scalar> &b, Index bound)
	{
		if (bound < 1)
			throw ValidationError("truncation bound must be at least 1");
		Index k = bound;
		if (a.truncation_bound())
			k = std::min(k, *a.truncation_bound());
		if (b.truncation_bound())
			k = std::min(k, *b.truncation_bound());
		return ProbabilityPolynomial<Scalar>(detail::convolve_prefix(a.coeffs(), b.coeffs(), k), k);
	}

	/// Distribution of the number of successes among independent, non-identical trials.
	/// Iterates F^k = F^{k-1} (p_k x + 1 - p_k) from F^0 = 1; the pmf has |trials| + 1 entries.
	template <typename Scalar>
	CountDistribution<Scalar> expand(std::span<const BernoulliTrial<Scalar>> trials)
	{
		const Index n = Index(trials.size()) + 1;
		Coefficients<Scalar> f = Coefficients<Scalar>::Zero(n);
		f[0] = Scalar(1);
		detail::expand_in_place(f.data(), 1, n, trials);
		return CountDistribution<Scalar>(std::move(f));
	}

	template <typename Scalar>
	CountDistribution<Scalar> expand(const std::vector<BernoulliTrial<Scalar>> &trials)
	{
		return expand(std::span<const BernoulliTrial<Scalar>>(trials));
	}

	/// First `bound` coefficients of expand(trials) in O(bound * N). The arithmetic per
	/// coefficient is identical to expand(), so the prefix matches bit for bit.
	template <typename Scalar>
	ProbabilityPolynomial<Scalar> expand_truncated(std::span<const BernoulliTrial<Scalar>> trials, Index bound)
	{
		if (bound < 1)
			throw ValidationError("truncation bound must be at least 1");
		const Index cap = std::min<Index>(bound, Index(trials.size()) + 1);
		Coefficients<Scalar> f = Coefficients<Scalar>::Zero(cap);
		f[0] = Scalar(1);
		detail::expand_in_place(f.data(), 1, cap, trials);
		return ProbabilityPolynomial<Scalar>(std::move(f), bound);
	}

	template <typename Scalar>
	ProbabilityPolynomial<Scalar> expand_truncated(const std::vector<BernoulliTrial<Scalar>> &trials, Index bound)
	{
		return expand_truncated(std::span<const BernoulliTrial<Scalar>>(trials), bound);
	}

	/// P(exactly rank - 1 successes), i.e. the coefficient c_{rank-1}.
	template <typename Scalar>
	Scalar rank_coefficient(std::span<const BernoulliTrial<Scalar>> trials, Index rank)
	{
		if (rank < 1 || rank > Index(trials.size()) + 1)
			throw ValidationError("rank " + std::to_string(rank) + " outside [1, " + std::to_string(trials.size() + 1) + "]");
		return expand_truncated(trials, rank)[rank - 1];
	}

	template <typename Scalar>
	Scalar rank_coefficient(const std::vector<BernoulliTrial<Scalar>> &trials, Index rank)
	{
		return rank_coefficient(std::span<const BernoulliTrial<Scalar>>(trials), rank);
	}

	/// Trials split into certain successes (counted) and genuinely uncertain ones;
	/// trials that can never succeed are dropped.
	template <typename Scalar>
	struct PrunedTrials
	{
		std::vector<BernoulliTrial<Scalar>> uncertain;
		Index certain = 0;
	};

	template <typename Scalar>
	PrunedTrials<Scalar> prune_trials(std::span<const BernoulliTrial<Scalar>> trials)
	{
		PrunedTrials<Scalar> out;
		for (const auto &t : trials)
		{
			if (t.p() == Scalar(0))
				continue;
			if (t.p() == Scalar(1))
				++out.certain;
			else
				out.uncertain.push_back(t);
		}
		return out;
	}

	/// expand() after pruning: true misses are dropped and true hits go into the offset.
	template <typename Scalar>
	CountDistribution<Scalar> expand_pruned(std::span<const BernoulliTrial<Scalar>> trials)
	{
		const auto pruned = prune_trials(trials);
		const auto dist = expand(std::span<const BernoulliTrial<Scalar>>(pruned.uncertain));
		return CountDistribution<Scalar>(dist.pmf(), pruned.certain);
	}

	template <typename Scalar>
	CountDistribution<Scalar> expand_pruned(const std::vector<BernoulliTrial<Scalar>> &trials)
	{
		return expand_pruned(std::span<const BernoulliTrial<Scalar>>(trials));
	}
} // namespace probcount
