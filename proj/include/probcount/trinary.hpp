#pragma once

#include "polynomial.hpp"
#include "trial.hpp"

#include <span>
#include <vector>

namespace probcount
{
	/// Expands prod_i (p_i x + u_i y + p_bar_i) where u_i = 1 - p_i - p_bar_i is the
	/// undecided mass. Cell (i, j) is the probability that exactly i objects satisfy the
	/// predicate for certain and j more are undecided. The grid is (N+1) x (N+1) and
	/// every cell with i + j > N is zero.
	template <typename Scalar>
	BivariatePmf<Scalar> expand_trinary(std::span<const TrinaryTrial<Scalar>> trials)
	{
		const Index n = Index(trials.size());
		CoefficientGrid<Scalar> g = CoefficientGrid<Scalar>::Zero(n + 1, n + 1);
		g(0, 0) = Scalar(1);
		Index done = 0;
		for (const auto &t : trials)
		{
			const Scalar p = t.p(), u = t.unknown(), miss = t.p_bar();
			++done;
			// Walk the triangle i + j <= done from the far corner so that (i-1, j) and
			// (i, j-1) still hold the previous iteration's values when read.
			for (Index i = done; i >= 0; --i)
			{
				for (Index j = done - i; j >= 0; --j)
				{
					Scalar v = miss * g(i, j);
					if (i > 0)
						v += p * g(i - 1, j);
					if (j > 0)
						v += u * g(i, j - 1);
					g(i, j) = v;
				}
			}
		}
		return BivariatePmf<Scalar>(std::move(g));
	}

	template <typename Scalar>
	BivariatePmf<Scalar> expand_trinary(const std::vector<TrinaryTrial<Scalar>> &trials)
	{
		return expand_trinary(std::span<const TrinaryTrial<Scalar>>(trials));
	}
} // namespace probcount
