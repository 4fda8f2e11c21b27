#pragma once

#include "expansion.hpp"

#include <unsupported/Eigen/FFT>

#include <complex>
#include <vector>

namespace probcount
{
	/// Leaf size of the divide-and-conquer product tree; leaves are expanded directly.
	inline constexpr Index kFftLeafTrials = 32;
	/// Products with at most this many output coefficients are convolved directly.
	inline constexpr Index kFftMinProductLength = 64;
	/// Negative FFT residue down to this magnitude is treated as roundoff and clamped to zero.
	inline constexpr double kFftNegativeResidue = 1e-9;

	namespace detail
	{
		template <typename Scalar>
		void clamp_fft_residue(Coefficients<Scalar> &c)
		{
			for (Index i = 0; i < c.size(); ++i)
			{
				if (c[i] >= Scalar(0))
					continue;
				if (c[i] < Scalar(-kFftNegativeResidue))
					throw NumericBreakdown("FFT convolution produced coefficient " + std::to_string(double(c[i]))
										   + " at exponent " + std::to_string(i));
				c[i] = Scalar(0);
			}
		}

		template <typename Scalar>
		Coefficients<Scalar> fft_convolve(const Coefficients<Scalar> &a, const Coefficients<Scalar> &b)
		{
			using Complex = std::complex<Scalar>;
			const Index n = a.size() + b.size() - 1;
			Index m = 1;
			while (m < n)
				m <<= 1;

			std::vector<Complex> pa(m, Complex(0)), pb(m, Complex(0));
			for (Index i = 0; i < a.size(); ++i)
				pa[i] = a[i];
			for (Index i = 0; i < b.size(); ++i)
				pb[i] = b[i];

			Eigen::FFT<Scalar> fft;
			std::vector<Complex> fa, fb, prod;
			fft.fwd(fa, pa);
			fft.fwd(fb, pb);
			for (Index i = 0; i < m; ++i)
				fa[i] *= fb[i];
			fft.inv(prod, fa);

			Coefficients<Scalar> out(n);
			for (Index i = 0; i < n; ++i)
				out[i] = prod[i].real();
			clamp_fft_residue(out);
			return out;
		}

		template <typename Scalar>
		Coefficients<Scalar> product_tree(std::span<const BernoulliTrial<Scalar>> trials)
		{
			const Index n = Index(trials.size());
			if (n <= kFftLeafTrials)
			{
				Coefficients<Scalar> f = Coefficients<Scalar>::Zero(n + 1);
				f[0] = Scalar(1);
				expand_in_place(f.data(), 1, n + 1, trials);
				return f;
			}
			const std::size_t mid = trials.size() / 2;
			const auto left = product_tree(trials.first(mid));
			const auto right = product_tree(trials.subspan(mid));
			if (left.size() + right.size() - 1 > kFftMinProductLength)
				return fft_convolve(left, right);
			return convolve_prefix(left, right, left.size() + right.size() - 1);
		}
	} // namespace detail

	/// Same distribution as expand(), computed by splitting the trials into halves,
	/// expanding each recursively, and joining the halves with an FFT convolution.
	/// O(N log^2 N). Throws NumericBreakdown if the transform leaves non-negligible
	/// negative mass.
	template <typename Scalar>
	CountDistribution<Scalar> expand_fft(std::span<const BernoulliTrial<Scalar>> trials)
	{
		Coefficients<Scalar> f = detail::product_tree(trials);
		detail::clamp_fft_residue(f);
		f /= f.sum();
		return CountDistribution<Scalar>(std::move(f));
	}

	template <typename Scalar>
	CountDistribution<Scalar> expand_fft(const std::vector<BernoulliTrial<Scalar>> &trials)
	{
		return expand_fft(std::span<const BernoulliTrial<Scalar>>(trials));
	}
} // namespace probcount
