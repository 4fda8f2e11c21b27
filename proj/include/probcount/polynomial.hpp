#pragma once

#include "errors.hpp"

#include <Eigen/Dense>

#include <optional>
#include <sstream>
#include <string>

namespace probcount
{
	using Index = Eigen::Index;

	template <typename Scalar>
	using Coefficients = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

	template <typename Scalar>
	using CoefficientGrid = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

	/// Probability mass must sum to one within this tolerance.
	inline constexpr double kNormalizationTolerance = 1e-9;

	namespace detail
	{
		template <typename Derived>
		void check_nonnegative(const Eigen::DenseBase<Derived> &values, const char *what)
		{
			for (Index i = 0; i < values.size(); ++i)
			{
				const auto v = values.derived().data()[i];
				if (!(v >= 0))
					throw ValidationError(std::string(what) + ": negative or NaN entry at position " + std::to_string(i));
			}
		}

		template <typename Derived>
		void check_normalized(const Eigen::DenseBase<Derived> &values, const char *what)
		{
			const double total = double(values.sum());
			if (std::abs(total - 1.0) > kNormalizationTolerance)
				throw ValidationError(std::string(what) + ": probabilities sum to " + std::to_string(total) + ", expected 1");
		}
	} // namespace detail

	/// Dense probability-generating polynomial. coeffs()[i] is the coefficient of x^i.
	///
	/// A polynomial either carries the complete distribution (coefficients sum to one) or,
	/// when `truncation_bound()` is set to K, only the prefix of exponents {0..K-1}.
	template <typename Scalar = double>
	class ProbabilityPolynomial
	{
	public:
		using Vector = Coefficients<Scalar>;

		/// The constant polynomial 1 (the empty product).
		ProbabilityPolynomial() : coeffs_(Vector::Ones(1)) {}

		explicit ProbabilityPolynomial(Vector coeffs, std::optional<Index> truncation_bound = std::nullopt)
			: coeffs_(std::move(coeffs)), bound_(truncation_bound)
		{
			if (coeffs_.size() == 0)
				throw ValidationError("probability polynomial needs at least one coefficient");
			detail::check_nonnegative(coeffs_, "probability polynomial");
			if (bound_)
			{
				if (*bound_ < 1)
					throw ValidationError("truncation bound must be at least 1");
				if (coeffs_.size() > *bound_)
					throw ValidationError("truncated polynomial holds more coefficients than its bound");
				if (double(coeffs_.sum()) > 1.0 + kNormalizationTolerance)
					throw ValidationError("truncated polynomial carries more than unit mass");
			}
			else
			{
				detail::check_normalized(coeffs_, "probability polynomial");
			}
		}

		const Vector &coeffs() const { return coeffs_; }
		Scalar operator[](Index i) const { return coeffs_[i]; }
		Index size() const { return coeffs_.size(); }
		Index degree() const { return coeffs_.size() - 1; }

		bool is_truncated() const { return bound_.has_value(); }
		std::optional<Index> truncation_bound() const { return bound_; }

	private:
		Vector coeffs_;
		std::optional<Index> bound_;
	};

	/// Distribution of a count. pmf()[k] is P(count = offset() + k); `offset` records
	/// trials that were certain to succeed and were folded out before expansion.
	template <typename Scalar = double>
	class CountDistribution
	{
	public:
		using Vector = Coefficients<Scalar>;

		CountDistribution() : pmf_(Vector::Ones(1)) {}

		explicit CountDistribution(Vector pmf, Index offset = 0) : pmf_(std::move(pmf)), offset_(offset)
		{
			if (pmf_.size() == 0)
				throw ValidationError("count distribution needs at least one entry");
			if (offset_ < 0)
				throw ValidationError("count distribution offset must be nonnegative");
			detail::check_nonnegative(pmf_, "count distribution");
			detail::check_normalized(pmf_, "count distribution");
		}

		const Vector &pmf() const { return pmf_; }
		Scalar operator[](Index k) const { return pmf_[k]; }
		Index size() const { return pmf_.size(); }
		Index offset() const { return offset_; }

		/// P(total count = n), zero outside the support.
		Scalar probability_of_total(Index n) const
		{
			const Index k = n - offset_;
			return (k < 0 || k >= pmf_.size()) ? Scalar(0) : pmf_[k];
		}

		Scalar mean() const
		{
			const auto k = Vector::LinSpaced(pmf_.size(), Scalar(0), Scalar(pmf_.size() - 1));
			return Scalar(offset_) + pmf_.dot(k);
		}

		Scalar variance() const
		{
			const auto k = Vector::LinSpaced(pmf_.size(), Scalar(0), Scalar(pmf_.size() - 1));
			const Scalar m = pmf_.dot(k);
			return pmf_.dot(k.cwiseProduct(k)) - m * m;
		}

	private:
		Vector pmf_;
		Index offset_ = 0;
	};

	/// Inclusive bounds on how many objects satisfy a predicate given `certain` definite hits
	/// and `undecided` objects in the unknown state.
	struct CountBounds
	{
		Index at_least;
		Index at_most;
	};

	/// Joint pmf over (certain count, undecided count). grid()(i, j) is the coefficient of x^i y^j.
	template <typename Scalar = double>
	class BivariatePmf
	{
	public:
		using Grid = CoefficientGrid<Scalar>;
		using Vector = Coefficients<Scalar>;

		explicit BivariatePmf(Grid grid) : grid_(std::move(grid))
		{
			if (grid_.size() == 0)
				throw ValidationError("bivariate pmf needs at least one cell");
			detail::check_nonnegative(grid_, "bivariate pmf");
			detail::check_normalized(grid_, "bivariate pmf");
		}

		const Grid &grid() const { return grid_; }
		Scalar operator()(Index certain, Index undecided) const { return grid_(certain, undecided); }
		Index rows() const { return grid_.rows(); }
		Index cols() const { return grid_.cols(); }

		/// Substitutes y := 1: distribution of the number of definite hits.
		Vector certain_marginal() const { return grid_.rowwise().sum(); }

		/// Substitutes y := x: distribution of definite plus undecided objects.
		Vector possible_marginal() const
		{
			Vector out = Vector::Zero(grid_.rows() + grid_.cols() - 1);
			for (Index j = 0; j < grid_.cols(); ++j)
				for (Index i = 0; i < grid_.rows(); ++i)
					out[i + j] += grid_(i, j);
			return out;
		}

		static CountBounds bounds(Index certain, Index undecided) { return {certain, certain + undecided}; }

		/// Human-readable meaning of the monomial c x^i y^j.
		std::string describe(Index certain, Index undecided) const
		{
			const CountBounds b = bounds(certain, undecided);
			std::ostringstream os;
			os << "at least " << b.at_least << ", at most " << b.at_most << " objects satisfy, probability "
			   << grid_(certain, undecided);
			return os.str();
		}

	private:
		Grid grid_;
	};
} // namespace probcount
