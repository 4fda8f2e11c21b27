#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "probcount/update.hpp"
#include "support/random_trials.hpp"

using namespace probcount;
using probcount::testing::max_abs_diff;
using probcount::testing::random_trials;
using Vec = Coefficients<double>;

namespace
{
	ProbabilityPolynomial<double> full(const std::vector<double> &p) { return ProbabilityPolynomial<double>(expand(make_trials(p)).pmf()); }
} // namespace

TEST_CASE("update examples")
{
	const auto f = full({0.3, 0.2, 0.9});
	CHECK(max_abs_diff(update_trial(f, 0.9, 0.5).coeffs(), full({0.3, 0.2, 0.5}).coeffs()) <= 1e-8);
	CHECK(max_abs_diff(update_trial(f, 0.2, 0.2).coeffs(), f.coeffs()) <= 1e-12);
	CHECK(max_abs_diff(update_trial(f, 0.9, 0.9).coeffs(), f.coeffs()) <= 1e-12);

	const auto dropped = update_trial(f, 0.2, 0.0);
	CHECK(dropped.size() == 4);
	CHECK(max_abs_diff(dropped.coeffs(), full({0.3, 0.0, 0.9}).coeffs()) <= 1e-8);
}

TEST_CASE("update against recomputation")
{
	std::mt19937_64 rng(17);
	std::uniform_real_distribution<double> u(0.0, 1.0);
	for (int rep = 0; rep < 50; ++rep)
	{
		auto t = random_trials(rng, 1 + rep * 2);
		std::vector<double> p;
		for (const auto &x : t)
			p.push_back(x.p());
		const std::size_t j = std::size_t(rep) % p.size();
		const double p_old = p[j];
		const double p_new = u(rng);
		const auto f = full(p);
		p[j] = p_new;
		CHECK(max_abs_diff(update_trial(f, p_old, p_new).coeffs(), full(p).coeffs()) <= 1e-8);
	}
}

TEST_CASE("certain and impossible trials")
{
	// p_old = 1: division by x is a left shift
	const auto f = full({1.0, 0.3, 0.2});
	CHECK(max_abs_diff(update_trial(f, 1.0, 0.4).coeffs(), full({0.4, 0.3, 0.2}).coeffs()) <= 1e-12);
	// ... and needs a vanishing constant term
	CHECK_THROWS_AS(update_trial(full({0.3, 0.2}), 1.0, 0.5), NumericBreakdown);

	// p_old = 0: divisor is 1, the spare top coefficient must be empty
	const auto g = full({0.0, 0.3, 0.2});
	CHECK(max_abs_diff(update_trial(g, 0.0, 0.6).coeffs(), full({0.6, 0.3, 0.2}).coeffs()) <= 1e-12);
	CHECK_THROWS_AS(update_trial(full({0.3, 0.2}), 0.0, 0.5), NumericBreakdown);
}

TEST_CASE("update rejects bad inputs")
{
	CHECK_THROWS_AS(update_trial(ProbabilityPolynomial<double>(), 0.5, 0.5), ValidationError);
	const ProbabilityPolynomial<double> prefix((Vec(1) << 0.5).finished(), 1);
	CHECK_THROWS_AS(update_trial(prefix, 0.5, 0.5), ValidationError);
	// F was not built from a trial with p = 0.5 → the quotient goes negative
	CHECK_THROWS_AS(update_trial(full({0.9, 0.9, 0.9}), 0.05, 0.5), NumericBreakdown);
}
