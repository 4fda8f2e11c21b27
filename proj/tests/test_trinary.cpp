#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "probcount/expansion.hpp"
#include "probcount/oracles.hpp"
#include "probcount/trinary.hpp"
#include "support/random_trials.hpp"

using namespace probcount;
using probcount::testing::max_abs_diff;
using probcount::testing::random_trinary;

TEST_CASE("single trinary trial")
{
	const auto g = expand_trinary(std::vector<TrinaryTrial<double>>{TrinaryTrial<double>(0.5, 0.3)});
	CHECK(g(1, 0) == 0.5);
	CHECK(g(0, 1) == doctest::Approx(0.2).epsilon(1e-15));
	CHECK(g(0, 0) == 0.3);
	CHECK(g(1, 1) == 0.0);
}

TEST_CASE("all-certain trinary trials")
{
	const std::vector<TrinaryTrial<double>> t(5, TrinaryTrial<double>(1.0, 0.0));
	const auto g = expand_trinary(t);
	CHECK(g(5, 0) == 1.0);
	CHECK(g.grid().sum() == 1.0);
}

TEST_CASE("expand_trinary matches 3^N enumeration")
{
	std::mt19937_64 rng(31);
	for (int rep = 0; rep < 20; ++rep)
	{
		const auto t = random_trinary(rng, 6);
		CHECK(max_abs_diff(expand_trinary(t).grid(), oracles::brute_force_trinary(t).grid()) <= 1e-12);
	}
}

TEST_CASE("trinary marginals and support")
{
	std::mt19937_64 rng(32);
	for (int rep = 0; rep < 20; ++rep)
	{
		const auto t = random_trinary(rng, 9);
		const auto g = expand_trinary(t);
		const Index n = Index(t.size());

		std::vector<BernoulliTrial<double>> hits, possible;
		for (const auto &x : t)
		{
			hits.emplace_back(x.p());
			possible.emplace_back(std::min(1.0, x.p() + x.unknown()));
		}
		CHECK(max_abs_diff(g.certain_marginal(), expand(hits).pmf()) <= 1e-12);
		CHECK(max_abs_diff(g.possible_marginal().head(n + 1), expand(possible).pmf()) <= 1e-12);

		for (Index i = 0; i <= n; ++i)
			for (Index j = 0; j <= n; ++j)
				if (i + j > n)
					CHECK(g(i, j) == 0.0);
	}
}
