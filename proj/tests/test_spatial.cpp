#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "probcount/errors.hpp"
#include "probcount/spatial.hpp"
#include "support/micro_db.hpp"
#include "support/world_enumeration.hpp"

using namespace probcount;
using probcount::testing::enumerate_worlds;
using probcount::testing::random_micro_db;

namespace
{
	UncertainObject single(const std::string &id, double x, double y, double p = 1.0)
	{
		return UncertainObject(id, {{Point(x, y), p}});
	}

	// Objects A..F around a circle of radius 5 at the origin, with inside-probabilities
	// 1, 0.3, 0.2, 0.9, 0, 0.
	UncertainDatabase six_object_scene()
	{
		UncertainDatabase db;
		db.add(UncertainObject("A", {{Point(0, 0), 0.5}, {Point(1, 1), 0.5}}));
		db.add(UncertainObject("B", {{Point(1, 0), 0.1}, {Point(2, 0), 0.2}, {Point(8, 0), 0.7}}));
		db.add(UncertainObject("C", {{Point(0, 3), 0.2}, {Point(0, 9), 0.8}}));
		db.add(UncertainObject("D", {{Point(-3, 0), 0.9}, {Point(-9, 0), 0.1}}));
		db.add(UncertainObject("E", {{Point(10, 10), 1.0}}));
		db.add(UncertainObject("F", {{Point(-10, 10), 0.6}, {Point(-12, 10), 0.4}}));
		return db;
	}
} // namespace

TEST_CASE("object and region validation")
{
	CHECK_THROWS_AS(UncertainObject("x", {}), ValidationError);
	CHECK_THROWS_AS(UncertainObject("", {{Point(0, 0), 1.0}}), ValidationError);
	CHECK_THROWS_AS(UncertainObject("x", {{Point(0, 0), 0.0}}), ValidationError);
	CHECK_THROWS_AS(UncertainObject("x", {{Point(0, 0), 0.7}, {Point(1, 0), 0.5}}), ValidationError);
	CHECK_THROWS_AS(UncertainObject("x", {{Point(NAN, 0), 0.5}}), ValidationError);
	CHECK(UncertainObject("x", {{Point(0, 0), 0.4}, {Point(0, 0), 0.4}}).existence_probability() == doctest::Approx(0.8));

	CHECK_THROWS_AS(QueryRegion::circle(Point(0, 0), 0.0), ValidationError);
	CHECK_THROWS_AS(QueryRegion::rect(Point(1, 0), Point(0, 1)), ValidationError);

	UncertainDatabase db;
	db.add(single("a", 0, 0));
	CHECK_THROWS_AS(db.add(single("a", 1, 1)), ValidationError);
	CHECK_THROWS_AS(db.at("zz"), UnknownObjectError);
}

TEST_CASE("closed regions")
{
	const auto c = QueryRegion::circle(Point(0, 0), 5.0);
	CHECK(c.contains(Point(3, 4)));
	CHECK_FALSE(c.contains(Point(3, 4.0001)));
	const auto r = QueryRegion::rect(Point(0, 0), Point(2, 1));
	CHECK(r.contains(Point(2, 1)));
	CHECK(r.contains(Point(0, 0.5)));
	CHECK_FALSE(r.contains(Point(2.1, 0.5)));
}

TEST_CASE("inside_probability")
{
	const auto region = QueryRegion::circle(Point(0, 0), 5.0);
	const auto db = six_object_scene();
	CHECK(inside_probability(db.at("A"), region) == 1.0);
	CHECK(inside_probability(db.at("B"), region) == doctest::Approx(0.3).epsilon(1e-15));
	CHECK(inside_probability(db.at("E"), region) == 0.0);
}

TEST_CASE("closer_than_probability")
{
	const UncertainObject o("o", {{Point(1, 0), 0.4}, {Point(3, 0), 0.6}});
	CHECK(closer_than_probability(o, Point(0, 0), 0.0) == 0.0);
	CHECK(closer_than_probability(o, Point(0, 0), 2.0) == 0.4);
	CHECK(closer_than_probability(o, Point(0, 0), 1e9) == 1.0);
	// strict: an instance at exactly the distance is not closer
	CHECK(closer_than_probability(o, Point(0, 0), 3.0) == 0.4);
	CHECK_THROWS_AS(closer_than_probability(o, Point(0, 0), -1.0), ValidationError);
}

TEST_CASE("range_count_query on the six-object scene")
{
	const auto d = range_count_query(six_object_scene(), QueryRegion::circle(Point(0, 0), 5.0));
	CHECK(d.offset() == 1);
	REQUIRE(d.size() == 4);
	CHECK(d.probability_of_total(1) == doctest::Approx(0.7 * 0.8 * 0.1).epsilon(1e-12));
	CHECK(d[1] == doctest::Approx(0.542).epsilon(1e-12));

	const auto empty = range_count_query(UncertainDatabase{}, QueryRegion::circle(Point(0, 0), 1.0));
	CHECK(empty.offset() == 0);
	CHECK(empty.size() == 1);

	UncertainDatabase all_in({single("a", 0, 0), single("b", 0, 1)});
	const auto certain = range_count_query(all_in, QueryRegion::circle(Point(0, 0), 2.0));
	CHECK(certain.offset() == 2);
	CHECK(certain.size() == 1);
}

TEST_CASE("pruning neutrality")
{
	const auto region = QueryRegion::circle(Point(0, 0), 5.0);
	auto db = six_object_scene();
	const auto base = range_count_query(db, region);

	db.add(single("far", 100, 100));
	const auto with_miss = range_count_query(db, region);
	CHECK(with_miss.offset() == base.offset());
	CHECK(with_miss.pmf() == base.pmf());

	db.add(single("hit", 0, 0));
	const auto with_hit = range_count_query(db, region);
	CHECK(with_hit.offset() == base.offset() + 1);
	CHECK(with_hit.pmf() == base.pmf());
}

TEST_CASE("growing the radius never lowers the mean count")
{
	std::mt19937_64 rng(8);
	for (int rep = 0; rep < 20; ++rep)
	{
		const auto db = random_micro_db(rng, 8, 4);
		double prev = -1.0;
		for (double r = 0.5; r < 8.0; r += 0.5)
		{
			const double m = range_count_query(db, QueryRegion::circle(Point(0, 0), r)).mean();
			CHECK(m >= prev - 1e-12);
			prev = m;
		}
	}
}

TEST_CASE("knn and rank trivial cases")
{
	UncertainDatabase solo({single("A", 1, 1)});
	CHECK(knn_membership_probability(solo, Point(0, 0), "A", 1) == 1.0);
	CHECK(distance_rank_probability(solo, Point(0, 0), "A", 1) == 1.0);

	UncertainDatabase partial({UncertainObject("A", {{Point(1, 1), 0.3}, {Point(2, 2), 0.4}})});
	CHECK(distance_rank_probability(partial, Point(0, 0), "A", 1) == doctest::Approx(0.7));

	UncertainDatabase pair({single("A", 3, 0), single("B", 1, 0)});
	CHECK(knn_membership_probability(pair, Point(0, 0), "A", 1) == 0.0);
	CHECK(distance_rank_probability(pair, Point(0, 0), "A", 1) == 0.0);
	CHECK(distance_rank_probability(pair, Point(0, 0), "A", 2) == 1.0);
	CHECK(knn_membership_probability(pair, Point(0, 0), "A", 2) == 1.0);

	// ties are not "closer"
	UncertainDatabase tie({single("A", 1, 0), single("B", 0, 1)});
	CHECK(distance_rank_probability(tie, Point(0, 0), "A", 1) == 1.0);

	CHECK_THROWS_AS(knn_membership_probability(pair, Point(0, 0), "Z", 1), UnknownObjectError);
	CHECK_THROWS_AS(knn_membership_probability(pair, Point(0, 0), "A", 0), ValidationError);
	CHECK_THROWS_AS(distance_rank_probability(pair, Point(0, 0), "A", 3), ValidationError);
	CHECK_THROWS_AS(distance_rank_probability(pair, Point(0, 0), "A", 0), ValidationError);
}

TEST_CASE("evaluators match possible-worlds enumeration")
{
	std::mt19937_64 rng(12345);
	for (int rep = 0; rep < 40; ++rep)
	{
		const auto db = random_micro_db(rng, 4, 3);
		std::uniform_int_distribution<std::size_t> pick(0, db.size() - 1);
		const std::size_t cand = pick(rng);
		const std::string &id = db.objects()[cand].id();
		const Point q(0.5, -0.5);
		const auto region = QueryRegion::circle(q, 3.0);
		const long k = 2;
		const auto worlds = enumerate_worlds(db, region, q, cand, k);

		const auto d = range_count_query(db, region);
		for (std::size_t n = 0; n <= db.size(); ++n)
			CHECK(std::abs(d.probability_of_total(Index(n)) - worlds.range_count[n]) <= 1e-10);

		const double knn = knn_membership_probability(db, q, id, k);
		CHECK(std::abs(knn - worlds.knn) <= 1e-10);

		double rank_sum = 0.0;
		for (Index r = 1; r <= Index(db.size()); ++r)
		{
			const double pr = distance_rank_probability(db, q, id, r);
			CHECK(std::abs(pr - worlds.rank[std::size_t(r)]) <= 1e-10);
			if (r <= k)
				rank_sum += pr;
		}
		CHECK(std::abs(rank_sum - knn) <= 1e-9);
	}
}

TEST_CASE("ranks of a certain candidate sum to one")
{
	UncertainDatabase db;
	db.add(UncertainObject("c", {{Point(1, 0), 0.5}, {Point(0, 2), 0.5}}));
	db.add(UncertainObject("x", {{Point(0.5, 0), 0.3}, {Point(3, 0), 0.7}}));
	db.add(UncertainObject("y", {{Point(-1.5, 0), 0.6}, {Point(0, -0.2), 0.4}}));
	double total = 0.0;
	for (Index r = 1; r <= 3; ++r)
		total += distance_rank_probability(db, Point(0, 0), "c", r);
	CHECK(std::abs(total - 1.0) <= 1e-9);
}
