#include "probcount/spatial.hpp"

#include "probcount/errors.hpp"
#include "probcount/expansion.hpp"

#include <algorithm>
#include <cmath>

namespace probcount
{
	namespace
	{
		bool finite(const Point &p) { return std::isfinite(p.x()) && std::isfinite(p.y()); }

		double snap(double p)
		{
			if (p >= 1.0 - kCertaintySnap)
				return 1.0;
			return p;
		}

		// Other objects' probabilities of being strictly closer to q than `distance`.
		std::vector<BernoulliTrial<double>> competitor_trials(const UncertainDatabase &db, std::size_t skip, const Point &q,
															  double distance)
		{
			std::vector<BernoulliTrial<double>> trials;
			trials.reserve(db.size());
			for (std::size_t i = 0; i < db.size(); ++i)
			{
				if (i == skip)
					continue;
				trials.emplace_back(snap(closer_than_probability(db.objects()[i], q, distance)));
			}
			return trials;
		}
	} // namespace

	UncertainObject::UncertainObject(std::string id, std::vector<Instance> instances)
		: id_(std::move(id)), instances_(std::move(instances))
	{
		if (id_.empty())
			throw ValidationError("uncertain object needs a non-empty id");
		if (instances_.empty())
			throw ValidationError("object '" + id_ + "': needs at least one instance");
		for (const auto &inst : instances_)
		{
			if (!finite(inst.location))
				throw ValidationError("object '" + id_ + "': instance location is not finite");
			if (!(inst.probability > 0.0 && inst.probability <= 1.0))
				throw ValidationError("object '" + id_ + "': instance probability " + std::to_string(inst.probability)
									  + " outside (0, 1]");
			existence_ += inst.probability;
		}
		if (existence_ > 1.0 + kNormalizationTolerance)
			throw ValidationError("object '" + id_ + "': instance probabilities sum to " + std::to_string(existence_));
		existence_ = std::min(existence_, 1.0);
	}

	bool operator==(const UncertainObject &a, const UncertainObject &b)
	{
		if (a.id_ != b.id_ || a.instances_.size() != b.instances_.size())
			return false;
		for (std::size_t i = 0; i < a.instances_.size(); ++i)
		{
			const auto &x = a.instances_[i];
			const auto &y = b.instances_[i];
			if (x.location != y.location || x.probability != y.probability)
				return false;
		}
		return true;
	}

	QueryRegion QueryRegion::circle(const Point &center, double radius)
	{
		if (!finite(center) || !(radius > 0.0) || !std::isfinite(radius))
			throw ValidationError("circle region needs a finite center and a positive radius");
		return QueryRegion(Circle{center, radius});
	}

	QueryRegion QueryRegion::rect(const Point &min, const Point &max)
	{
		if (!finite(min) || !finite(max) || (min.array() > max.array()).any())
			throw ValidationError("rectangle region needs finite corners with min <= max");
		return QueryRegion(Rect{min, max});
	}

	bool QueryRegion::contains(const Point &p) const
	{
		if (const auto *c = std::get_if<Circle>(&shape_))
			return (p - c->center).squaredNorm() <= c->radius * c->radius;
		const auto &r = std::get<Rect>(shape_);
		return (p.array() >= r.min.array()).all() && (p.array() <= r.max.array()).all();
	}

	UncertainDatabase::UncertainDatabase(std::vector<UncertainObject> objects)
	{
		objects_.reserve(objects.size());
		for (auto &o : objects)
			add(std::move(o));
	}

	void UncertainDatabase::add(UncertainObject object)
	{
		const auto [it, inserted] = index_.emplace(object.id(), objects_.size());
		if (!inserted)
			throw ValidationError("duplicate object id '" + object.id() + "'");
		objects_.push_back(std::move(object));
	}

	std::size_t UncertainDatabase::index_of(const std::string &id) const
	{
		const auto it = index_.find(id);
		if (it == index_.end())
			throw UnknownObjectError(id);
		return it->second;
	}

	const UncertainObject &UncertainDatabase::at(const std::string &id) const { return objects_[index_of(id)]; }

	double inside_probability(const UncertainObject &object, const QueryRegion &region)
	{
		double p = 0.0;
		for (const auto &inst : object.instances())
			if (region.contains(inst.location))
				p += inst.probability;
		return std::min(p, 1.0);
	}

	double closer_than_probability(const UncertainObject &object, const Point &q, double distance)
	{
		if (!(distance >= 0.0))
			throw ValidationError("closer_than_probability: distance must be nonnegative");
		double p = 0.0;
		for (const auto &inst : object.instances())
			if ((inst.location - q).norm() < distance)
				p += inst.probability;
		return std::min(p, 1.0);
	}

	CountDistribution<double> range_count_query(const UncertainDatabase &db, const QueryRegion &region)
	{
		std::vector<BernoulliTrial<double>> trials;
		trials.reserve(db.size());
		for (const auto &o : db.objects())
			trials.emplace_back(snap(inside_probability(o, region)));
		return expand_pruned(trials);
	}

	double knn_membership_probability(const UncertainDatabase &db, const Point &q, const std::string &candidate, Index k)
	{
		if (k < 1)
			throw ValidationError("knn: k must be at least 1");
		const std::size_t self = db.index_of(candidate);
		double total = 0.0;
		for (const auto &inst : db.objects()[self].instances())
		{
			const auto trials = competitor_trials(db, self, q, (inst.location - q).norm());
			const auto pruned = prune_trials(std::span<const BernoulliTrial<double>>(trials));
			if (pruned.certain >= k)
				continue;
			const auto prefix = expand_truncated(std::span<const BernoulliTrial<double>>(pruned.uncertain), k - pruned.certain);
			total += inst.probability * prefix.coeffs().sum();
		}
		return total;
	}

	double distance_rank_probability(const UncertainDatabase &db, const Point &q, const std::string &candidate, Index rank)
	{
		const std::size_t self = db.index_of(candidate);
		if (rank < 1 || rank > Index(db.size()))
			throw ValidationError("rank " + std::to_string(rank) + " outside [1, " + std::to_string(db.size()) + "]");
		double total = 0.0;
		for (const auto &inst : db.objects()[self].instances())
		{
			const auto trials = competitor_trials(db, self, q, (inst.location - q).norm());
			const auto pruned = prune_trials(std::span<const BernoulliTrial<double>>(trials));
			const Index needed = rank - 1 - pruned.certain;
			if (needed < 0 || needed > Index(pruned.uncertain.size()))
				continue;
			total += inst.probability * rank_coefficient(std::span<const BernoulliTrial<double>>(pruned.uncertain), needed + 1);
		}
		return total;
	}
} // namespace probcount
