#pragma once

#include "polynomial.hpp"

#include <Eigen/Core>

#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace probcount
{
	using Point = Eigen::Vector2d;

	/// One alternative location of an uncertain object.
	struct Instance
	{
		Point location;
		double probability;
	};

	/// Object with a finite set of mutually exclusive alternative locations. Instance
	/// probabilities may sum to less than one; the residual is the probability that the
	/// object does not exist, in which case it lies in no region.
	class UncertainObject
	{
	public:
		UncertainObject(std::string id, std::vector<Instance> instances);

		const std::string &id() const { return id_; }
		const std::vector<Instance> &instances() const { return instances_; }
		double existence_probability() const { return existence_; }

		friend bool operator==(const UncertainObject &a, const UncertainObject &b);

	private:
		std::string id_;
		std::vector<Instance> instances_;
		double existence_ = 0.0;
	};

	struct Circle
	{
		Point center;
		double radius;
	};

	struct Rect
	{
		Point min;
		Point max;
	};

	/// Closed query region: boundary points count as inside.
	class QueryRegion
	{
	public:
		static QueryRegion circle(const Point &center, double radius);
		static QueryRegion rect(const Point &min, const Point &max);

		bool contains(const Point &p) const;
		const std::variant<Circle, Rect> &shape() const { return shape_; }

	private:
		explicit QueryRegion(std::variant<Circle, Rect> shape) : shape_(std::move(shape)) {}
		std::variant<Circle, Rect> shape_;
	};

	class UncertainDatabase
	{
	public:
		UncertainDatabase() = default;
		explicit UncertainDatabase(std::vector<UncertainObject> objects);

		/// Throws ValidationError if the id is already present.
		void add(UncertainObject object);

		const std::vector<UncertainObject> &objects() const { return objects_; }
		std::size_t size() const { return objects_.size(); }
		bool empty() const { return objects_.empty(); }

		/// Throws UnknownObjectError.
		const UncertainObject &at(const std::string &id) const;
		std::size_t index_of(const std::string &id) const;

		friend bool operator==(const UncertainDatabase &a, const UncertainDatabase &b) { return a.objects_ == b.objects_; }

	private:
		std::vector<UncertainObject> objects_;
		std::unordered_map<std::string, std::size_t> index_;
	};

	/// Probabilities within this distance of 1 are treated as certain when pruning.
	inline constexpr double kCertaintySnap = 1e-12;

	double inside_probability(const UncertainObject &object, const QueryRegion &region);

	/// Mass of the instances lying strictly closer than `distance` to `q`.
	double closer_than_probability(const UncertainObject &object, const Point &q, double distance);

	/// Distribution of the number of objects inside `region`. Objects that are surely
	/// outside are pruned; objects surely inside are counted into the offset.
	CountDistribution<double> range_count_query(const UncertainDatabase &db, const QueryRegion &region);

	/// Probability that `candidate` exists and has at most k-1 other objects strictly
	/// closer to `q`.
	double knn_membership_probability(const UncertainDatabase &db, const Point &q, const std::string &candidate, Index k);

	/// Probability that `candidate` exists and has exactly rank-1 other objects strictly
	/// closer to `q`. Requires 1 <= rank <= db.size().
	double distance_rank_probability(const UncertainDatabase &db, const Point &q, const std::string &candidate, Index rank);
} // namespace probcount
