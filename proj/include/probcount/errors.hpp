#pragma once

#include <stdexcept>
#include <string>

namespace probcount
{
	/// Input violates a type invariant (probability out of range, bad region, duplicate id, ...).
	class ValidationError : public std::invalid_argument
	{
	public:
		explicit ValidationError(const std::string &what) : std::invalid_argument(what) {}
	};

	/// Floating-point evaluation produced values the algorithm cannot recover from:
	/// large negative FFT residue, or an unstable polynomial division.
	/// Callers are expected to fall back to a full recomputation.
	class NumericBreakdown : public std::runtime_error
	{
	public:
		explicit NumericBreakdown(const std::string &what) : std::runtime_error(what) {}
	};
} // namespace probcount

namespace probcount
{
	/// A query referred to an object id that the database does not contain.
	class UnknownObjectError : public std::out_of_range
	{
	public:
		explicit UnknownObjectError(const std::string &id) : std::out_of_range("unknown object id '" + id + "'"), id_(id) {}
		const std::string &id() const { return id_; }

	private:
		std::string id_;
	};
} // namespace probcount
