#pragma once

#include "errors.hpp"
#include "spatial.hpp"

#include <filesystem>
#include <iosfwd>

namespace probcount
{
	/// Malformed or invalid dataset content. line() is 1-based, 0 when not line-specific.
	class DatasetError : public ValidationError
	{
	public:
		DatasetError(std::size_t line, const std::string &what)
			: ValidationError("line " + std::to_string(line) + ": " + what), line_(line)
		{
		}
		std::size_t line() const { return line_; }

	private:
		std::size_t line_;
	};

	/// Reads JSON Lines, one object per line:
	///   {"id":"B","instances":[{"x":1.0,"y":2.0,"p":0.3}, ...]}
	/// Blank lines are ignored.
	UncertainDatabase read_dataset(std::istream &in);
	UncertainDatabase load_dataset(const std::filesystem::path &path);

	void write_dataset(std::ostream &out, const UncertainDatabase &db);
	void save_dataset(const std::filesystem::path &path, const UncertainDatabase &db);
} // namespace probcount
