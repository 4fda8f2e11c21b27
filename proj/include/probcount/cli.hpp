#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace probcount::cli
{
	enum ExitCode : int
	{
		kSuccess = 0,
		kUsageError = 1,
		kDataError = 2,
		kNumericFailure = 3,
	};

	/// Runs the command line `args` (without the program name). Results go to `out`,
	/// diagnostics to `err`; `in` feeds `update --pmf -`.
	int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

	/// Shortest faithful rendering of a probability for JSON output: 17 significant
	/// digits, always with a decimal point or exponent.
	std::string format_number(double value);
} // namespace probcount::cli
