#pragma once

#include "polynomial.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace probcount
{
	/// Maximum |expand_fft - expand| tolerated before a benchmark run is rejected.
	inline constexpr double kBenchFftTolerance = 1e-8;

	struct BenchOptions
	{
		std::vector<Index> sizes;
		std::optional<Index> truncate;
		std::uint64_t seed = 42;
		/// Each timing is the minimum over this many samples; a sample batches short runs.
		int repetitions = 3;
	};

	struct BenchRow
	{
		Index n = 0;
		double naive_ms = 0.0;
		std::optional<double> truncated_ms;
		double fft_ms = 0.0;
		double max_fft_difference = 0.0;
	};

	/// Times expand, expand_truncated (when requested) and expand_fft on uniform random
	/// trials. Throws NumericBreakdown if the algorithms disagree.
	std::vector<BenchRow> run_bench(const BenchOptions &options);

	std::string format_bench_table(const std::vector<BenchRow> &rows);
} // namespace probcount
