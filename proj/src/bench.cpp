#include "probcount/bench.hpp"

#include "probcount/errors.hpp"
#include "probcount/expansion.hpp"
#include "probcount/fft_expansion.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>

namespace probcount
{
	namespace
	{
		// Short runs are batched so that each sample spans at least this long.
		constexpr double kMinSampleMs = 50.0;

		template <typename F>
		double elapsed_ms(int calls, F &body)
		{
			const auto start = std::chrono::steady_clock::now();
			for (int i = 0; i < calls; ++i)
				body();
			return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
		}

		/// Number of calls needed for one sample of `body` to span kMinSampleMs.
		template <typename F>
		int calibrate(F &body)
		{
			const double once = elapsed_ms(1, body);
			return once >= kMinSampleMs ? 1 : int(std::ceil(kMinSampleMs / std::max(once, 1e-3)));
		}

		struct Timed
		{
			std::function<void()> body;
			int calls = 1;
			double best = std::numeric_limits<double>::infinity();

			void sample() { best = std::min(best, elapsed_ms(calls, body) / calls); }
		};
	} // namespace

	std::vector<BenchRow> run_bench(const BenchOptions &options)
	{
		if (options.truncate && *options.truncate < 1)
			throw ValidationError("bench: truncation bound must be at least 1");
		std::mt19937_64 rng(options.seed);
		std::uniform_real_distribution<double> unit(0.0, 1.0);

		const std::size_t rows = options.sizes.size();
		std::vector<std::vector<BernoulliTrial<double>>> inputs(rows);
		std::vector<BenchRow> out(rows);
		for (std::size_t r = 0; r < rows; ++r)
		{
			const Index n = options.sizes[r];
			if (n < 1)
				throw ValidationError("bench: sizes must be at least 1");
			for (Index i = 0; i < n; ++i)
				inputs[r].emplace_back(unit(rng));
			out[r].n = n;

			const auto &t = inputs[r];
			const auto naive = expand(t);
			const auto fast = expand_fft(t);
			out[r].max_fft_difference = (naive.pmf() - fast.pmf()).cwiseAbs().maxCoeff();
			if (out[r].max_fft_difference > kBenchFftTolerance)
				throw NumericBreakdown("bench: expand_fft differs from expand by " + std::to_string(out[r].max_fft_difference)
									   + " at N = " + std::to_string(n));
			if (options.truncate)
			{
				const auto prefix = expand_truncated(t, *options.truncate);
				if (prefix.coeffs() != naive.pmf().head(prefix.size()))
					throw NumericBreakdown("bench: expand_truncated is not a prefix of expand at N = " + std::to_string(n));
			}
		}

		// Every round samples every size, so a burst of machine noise is not
		// attributed to a single row.
		std::vector<Timed> naive(rows), fast(rows), truncated(rows);
		for (std::size_t r = 0; r < rows; ++r)
		{
			const auto *t = &inputs[r];
			naive[r].body = [t] { (void)expand(*t); };
			fast[r].body = [t] { (void)expand_fft(*t); };
			naive[r].calls = calibrate(naive[r].body);
			fast[r].calls = calibrate(fast[r].body);
			if (options.truncate)
			{
				const Index k = *options.truncate;
				truncated[r].body = [t, k] { (void)expand_truncated(*t, k); };
				truncated[r].calls = calibrate(truncated[r].body);
			}
		}
		for (int rep = 0; rep < std::max(options.repetitions, 1); ++rep)
			for (std::size_t r = 0; r < rows; ++r)
			{
				naive[r].sample();
				fast[r].sample();
				if (options.truncate)
					truncated[r].sample();
			}

		for (std::size_t r = 0; r < rows; ++r)
		{
			out[r].naive_ms = naive[r].best;
			out[r].fft_ms = fast[r].best;
			if (options.truncate)
				out[r].truncated_ms = truncated[r].best;
		}
		return out;
	}

	std::string format_bench_table(const std::vector<BenchRow> &rows)
	{
		std::string out;
		char buf[160];
		std::snprintf(buf, sizeof buf, "%10s %14s %14s %14s %14s\n", "N", "naive_ms", "truncated_ms", "fft_ms", "max_fft_diff");
		out += buf;
		for (const auto &r : rows)
		{
			char trunc[32];
			if (r.truncated_ms)
				std::snprintf(trunc, sizeof trunc, "%.4f", *r.truncated_ms);
			else
				std::snprintf(trunc, sizeof trunc, "-");
			std::snprintf(buf, sizeof buf, "%10lld %14.4f %14s %14.4f %14.3e\n", static_cast<long long>(r.n), r.naive_ms, trunc,
						  r.fft_ms, r.max_fft_difference);
			out += buf;
		}
		return out;
	}
} // namespace probcount
