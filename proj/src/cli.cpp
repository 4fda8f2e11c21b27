#include "probcount/cli.hpp"

#include "probcount/bench.hpp"
#include "probcount/dataset.hpp"
#include "probcount/expansion.hpp"
#include "probcount/fft_expansion.hpp"
#include "probcount/oracles.hpp"
#include "probcount/spatial.hpp"
#include "probcount/trinary.hpp"
#include "probcount/update.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace probcount::cli
{
	namespace
	{
		class UsageError : public std::runtime_error
		{
		public:
			using std::runtime_error::runtime_error;
		};

		std::vector<std::string> split(const std::string &text, char sep)
		{
			std::vector<std::string> parts;
			std::string item;
			std::istringstream is(text);
			while (std::getline(is, item, sep))
				parts.push_back(item);
			if (!text.empty() && text.back() == sep)
				parts.emplace_back();
			return parts;
		}

		double parse_double(const std::string &text, const std::string &flag)
		{
			std::size_t used = 0;
			double v = 0.0;
			try
			{
				v = std::stod(text, &used);
			}
			catch (const std::exception &)
			{
				throw UsageError(flag + ": '" + text + "' is not a number");
			}
			if (used != text.size())
				throw UsageError(flag + ": '" + text + "' is not a number");
			return v;
		}

		std::vector<double> parse_doubles(const std::string &text, const std::string &flag, std::size_t expected = 0)
		{
			std::vector<double> values;
			if (!text.empty())
				for (const auto &part : split(text, ','))
					values.push_back(parse_double(part, flag));
			if (expected != 0 && values.size() != expected)
				throw UsageError(flag + " expects " + std::to_string(expected) + " comma-separated numbers");
			return values;
		}

		std::string render_pmf(const Coefficients<double> &pmf, Index offset)
		{
			std::string s = "{\"offset\":" + std::to_string(offset) + ",\"pmf\":[";
			for (Index i = 0; i < pmf.size(); ++i)
			{
				if (i)
					s += ',';
				s += format_number(pmf[i]);
			}
			return s + "]}";
		}

		struct Options
		{
			std::string data;
			std::string circle;
			std::string rect;
			std::string candidate;
			std::string probs;
			std::string query = "0,0";
			std::string algo = "naive";
			std::string pmf_source = "-";
			std::string sizes;
			Index k = 0;
			Index truncate = 0;
			double p_old = 0.0;
			double p_new = 0.0;
			std::uint64_t seed = 42;
			int reps = 3;
		};

		CountDistribution<double> run_algorithm(const std::string &algo, const std::vector<BernoulliTrial<double>> &trials)
		{
			if (algo == "naive")
				return expand(trials);
			if (algo == "fft")
				return expand_fft(trials);
			if (algo == "recurrence")
				return oracles::poisson_binomial_recurrence(trials);
			return oracles::brute_force_pmf(trials);
		}

		int cmd_pmf(const Options &o, std::ostream &out)
		{
			const auto trials = make_trials(parse_doubles(o.probs, "--probs"));
			if (o.truncate > 0)
			{
				const auto prefix = expand_truncated(trials, o.truncate);
				std::string doc = render_pmf(prefix.coeffs(), 0);
				doc.insert(doc.size() - 1, ",\"truncation_bound\":" + std::to_string(o.truncate));
				out << doc << '\n';
				return kSuccess;
			}
			const auto dist = run_algorithm(o.algo, trials);
			out << render_pmf(dist.pmf(), dist.offset()) << '\n';
			return kSuccess;
		}

		int cmd_pmf_trinary(const Options &o, std::ostream &out)
		{
			std::vector<TrinaryTrial<double>> trials;
			if (!o.probs.empty())
				for (const auto &pair : split(o.probs, ','))
				{
					const auto parts = split(pair, ':');
					if (parts.size() != 2)
						throw UsageError("--probs for pmf-trinary expects p:p_bar pairs, got '" + pair + "'");
					trials.emplace_back(parse_double(parts[0], "--probs"), parse_double(parts[1], "--probs"));
				}
			const auto grid = expand_trinary(trials);

			std::string s = "{\"grid\":[";
			for (Index i = 0; i < grid.rows(); ++i)
			{
				s += i ? ",[" : "[";
				for (Index j = 0; j < grid.cols(); ++j)
				{
					if (j)
						s += ',';
					s += format_number(grid(i, j));
				}
				s += ']';
			}
			s += "],\"cells\":[";
			bool first = true;
			for (Index i = 0; i < grid.rows(); ++i)
				for (Index j = 0; j < grid.cols(); ++j)
				{
					if (grid(i, j) == 0.0)
						continue;
					const auto b = BivariatePmf<double>::bounds(i, j);
					s += first ? "" : ",";
					first = false;
					s += "{\"certain\":" + std::to_string(i) + ",\"undecided\":" + std::to_string(j)
						 + ",\"at_least\":" + std::to_string(b.at_least) + ",\"at_most\":" + std::to_string(b.at_most)
						 + ",\"p\":" + format_number(grid(i, j)) + ",\"meaning\":" + nlohmann::json(grid.describe(i, j)).dump()
						 + "}";
				}
			out << s << "]}\n";
			return kSuccess;
		}

		UncertainDatabase require_data(const Options &o)
		{
			if (o.data.empty())
				throw UsageError("--data is required");
			return load_dataset(o.data);
		}

		int cmd_range_count(const Options &o, std::ostream &out)
		{
			if (o.circle.empty() == o.rect.empty())
				throw UsageError("range-count needs exactly one of --circle or --rect");
			const auto db = require_data(o);
			std::optional<QueryRegion> region;
			if (!o.circle.empty())
			{
				const auto c = parse_doubles(o.circle, "--circle", 3);
				region = QueryRegion::circle(Point(c[0], c[1]), c[2]);
			}
			else
			{
				const auto r = parse_doubles(o.rect, "--rect", 4);
				region = QueryRegion::rect(Point(r[0], r[1]), Point(r[2], r[3]));
			}
			const auto dist = range_count_query(db, *region);
			out << render_pmf(dist.pmf(), dist.offset()) << '\n';
			return kSuccess;
		}

		int cmd_neighbor(const Options &o, std::ostream &out, bool rank)
		{
			if (o.candidate.empty())
				throw UsageError("--candidate is required");
			if (o.k < 1)
				throw UsageError("--k must be at least 1");
			const auto db = require_data(o);
			const auto q = parse_doubles(o.query, "--query", 2);
			const Point qp(q[0], q[1]);
			const double p = rank ? distance_rank_probability(db, qp, o.candidate, o.k)
								  : knn_membership_probability(db, qp, o.candidate, o.k);
			out << format_number(p) << '\n';
			return kSuccess;
		}

		int cmd_update(const Options &o, std::istream &in, std::ostream &out)
		{
			nlohmann::json doc;
			try
			{
				if (o.pmf_source == "-")
					doc = nlohmann::json::parse(in);
				else
				{
					std::ifstream file(o.pmf_source);
					if (!file)
						throw DatasetError(0, "cannot open pmf document '" + o.pmf_source + "'");
					doc = nlohmann::json::parse(file);
				}
			}
			catch (const nlohmann::json::exception &e)
			{
				throw DatasetError(1, std::string("malformed pmf document: ") + e.what());
			}
			if (!doc.is_object() || !doc.contains("pmf") || !doc["pmf"].is_array())
				throw DatasetError(1, "pmf document needs a \"pmf\" array");
			const auto values = doc["pmf"].get<std::vector<double>>();
			const Index offset = doc.value("offset", Index(0));
			Coefficients<double> coeffs = Eigen::Map<const Coefficients<double>>(values.data(), Index(values.size()));
			const ProbabilityPolynomial<double> f(std::move(coeffs));
			const auto updated = update_trial(f, o.p_old, o.p_new);
			out << render_pmf(updated.coeffs(), offset) << '\n';
			return kSuccess;
		}

		int cmd_bench(const Options &o, std::ostream &out)
		{
			BenchOptions b;
			for (const double n : parse_doubles(o.sizes, "--sizes"))
			{
				if (n < 1 || n != double(Index(n)))
					throw UsageError("--sizes must be positive integers");
				b.sizes.push_back(Index(n));
			}
			if (b.sizes.empty())
				throw UsageError("--sizes is required");
			if (o.truncate > 0)
				b.truncate = o.truncate;
			b.seed = o.seed;
			b.repetitions = o.reps;
			out << format_bench_table(run_bench(b));
			return kSuccess;
		}
	} // namespace

	std::string format_number(double value)
	{
		char buf[40];
		std::snprintf(buf, sizeof buf, "%.17g", value);
		std::string s(buf);
		if (s.find_first_of(".eEn") == std::string::npos)
			s += ".0";
		return s;
	}

	int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err)
	{
		CLI::App app{"Exact count distributions over uncertain spatial objects", "probcount"};
		app.require_subcommand(1);
		Options o;

		const std::vector<std::string> algos{"naive", "fft", "recurrence", "brute"};

		auto *pmf = app.add_subcommand("pmf", "Distribution of successes among independent trials");
		pmf->add_option("--probs", o.probs, "Comma-separated success probabilities")->required();
		pmf->add_option("--algo", o.algo, "naive|fft|recurrence|brute")->check(CLI::IsMember(algos));
		pmf->add_option("--truncate", o.truncate, "Keep only exponents below K")->check(CLI::PositiveNumber);

		auto *tri = app.add_subcommand("pmf-trinary", "Joint (certain, undecided) distribution of trinary trials");
		tri->add_option("--probs", o.probs, "Comma-separated p:p_bar pairs")->required();

		auto *range = app.add_subcommand("range-count", "Distribution of the number of objects inside a region");
		range->add_option("--data", o.data, "JSON Lines dataset")->required();
		range->add_option("--circle", o.circle, "cx,cy,r");
		range->add_option("--rect", o.rect, "x1,y1,x2,y2");

		auto *knn = app.add_subcommand("knn", "Probability that a candidate is among the k nearest neighbors");
		auto *rank = app.add_subcommand("rank", "Probability that a candidate has distance rank K");
		for (auto *sub : {knn, rank})
		{
			sub->add_option("--data", o.data, "JSON Lines dataset")->required();
			sub->add_option("--candidate", o.candidate, "Object id")->required();
			sub->add_option("--k", o.k, "k (knn) or rank K")->required();
			sub->add_option("--query", o.query, "Query point x,y (default 0,0)");
		}

		auto *update = app.add_subcommand("update", "Change one trial probability of an expanded pmf");
		update->add_option("--pmf", o.pmf_source, "pmf document path, - for stdin");
		update->add_option("--p-old", o.p_old, "Probability being replaced")->required();
		update->add_option("--p-new", o.p_new, "Replacement probability")->required();

		auto *bench = app.add_subcommand("bench", "Time naive, truncated and FFT expansion");
		bench->add_option("--sizes", o.sizes, "Comma-separated trial counts")->required();
		bench->add_option("--truncate", o.truncate, "Also time truncated expansion with bound K")->check(CLI::PositiveNumber);
		bench->add_option("--seed", o.seed, "Random seed");
		bench->add_option("--reps", o.reps, "Repetitions per timing")->check(CLI::PositiveNumber);

		try
		{
			std::vector<std::string> reversed(args.rbegin(), args.rend());
			app.parse(reversed);
		}
		catch (const CLI::CallForHelp &e)
		{
			return app.exit(e, out, err);
		}
		catch (const CLI::ParseError &e)
		{
			err << "error: " << e.what() << '\n';
			return kUsageError;
		}

		try
		{
			if (pmf->parsed())
				return cmd_pmf(o, out);
			if (tri->parsed())
				return cmd_pmf_trinary(o, out);
			if (range->parsed())
				return cmd_range_count(o, out);
			if (knn->parsed())
				return cmd_neighbor(o, out, false);
			if (rank->parsed())
				return cmd_neighbor(o, out, true);
			if (update->parsed())
				return cmd_update(o, in, out);
			return cmd_bench(o, out);
		}
		catch (const UsageError &e)
		{
			err << "error: " << e.what() << '\n';
			return kUsageError;
		}
		catch (const UnknownObjectError &e)
		{
			err << "error: " << e.what() << '\n';
			return kUsageError;
		}
		catch (const NumericBreakdown &e)
		{
			err << "numeric failure: " << e.what() << '\n';
			return kNumericFailure;
		}
		catch (const ValidationError &e)
		{
			err << "invalid data: " << e.what() << '\n';
			return kDataError;
		}
	}
} // namespace probcount::cli
