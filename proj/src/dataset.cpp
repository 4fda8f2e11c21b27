#include "probcount/dataset.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>
#include <ostream>

namespace probcount
{
	namespace
	{
		using nlohmann::json;

		double number_field(const json &obj, const char *key, std::size_t line)
		{
			const auto it = obj.find(key);
			if (it == obj.end() || !it->is_number())
				throw DatasetError(line, std::string("instance field '") + key + "' missing or not a number");
			return it->get<double>();
		}

		UncertainObject parse_record(const std::string &text, std::size_t line)
		{
			json rec;
			try
			{
				rec = json::parse(text);
			}
			catch (const json::parse_error &e)
			{
				throw DatasetError(line, std::string("malformed JSON: ") + e.what());
			}
			if (!rec.is_object())
				throw DatasetError(line, "record is not a JSON object");
			const auto id = rec.find("id");
			if (id == rec.end() || !id->is_string())
				throw DatasetError(line, "field 'id' missing or not a string");
			const auto inst = rec.find("instances");
			if (inst == rec.end() || !inst->is_array())
				throw DatasetError(line, "field 'instances' missing or not an array");

			std::vector<Instance> instances;
			instances.reserve(inst->size());
			for (const auto &i : *inst)
			{
				if (!i.is_object())
					throw DatasetError(line, "instance is not a JSON object");
				instances.push_back({Point(number_field(i, "x", line), number_field(i, "y", line)), number_field(i, "p", line)});
			}
			try
			{
				return UncertainObject(id->get<std::string>(), std::move(instances));
			}
			catch (const ValidationError &e)
			{
				throw DatasetError(line, e.what());
			}
		}
	} // namespace

	UncertainDatabase read_dataset(std::istream &in)
	{
		UncertainDatabase db;
		std::string text;
		std::size_t line = 0;
		while (std::getline(in, text))
		{
			++line;
			if (text.find_first_not_of(" \t\r") == std::string::npos)
				continue;
			auto object = parse_record(text, line);
			try
			{
				db.add(std::move(object));
			}
			catch (const ValidationError &e)
			{
				throw DatasetError(line, e.what());
			}
		}
		return db;
	}

	UncertainDatabase load_dataset(const std::filesystem::path &path)
	{
		std::ifstream in(path);
		if (!in)
			throw DatasetError(0, "cannot open dataset '" + path.string() + "'");
		return read_dataset(in);
	}

	void write_dataset(std::ostream &out, const UncertainDatabase &db)
	{
		for (const auto &o : db.objects())
		{
			json rec;
			rec["id"] = o.id();
			rec["instances"] = json::array();
			for (const auto &i : o.instances())
				rec["instances"].push_back({{"x", i.location.x()}, {"y", i.location.y()}, {"p", i.probability}});
			out << rec.dump() << '\n';
		}
	}

	void save_dataset(const std::filesystem::path &path, const UncertainDatabase &db)
	{
		std::ofstream out(path);
		if (!out)
			throw DatasetError(0, "cannot write dataset '" + path.string() + "'");
		write_dataset(out, db);
	}
} // namespace probcount
