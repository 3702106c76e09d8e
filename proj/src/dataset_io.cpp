#include "evokd/dataset_io.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace evokd {

using nlohmann::json;

Dataset load_dataset(const std::filesystem::path& path, const TaskSpec& task) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open dataset file: " + path.string());
    }
    return load_dataset(in, task, path.string());
}

Dataset load_dataset(std::istream& in, const TaskSpec& task, const std::string& source_name) {
    task.validate();
    Dataset dataset;
    dataset.task = task;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;

        json record;
        try {
            record = json::parse(line);
        } catch (const json::parse_error& e) {
            throw parse_error(source_name + ":" + std::to_string(line_no) +
                              ": malformed record: " + e.what());
        }
        if (!record.is_object() || !record.contains("text") || !record.contains("label") ||
            !record["text"].is_string() || !record["label"].is_string()) {
            throw parse_error(source_name + ":" + std::to_string(line_no) +
                              ": record needs string fields \"text\" and \"label\"");
        }

        LabeledSample sample;
        sample.text = record["text"].get<std::string>();
        sample.label = trim(record["label"].get<std::string>());
        if (sample.text.empty()) {
            throw validation_error(source_name + ":" + std::to_string(line_no) +
                                   ": empty text");
        }
        if (task.label_index(sample.label) < 0) {
            throw validation_error(source_name + ":" + std::to_string(line_no) +
                                   ": unknown label '" + sample.label + "'");
        }
        if (record.contains("origin")) {
            if (!record["origin"].is_string()) {
                throw parse_error(source_name + ":" + std::to_string(line_no) +
                                  ": \"origin\" must be a string");
            }
            auto origin = origin_from_name(record["origin"].get<std::string>());
            if (!origin) {
                throw validation_error(source_name + ":" + std::to_string(line_no) +
                                       ": unknown origin '" +
                                       record["origin"].get<std::string>() + "'");
            }
            sample.origin = *origin;
        }
        if (record.contains("created_step")) {
            if (!record["created_step"].is_number_integer()) {
                throw parse_error(source_name + ":" + std::to_string(line_no) +
                                  ": \"created_step\" must be an integer");
            }
            sample.created_step = record["created_step"].get<std::int64_t>();
        }
        dataset.samples.push_back(std::move(sample));
    }
    dataset.validate();
    return dataset;
}

void save_dataset(const Dataset& dataset, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot write dataset file: " + path.string());
    }
    save_dataset(dataset, out);
}

void save_dataset(const Dataset& dataset, std::ostream& out) {
    for (const auto& sample : dataset.samples) {
        nlohmann::ordered_json record;
        record["text"] = sample.text;
        record["label"] = sample.label;
        record["origin"] = origin_name(sample.origin);
        record["created_step"] = sample.created_step;
        out << record.dump() << '\n';
    }
}

Dataset few_shot_sample(const Dataset& full, int shots_per_label, std::uint64_t seed) {
    if (shots_per_label < 1) {
        throw config_error("shots per label must be >= 1");
    }
    full.task.validate();

    // Indices of full.samples grouped by label, in file order.
    std::vector<std::vector<std::size_t>> by_label(full.task.labels.size());
    for (std::size_t i = 0; i < full.samples.size(); ++i) {
        int idx = full.task.label_index(full.samples[i].label);
        if (idx < 0) {
            throw validation_error("sample " + std::to_string(i) + " has unknown label '" +
                                   full.samples[i].label + "'");
        }
        by_label[static_cast<std::size_t>(idx)].push_back(i);
    }

    std::mt19937_64 rng(seed);
    Dataset out;
    out.task = full.task;
    for (std::size_t l = 0; l < by_label.size(); ++l) {
        auto& pool = by_label[l];
        if (pool.size() < static_cast<std::size_t>(shots_per_label)) {
            throw data_error("label '" + full.task.labels[l] + "' has only " +
                             std::to_string(pool.size()) + " samples, need " +
                             std::to_string(shots_per_label));
        }
        // Partial Fisher-Yates: the first k slots become the draw.
        for (int j = 0; j < shots_per_label; ++j) {
            std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(j),
                                                            pool.size() - 1);
            std::swap(pool[static_cast<std::size_t>(j)], pool[pick(rng)]);
        }
        std::vector<std::size_t> chosen(pool.begin(), pool.begin() + shots_per_label);
        std::sort(chosen.begin(), chosen.end());
        for (std::size_t idx : chosen) {
            out.samples.push_back(full.samples[idx]);
        }
    }
    return out;
}

TaskSpec load_task(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open task file: " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error(path.string() + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("labels") || !doc["labels"].is_array()) {
        throw parse_error(path.string() + ": task file needs a \"labels\" array");
    }
    TaskSpec task;
    task.name = doc.value("name", std::string("task"));
    task.description = doc.value("description", std::string());
    for (const auto& label : doc["labels"]) {
        if (!label.is_string()) {
            throw parse_error(path.string() + ": labels must be strings");
        }
        task.labels.push_back(trim(label.get<std::string>()));
    }
    task.validate();
    return task;
}

void save_task(const TaskSpec& task, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot write task file: " + path.string());
    }
    nlohmann::ordered_json doc;
    doc["name"] = task.name;
    doc["description"] = task.description;
    doc["labels"] = task.labels;
    out << doc.dump(2) << '\n';
}

}  // namespace evokd
