#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "evokd/types.hpp"

namespace evokd {

// Dataset files are UTF-8, one JSON object per line with fields "text" and
// "label" plus optional "origin" and "created_step". Unknown fields are
// ignored so files produced by newer tools stay loadable.

Dataset load_dataset(const std::filesystem::path& path, const TaskSpec& task);
Dataset load_dataset(std::istream& in, const TaskSpec& task, const std::string& source_name);

void save_dataset(const Dataset& dataset, const std::filesystem::path& path);
void save_dataset(const Dataset& dataset, std::ostream& out);

// Draws exactly k samples per label, uniformly without replacement,
// deterministic for a fixed seed. Output is grouped by label index and keeps
// the original file order inside each group.
Dataset few_shot_sample(const Dataset& full, int shots_per_label, std::uint64_t seed);

// Task definition file: a JSON object {"name", "description", "labels"}.
TaskSpec load_task(const std::filesystem::path& path);
void save_task(const TaskSpec& task, const std::filesystem::path& path);

}  // namespace evokd
