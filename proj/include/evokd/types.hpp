#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evokd/errors.hpp"

namespace evokd {

/// Classification task definition: the label vocabulary plus the free-text
/// description that is inserted into teacher prompts.
struct TaskSpec {
    std::string name;
    std::string description;
    std::vector<std::string> labels;  // ordered, unique, non-empty, size >= 2

    // Index of a label, or -1 when it is not part of the vocabulary.
    // Labels are compared case-sensitively after whitespace trimming.
    int label_index(const std::string& label) const;

    // Case-insensitive lookup used to normalize teacher replies ("POSITIVE"
    // -> "positive"). Returns -1 when nothing matches.
    int label_index_fold(const std::string& label) const;

    void validate() const;
};

enum class Origin : std::uint8_t {
    Seed,
    TeacherHard,
    TeacherEasy,
    Baseline,
};

const char* origin_name(Origin origin);
std::optional<Origin> origin_from_name(const std::string& name);

/// One text with its gold label and provenance; the atom of all datasets.
struct LabeledSample {
    std::string text;   // non-empty
    std::string label;  // member of the task's label set
    Origin origin = Origin::Seed;
    std::int64_t created_step = 0;  // >= 0; > 0 for TeacherHard/TeacherEasy
};

struct Dataset {
    TaskSpec task;
    std::vector<LabeledSample> samples;

    bool empty() const { return samples.empty(); }
    std::size_t size() const { return samples.size(); }

    // Checks every sample against the task's label set and the origin/step
    // invariants; throws a validation error naming the first offender.
    void validate() const;
};

std::string trim(const std::string& s);
std::string to_lower(const std::string& s);

}  // namespace evokd
