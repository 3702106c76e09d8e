#include "evokd/types.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace evokd {

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

std::string to_lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

int TaskSpec::label_index(const std::string& label) const {
    const std::string needle = trim(label);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == needle) return static_cast<int>(i);
    }
    return -1;
}

int TaskSpec::label_index_fold(const std::string& label) const {
    const std::string needle = to_lower(trim(label));
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (to_lower(labels[i]) == needle) return static_cast<int>(i);
    }
    return -1;
}

void TaskSpec::validate() const {
    if (labels.size() < 2) {
        throw validation_error("task '" + name + "' needs at least 2 labels");
    }
    std::unordered_set<std::string> seen;
    for (const auto& label : labels) {
        if (trim(label).empty()) {
            throw validation_error("task '" + name + "' has an empty label");
        }
        if (!seen.insert(label).second) {
            throw validation_error("task '" + name + "' has duplicate label '" + label + "'");
        }
    }
}

const char* origin_name(Origin origin) {
    switch (origin) {
        case Origin::Seed: return "seed";
        case Origin::TeacherHard: return "teacher_hard";
        case Origin::TeacherEasy: return "teacher_easy";
        case Origin::Baseline: return "baseline";
    }
    return "seed";
}

std::optional<Origin> origin_from_name(const std::string& name) {
    if (name == "seed") return Origin::Seed;
    if (name == "teacher_hard") return Origin::TeacherHard;
    if (name == "teacher_easy") return Origin::TeacherEasy;
    if (name == "baseline") return Origin::Baseline;
    return std::nullopt;
}

void Dataset::validate() const {
    task.validate();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& sample = samples[i];
        if (sample.text.empty()) {
            throw validation_error("sample " + std::to_string(i) + " has empty text");
        }
        if (task.label_index(sample.label) < 0) {
            throw validation_error("sample " + std::to_string(i) + " has unknown label '" +
                                   sample.label + "'");
        }
        if ((sample.origin == Origin::TeacherHard || sample.origin == Origin::TeacherEasy) &&
            sample.created_step <= 0) {
            throw validation_error("teacher-generated sample " + std::to_string(i) +
                                   " must have created_step > 0");
        }
        if (sample.created_step < 0) {
            throw validation_error("sample " + std::to_string(i) + " has negative created_step");
        }
    }
}

}  // namespace evokd
