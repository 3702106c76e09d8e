#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

namespace evokd {

struct AblationFlags {
    bool no_easy = false;        // generate b hard samples, no easy ones
    bool no_correct = false;     // hide correct samples from weakness analysis
    bool no_review = false;      // disable Review events
    bool no_separating = false;  // merge text generation and labeling

    bool any() const { return no_easy || no_correct || no_review || no_separating; }
};

/// Run configuration. Every field is optional in the config file and takes
/// the default shown here.
struct RunConfig {
    std::int64_t num_steps = 12500;       // 10 epochs x 1250 steps
    std::int64_t steps_per_epoch = 1250;
    std::int64_t chat = 40;               // chat interval in steps
    std::int64_t review = 50;             // review interval in steps
    int batch_size = 8;
    double threshold = 0.95;              // identify confidence threshold
    double learning_rate = 0.5;           // tuned for the hashed linear student
    double clip_norm = 2.0;
    double l2 = 0.0;                      // optional weight penalty
    std::int64_t init_epochs = 0;         // > 0 enables rephrase initialization
    AblationFlags ablations;
    std::uint64_t seed = 1;

    std::size_t feature_dim = 1u << 18;
    std::int64_t eval_every = 50;         // held-out snapshot cadence
    std::int64_t checkpoint_every = 500;

    // Teacher client settings.
    std::string llm_model = "gpt-3.5-turbo";
    double temperature = 1.0;
    std::string prompt_dir = "prompts";

    // Baseline/initialization augmentation settings.
    int variants_per_sample = 4;
    double eda_change_rate = 0.3;
    std::string eda_ops = "swap,delete,insert";

    void validate() const;

    static RunConfig from_json(const nlohmann::json& doc);
    static RunConfig load(const std::filesystem::path& path);
    nlohmann::ordered_json to_json() const;
};

}  // namespace evokd
