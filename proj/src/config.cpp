#include "evokd/config.hpp"

#include <fstream>
#include <set>

#include "evokd/errors.hpp"

namespace evokd {

using nlohmann::json;

void RunConfig::validate() const {
    if (num_steps < 1) throw config_error("num_steps must be positive");
    if (steps_per_epoch < 1) throw config_error("steps_per_epoch must be positive");
    if (chat < 1) throw config_error("chat interval must be positive");
    if (review < 1) throw config_error("review interval must be positive");
    if (batch_size < 1) throw config_error("batch_size must be >= 1");
    if (threshold < 0.0 || threshold > 1.0) throw config_error("threshold must be in [0,1]");
    if (learning_rate <= 0.0) throw config_error("learning_rate must be positive");
    if (clip_norm <= 0.0) throw config_error("clip_norm must be positive");
    if (l2 < 0.0) throw config_error("l2 must be non-negative");
    if (init_epochs < 0) throw config_error("init_epochs must be non-negative");
    if (feature_dim < 2) throw config_error("feature_dim must be >= 2");
    if (eval_every < 1) throw config_error("eval_every must be positive");
    if (checkpoint_every < 1) throw config_error("checkpoint_every must be positive");
    if (variants_per_sample < 1) throw config_error("variants_per_sample must be >= 1");
    if (eda_change_rate <= 0.0 || eda_change_rate > 1.0) {
        throw config_error("eda_change_rate must be in (0,1]");
    }
}

namespace {

const std::set<std::string> kKnownKeys = {
    "num_steps",      "steps_per_epoch", "chat",
    "review",         "batch_size",      "threshold",
    "learning_rate",  "clip_norm",       "l2",
    "init_epochs",    "ablations",       "seed",
    "feature_dim",    "eval_every",      "checkpoint_every",
    "llm_model",      "temperature",     "prompt_dir",
    "variants_per_sample", "eda_change_rate", "eda_ops",
};

template <typename T>
void read_field(const json& doc, const char* key, T& out) {
    if (!doc.contains(key)) return;
    try {
        out = doc[key].get<T>();
    } catch (const json::exception&) {
        throw config_error(std::string("config field \"") + key + "\" has the wrong type");
    }
}

}  // namespace

RunConfig RunConfig::from_json(const json& doc) {
    if (!doc.is_object()) {
        throw config_error("config must be a JSON object");
    }
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (!kKnownKeys.count(it.key())) {
            throw config_error("unknown config field \"" + it.key() + "\"");
        }
    }

    RunConfig cfg;
    read_field(doc, "num_steps", cfg.num_steps);
    read_field(doc, "steps_per_epoch", cfg.steps_per_epoch);
    read_field(doc, "chat", cfg.chat);
    read_field(doc, "review", cfg.review);
    read_field(doc, "batch_size", cfg.batch_size);
    read_field(doc, "threshold", cfg.threshold);
    read_field(doc, "learning_rate", cfg.learning_rate);
    read_field(doc, "clip_norm", cfg.clip_norm);
    read_field(doc, "l2", cfg.l2);
    read_field(doc, "init_epochs", cfg.init_epochs);
    read_field(doc, "seed", cfg.seed);
    read_field(doc, "feature_dim", cfg.feature_dim);
    read_field(doc, "eval_every", cfg.eval_every);
    read_field(doc, "checkpoint_every", cfg.checkpoint_every);
    read_field(doc, "llm_model", cfg.llm_model);
    read_field(doc, "temperature", cfg.temperature);
    read_field(doc, "prompt_dir", cfg.prompt_dir);
    read_field(doc, "variants_per_sample", cfg.variants_per_sample);
    read_field(doc, "eda_change_rate", cfg.eda_change_rate);
    read_field(doc, "eda_ops", cfg.eda_ops);

    if (doc.contains("ablations")) {
        if (!doc["ablations"].is_array()) {
            throw config_error("\"ablations\" must be an array of flag names");
        }
        for (const auto& flag : doc["ablations"]) {
            if (!flag.is_string()) throw config_error("ablation flags must be strings");
            const std::string name = flag.get<std::string>();
            if (name == "no_easy") cfg.ablations.no_easy = true;
            else if (name == "no_correct") cfg.ablations.no_correct = true;
            else if (name == "no_review") cfg.ablations.no_review = true;
            else if (name == "no_separating") cfg.ablations.no_separating = true;
            else throw config_error("unknown ablation flag \"" + name + "\"");
        }
    }

    cfg.validate();
    return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open config file: " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw config_error(path.string() + ": " + e.what());
    }
    return from_json(doc);
}

nlohmann::ordered_json RunConfig::to_json() const {
    nlohmann::ordered_json doc;
    doc["num_steps"] = num_steps;
    doc["steps_per_epoch"] = steps_per_epoch;
    doc["chat"] = chat;
    doc["review"] = review;
    doc["batch_size"] = batch_size;
    doc["threshold"] = threshold;
    doc["learning_rate"] = learning_rate;
    doc["clip_norm"] = clip_norm;
    doc["l2"] = l2;
    doc["init_epochs"] = init_epochs;
    std::vector<std::string> flags;
    if (ablations.no_easy) flags.push_back("no_easy");
    if (ablations.no_correct) flags.push_back("no_correct");
    if (ablations.no_review) flags.push_back("no_review");
    if (ablations.no_separating) flags.push_back("no_separating");
    doc["ablations"] = flags;
    doc["seed"] = seed;
    doc["feature_dim"] = feature_dim;
    doc["eval_every"] = eval_every;
    doc["checkpoint_every"] = checkpoint_every;
    doc["llm_model"] = llm_model;
    doc["temperature"] = temperature;
    doc["prompt_dir"] = prompt_dir;
    doc["variants_per_sample"] = variants_per_sample;
    doc["eda_change_rate"] = eda_change_rate;
    doc["eda_ops"] = eda_ops;
    return doc;
}

}  // namespace evokd
