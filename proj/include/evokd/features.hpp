#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace evokd::student {

/// Sparse hashed feature vector. Entries are kept sorted by index with no
/// zero weights stored.
struct FeatureVector {
    std::vector<std::pair<std::uint32_t, double>> entries;
    std::size_t dim = 0;
};

std::uint64_t fnv1a64(std::string_view data);

// Lowercased word unigrams, word bigrams and character trigrams, each hashed
// into [0, dim) with 64-bit FNV-1a. Counts are scaled by 1/sqrt(total
// feature count) so the vector norm stays bounded regardless of text length.
FeatureVector featurize(const std::string& text, std::size_t dim);

}  // namespace evokd::student
