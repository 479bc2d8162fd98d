#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace streamsum {

// Lowercased word tokens: URLs, @-mentions and the "rt" marker dropped,
// hashtags kept with '#' stripped, tokens shorter than min_len (in code
// points) dropped. No stopword removal, no stemming.
std::vector<std::string> tokenize(const std::string& text, int min_len = 2);

// Relative term frequencies for one scope (sub-event minute H, or the
// game-so-far G) and one language.
class TermDistribution {
  public:
    void add(const std::vector<std::string>& tokens) {
        for (const auto& t : tokens) {
            ++counts_[t];
            ++total_;
        }
    }

    void add_one(const std::string& token) {
        ++counts_[token];
        ++total_;
    }

    std::int64_t count(const std::string& term) const {
        auto it = counts_.find(term);
        return it == counts_.end() ? 0 : it->second;
    }

    // counts[t]/total; 0 for absent terms and for an empty distribution
    double freq(const std::string& term) const {
        if (total_ == 0) return 0.0;
        return static_cast<double>(count(term)) / static_cast<double>(total_);
    }

    std::int64_t total() const { return total_; }
    const std::unordered_map<std::string, std::int64_t>& counts() const { return counts_; }

  private:
    std::unordered_map<std::string, std::int64_t> counts_;
    std::int64_t total_ = 0;
};

}  // namespace streamsum
