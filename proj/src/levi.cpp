#include "gamma1/levi.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace gamma1 {

LeviDatum::LeviDatum(int d, std::vector<std::vector<int>> blocks) : d_(d), blocks_(std::move(blocks)) {
    if (d < 1) throw std::invalid_argument("LeviDatum: rank must be positive");
    block_of_.assign(static_cast<std::size_t>(d), -1);
    pos_.assign(static_cast<std::size_t>(d), 0);
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("LeviDatum: empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        for (std::size_t j = 0; j < blocks_[k].size(); ++j) {
            int i = blocks_[k][j];
            if (i < 0 || i >= d || block_of_[static_cast<std::size_t>(i)] != -1)
                throw std::invalid_argument("LeviDatum: blocks must partition {1..d}");
            block_of_[static_cast<std::size_t>(i)] = static_cast<int>(k);
            pos_[static_cast<std::size_t>(i)] = static_cast<int>(j) + 1;
        }
    }
    for (int b : block_of_)
        if (b < 0) throw std::invalid_argument("LeviDatum: blocks must cover {1..d}");
}

LeviDatum LeviDatum::full(int d) {
    std::vector<int> all(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) all[static_cast<std::size_t>(i)] = i;
    return LeviDatum(d, {all});
}

LeviDatum LeviDatum::torus(int d) {
    std::vector<std::vector<int>> b;
    for (int i = 0; i < d; ++i) b.push_back({i});
    return LeviDatum(d, b);
}

LeviDatum LeviDatum::from_labels(const std::vector<int>& labels) {
    std::map<int, std::vector<int>> groups;
    for (std::size_t i = 0; i < labels.size(); ++i) groups[labels[i]].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> b;
    for (auto& [k, v] : groups) b.push_back(v);
    return LeviDatum(static_cast<int>(labels.size()), b);
}

std::vector<LeviDatum> LeviDatum::all(int d) {
    // Restricted growth strings enumerate set partitions without repetition.
    std::vector<LeviDatum> out;
    std::vector<int> label(static_cast<std::size_t>(d), 0);
    std::function<void(int, int)> rec = [&](int i, int maxl) {
        if (i == d) {
            out.push_back(from_labels(label));
            return;
        }
        for (int l = 0; l <= maxl + 1; ++l) {
            label[static_cast<std::size_t>(i)] = l;
            rec(i + 1, std::max(maxl, l));
        }
    };
    if (d >= 1) {
        label[0] = 0;
        rec(1, 0);
    }
    return out;
}

int LeviDatum::block_size_of(int i) const {
    return static_cast<int>(blocks_[static_cast<std::size_t>(block_of(i))].size());
}

std::string LeviDatum::str() const {
    std::string s;
    for (const auto& b : blocks_) {
        s += "{";
        for (std::size_t j = 0; j < b.size(); ++j) s += (j ? "," : "") + std::to_string(b[j] + 1);
        s += "}";
    }
    return s;
}

}  // namespace gamma1
