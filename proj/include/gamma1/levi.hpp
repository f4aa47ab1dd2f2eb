#pragma once

#include <string>
#include <vector>

namespace gamma1 {

// Semistandard Levi subgroup of GL_d, given as an ordered partition of the
// coordinate indices. Indices are 0-based here; blocks are sorted internally
// and ordered by their smallest element.
class LeviDatum {
public:
    LeviDatum() = default;
    LeviDatum(int d, std::vector<std::vector<int>> blocks);

    static LeviDatum full(int d);
    static LeviDatum torus(int d);
    // Level sets of a labelling; block order follows first occurrence.
    static LeviDatum from_labels(const std::vector<int>& labels);
    // Every set partition of {0..d-1}, in a deterministic order.
    static std::vector<LeviDatum> all(int d);

    int rank() const { return d_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_of(int i) const { return block_of_[static_cast<std::size_t>(i)]; }
    // 1-based position of coordinate i inside its block.
    int position(int i) const { return pos_[static_cast<std::size_t>(i)]; }
    int block_size_of(int i) const;
    bool same_block(int i, int j) const { return block_of(i) == block_of(j); }

    std::string str() const;  // 1-based, e.g. "{1}{2,3}"

    friend bool operator==(const LeviDatum& a, const LeviDatum& b) { return a.blocks_ == b.blocks_ && a.d_ == b.d_; }
    friend bool operator!=(const LeviDatum& a, const LeviDatum& b) { return !(a == b); }

private:
    int d_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
    std::vector<int> pos_;
};

}  // namespace gamma1
