#pragma once

#include "blocklab/abacus.hpp"
#include "blocklab/partition.hpp"

#include <string>
#include <vector>

namespace blocklab {

/// Triangular 0/1 array attached to a p-core.
///
/// Entry (i, j), 0 <= i <= j <= p-1, is 1 exactly when the lowest beads of
/// the runners labelled i and j are less than p positions apart. Row k of the
/// pyramid holds the entries with j - i = k; row 0 is the base and the apex
/// is (0, p-1).
class Pyramid {
public:
    /// Throws InvalidInput if `core` is not a p-core.
    static Pyramid build(const Partition& core, int p);

    int p() const noexcept { return p_; }
    const Partition& core() const noexcept { return core_; }
    const std::vector<int>& rho() const noexcept { return rho_; }

    /// Stored entry; requires 0 <= i <= j < p.
    int entry(int i, int j) const;

    /// Entry with the out-of-range convention: 1 when i > j, 0 when i < 0 or
    /// j >= p, the stored value otherwise.
    int entry_extended(int i, int j) const noexcept;

    /// Entries of row k, left to right.
    std::vector<int> row(int k) const;

    int apex() const { return entry(0, p_ - 1); }

    bool is_horizontally_symmetric() const;

    /// Cut-off of the 1-entries going up the middle column. Requires a
    /// self-conjugate core.
    int delta() const;

    /// g_1, ..., g_{(p-1)/2}: middle-column entries above the base.
    std::vector<int> middle_column() const;

    friend bool operator==(const Pyramid& a, const Pyramid& b) {
        return a.p_ == b.p_ && a.bits_ == b.bits_;
    }

private:
    int index(int i, int j) const noexcept { return i * p_ + j; }

    int p_ = 3;
    Partition core_;
    std::vector<int> rho_;
    std::vector<unsigned char> bits_;
};

/// Row p-1 on top, row 0 at the bottom, entries centred like a triangle.
std::string render_pyramid(const Pyramid& py);

} // namespace blocklab
