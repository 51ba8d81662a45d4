#pragma once

#include "blocklab/partition.hpp"

#include <string>
#include <vector>

namespace blocklab {

/// Runner ordering on the abacus of a p-core.
///
/// Runners are ranked by their lowest bead: fewer beads first, and among
/// runners with equal bead count the physically leftmost first. Since a lower
/// bead position means fewer beads (or same count further left), this is the
/// same as sorting the lowest-bead positions.
struct RunnerLabels {
    /// Lowest-bead positions sorted increasingly, rho[0] < ... < rho[p-1].
    std::vector<int> rho;
    /// label_of_column[c] is the rank of physical column c.
    std::vector<int> label_of_column;
    /// Inverse of label_of_column.
    std::vector<int> column_of_label;
};

enum class SlideDirection { down, up };

/// The p-abacus of a partition.
///
/// Bead positions are the beta-numbers λ_i - i. Only a finite window is
/// stored: the first `bead_count()` beta-numbers, where the count is the
/// smallest multiple of p that is at least the length of the partition.
/// Every position below the window is a bead. Physical column of a position x
/// is x mod p (non-negative residue) and its row is floor(x / p).
class Abacus {
public:
    static Abacus from_partition(const Partition& lambda, int p);

    int p() const noexcept { return p_; }
    Partition to_partition() const { return partition_; }

    /// Beads inside the window, descending.
    const std::vector<int>& window_beads() const noexcept { return beads_; }
    int bead_count() const noexcept { return static_cast<int>(beads_.size()); }
    /// Lowest position of the window; every smaller position holds a bead.
    int threshold() const noexcept { return -bead_count(); }

    bool has_bead(int position) const;

    int column_of(int position) const noexcept;
    int row_of(int position) const noexcept;

    /// Lowest bead position on each physical column.
    std::vector<int> lowest_beads() const;

    /// Number of beads strictly between `from` and `to`.
    int beads_between(int from, int to) const;

    friend bool operator==(const Abacus& a, const Abacus& b) {
        return a.p_ == b.p_ && a.beads_ == b.beads_;
    }

private:
    Abacus(int p, Partition lambda);

    int p_ = 3;
    Partition partition_;
    std::vector<int> beads_;
};

/// ⋖-labels of the runners. Defined on the core; for a general partition the
/// labels of its core are returned (bead counts per runner agree).
RunnerLabels runner_labels(const Abacus& a);

/// Moves the bead at `position` one row down (adds a p-rim-hook) or up
/// (removes one). Throws InvalidInput on an occupancy violation.
Abacus slide_bead(const Abacus& a, int position, SlideDirection dir);

/// Leg length of the rim hook added or removed by that move.
int slide_leg_length(const Abacus& a, int position, SlideDirection dir);

/// Slides every bead as far up as it goes.
Abacus raise_all(const Abacus& a);

/// Swaps each runner with its opposite, then reverses every runner.
Abacus conjugate_abacus(const Abacus& a);

/// p-quotient, runners taken in ⋖-label order.
std::vector<Partition> p_quotient(const Abacus& a);

/// Inverse of (core, p_quotient): rebuilds the partition.
Partition from_core_and_quotient(const Partition& core, const std::vector<Partition>& quotient, int p);

/// ASCII drawing: a header of ⋖ labels then one line per row,
/// 'o' for a bead and '.' for an empty position.
std::string render_abacus(const Abacus& a);

} // namespace blocklab
