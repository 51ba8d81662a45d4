#pragma once

#include "blocklab/partition.hpp"
#include "blocklab/pyramid.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace blocklab {

/// Bead-move labels of a weight-2 block, runners taken by ⋖-label:
///   pair    <i,j>  lowest beads of runners i < j each go one row down;
///   doubled <i>    lowest bead of runner i goes two rows down;
///   squared <i^2>  lowest bead of runner i and the one above it each go one row down.
enum class AngleKind { pair, doubled, squared };

struct AngleLabel {
    AngleKind kind = AngleKind::pair;
    int i = 0;
    int j = 0; ///< Only meaningful for pair; equals i otherwise.

    static AngleLabel pair(int i, int j) { return {AngleKind::pair, i, j}; }
    static AngleLabel doubled(int i) { return {AngleKind::doubled, i, i}; }
    static AngleLabel squared(int i) { return {AngleKind::squared, i, i}; }

    friend auto operator<=>(const AngleLabel&, const AngleLabel&) = default;
};

std::string to_string(const AngleLabel& label);

/// Labels of the p-regular partitions, one per pyramid entry (i, j) with
/// i <= j and i < p-1.
struct CeilLabel {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const CeilLabel&, const CeilLabel&) = default;
};

std::string to_string(const CeilLabel& label);

enum class Sign { none, plus, minus };
std::string_view to_string(Sign s);

/// The p(p+3)/2 angle labels in a fixed order: pairs, then doubled, then squared.
std::vector<AngleLabel> all_angle_labels(int p);

/// Partition obtained from the core by the label's bead moves.
Partition angle_partition(const Partition& core, int p, const AngleLabel& label);

/// Six-case translation of a ceil label into its angle label.
AngleLabel ceil_to_angle(const Pyramid& py, CeilLabel c);
Partition ceil_to_partition(const Pyramid& py, CeilLabel c);

/// |leg1 - leg2| over two successive p-rim-hook removals, always removing
/// first the hook whose hand lies in the topmost row. Throws InvalidInput
/// unless the weight is 2.
int partial_value(const Partition& lambda, int p);

/// j - i - 1 + pyramid entry (i, j).
int partial_via_pyramid(const Pyramid& py, CeilLabel c);

/// Sign refining the class ∂ = 0. With two p-hooks the sign is + when the
/// larger leg is even; with a p-hook and a 2p-hook it is + when the leg of
/// the 2p-hook is 0 or 3 mod 4. Throws InvalidInput if ∂λ != 0.
Sign sign_partial0(const Partition& lambda, int p);

struct BlockRecord {
    Partition partition;
    AngleLabel angle;
    std::optional<CeilLabel> ceil;
    int partial = 0;
    Sign sign = Sign::none;
    bool regular = false;
    bool self_conjugate = false;
    bool self_mullineux = false;
};

/// Everything about the weight-2 block of a p-core.
class BlockCatalog {
public:
    /// Throws InvalidInput if `core` is not a p-core.
    static BlockCatalog build(const Partition& core, int p);

    int p() const noexcept { return p_; }
    const Partition& core() const noexcept { return core_; }
    int n() const noexcept { return core_.rank() + 2 * p_; }
    const Pyramid& pyramid() const noexcept { return pyramid_; }
    bool self_conjugate_core() const noexcept { return self_conjugate_; }

    /// Descending lexicographic order.
    const std::vector<BlockRecord>& records() const noexcept { return records_; }
    bool contains(const Partition& lambda) const;
    /// Throws InvalidInput if lambda is not in the block.
    const BlockRecord& record(const Partition& lambda) const;

    /// p-regular members, descending lexicographic order.
    std::vector<Partition> regulars() const;

    /// Members of ∂_l sorted increasingly for ⊴; for l = 0 pass the sign.
    /// Throws std::logic_error if two members are incomparable.
    std::vector<Partition> chain(int l, Sign sign = Sign::none) const;

    /// Present only for a self-conjugate core.
    std::optional<int> delta() const noexcept { return delta_; }
    /// ν_1, ..., ν_{(p-1)/2} and μ_1, ..., μ_{(p-1)/2}; empty unless the core is self-conjugate.
    const std::vector<Partition>& nu() const noexcept { return nu_; }
    const std::vector<Partition>& mu() const noexcept { return mu_; }

private:
    int p_ = 3;
    Partition core_;
    Pyramid pyramid_;
    bool self_conjugate_ = false;
    std::vector<BlockRecord> records_;
    std::optional<int> delta_;
    std::vector<Partition> nu_;
    std::vector<Partition> mu_;
};

/// Mullineux image inside a self-conjugate block: the conjugate of the
/// predecessor of μ in its chain. Throws InvalidInput when the core is not
/// self-conjugate, μ is not in the block, or μ is p-singular.
Partition mullineux_block(const BlockCatalog& cat, const Partition& mu);

/// For regular λ strictly left of τ in the pyramid (i + j < k + l), true
/// when τ is not strictly dominated by λ. Throws InvalidInput if either is
/// singular or λ is not left of τ.
bool left_right_check(const BlockCatalog& cat, const Partition& lambda, const Partition& tau);

/// The weight-1 block of a core, λ^0 ⊴ ... ⊴ λ^{p-1}, where λ^i slides the
/// lowest bead of ⋖-runner i one row down.
std::vector<Partition> weight_one_chain(const Partition& core, int p);

} // namespace blocklab
