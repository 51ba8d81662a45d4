#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace blocklab {

/// Raised for malformed input: bad partition strings, non-prime p, nodes
/// outside a diagram, partitions outside the expected block.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws InvalidInput unless p is an odd prime.
void require_odd_prime(int p);
bool is_odd_prime(int p);

/// An integer partition stored as its non-zero parts, weakly decreasing.
///
/// Rows and columns of the Young diagram are 1-based throughout the library,
/// so part(1) is the first row and part(i) is 0 once i exceeds the length.
class Partition {
public:
    Partition() = default;
    /// Trailing zeros are dropped; negative or increasing parts throw.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    /// Parses "4,2,2,1" (whitespace tolerated, empty string is the empty partition).
    static Partition parse(std::string_view text);

    int rank() const noexcept { return rank_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int part(int i) const noexcept {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    std::span<const int> parts() const noexcept { return parts_; }

    /// Same ordering as the lexicographic order on partitions: the first
    /// differing part decides, missing parts count as 0.
    friend auto operator<=>(const Partition& a, const Partition& b) = default;
    friend bool operator==(const Partition& a, const Partition& b) = default;

private:
    std::vector<int> parts_;
    int rank_ = 0;
};

/// "(4,2^2,1)" with exponents for repeated parts, "()" for the empty partition.
std::string to_string(const Partition& lambda);
/// "4,2,2,1" as accepted by Partition::parse.
std::string to_csv_string(const Partition& lambda);
/// "4+2+2+1" as used in CSV matrix headers.
std::string to_plus_string(const Partition& lambda);
/// One row of '#' per part.
std::string young_diagram(const Partition& lambda);
std::ostream& operator<<(std::ostream& os, const Partition& lambda);

Partition conjugate(const Partition& lambda);
bool is_self_conjugate(const Partition& lambda);

enum class Dominance { less, equal, greater, incomparable };
std::string_view to_string(Dominance d);

/// Dominance order; both partitions must have the same rank.
Dominance dominance_cmp(const Partition& lambda, const Partition& mu);
/// lambda ⊴ mu (less or equal).
bool dominated_by(const Partition& lambda, const Partition& mu);

std::strong_ordering lex_cmp(const Partition& lambda, const Partition& mu);

struct HookData {
    int row = 0;
    int col = 0;
    int length = 0;
    int arm = 0;
    int leg = 0;
};

HookData hook(const Partition& lambda, int row, int col);
/// One entry per node, row-major order.
std::vector<HookData> hooks(const Partition& lambda);

bool is_p_regular(const Partition& lambda, int p);

/// Removes the rim hook attached to node (row, col) by diagram surgery.
Partition remove_rim_hook(const Partition& lambda, int row, int col);

struct CoreWeight {
    Partition core;
    int weight = 0;
};

/// Greedy removal of p-rim-hooks on the diagram until none is left.
CoreWeight p_core_weight(const Partition& lambda, int p);
bool is_p_core(const Partition& lambda, int p);

bool is_bg_partition(const Partition& lambda, int p);

inline constexpr int default_enumeration_bound = 120;

/// All partitions of n in descending lexicographic order.
std::vector<Partition> enumerate_partitions(int n, int bound = default_enumeration_bound);

/// Self-conjugate partitions of n, descending lexicographic order.
std::vector<Partition> enumerate_self_conjugate(int n);

} // namespace blocklab
