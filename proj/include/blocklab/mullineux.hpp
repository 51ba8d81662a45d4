#pragma once

#include "blocklab/partition.hpp"

#include <utility>
#include <vector>

namespace blocklab {

struct Node {
    int row = 0;
    int col = 0;
    friend bool operator==(const Node&, const Node&) = default;
};

/// Columns (a_i, r_i): a_i nodes in the i-th successive p-rim, r_i rows of
/// the partition it was stripped from.
struct MullineuxSymbol {
    std::vector<std::pair<int, int>> columns;
    friend bool operator==(const MullineuxSymbol&, const MullineuxSymbol&) = default;
};

/// The p-rim: the rim walked from the top right in p-segments, each segment
/// restarting at the rightmost node of the row below where the previous one
/// ended. Nodes in walking order.
std::vector<Node> p_rim(const Partition& lambda, int p);

Partition remove_p_rim(const Partition& lambda, int p);

MullineuxSymbol mullineux_symbol(const Partition& lambda, int p);

/// Rebuilds the p-regular partition with the given symbol. Throws
/// InvalidInput when no such partition exists.
Partition from_mullineux_symbol(const MullineuxSymbol& symbol, int p);

/// The Mullineux map on p-regular partitions: (a_i, r_i) -> (a_i, a_i - r_i + e_i)
/// with e_i = 0 when p divides a_i and 1 otherwise.
Partition mullineux(const Partition& lambda, int p);

} // namespace blocklab
