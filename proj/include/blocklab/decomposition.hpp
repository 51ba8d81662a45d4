#pragma once

#include "blocklab/block.hpp"
#include "blocklab/partition.hpp"

#include <string>
#include <vector>

namespace blocklab {

/// 0/1 matrix with its row and column orders carried as data.
class DecompMatrix {
public:
    DecompMatrix() = default;
    DecompMatrix(std::vector<Partition> rows, std::vector<Partition> cols);

    const std::vector<Partition>& rows() const noexcept { return rows_; }
    const std::vector<Partition>& cols() const noexcept { return cols_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    std::size_t col_count() const noexcept { return cols_.size(); }

    int at(std::size_t r, std::size_t c) const { return bits_.at(r * cols_.size() + c); }
    void set(std::size_t r, std::size_t c, int v) { bits_.at(r * cols_.size() + c) = static_cast<unsigned char>(v); }

    /// Entry by labels. Throws InvalidInput on an unknown label.
    int entry(const Partition& row, const Partition& col) const;

    std::size_t row_index(const Partition& row) const;
    std::size_t col_index(const Partition& col) const;

    friend bool operator==(const DecompMatrix&, const DecompMatrix&) = default;

private:
    std::vector<Partition> rows_;
    std::vector<Partition> cols_;
    std::vector<unsigned char> bits_;
};

/// Restriction keeping the given orders. Throws InvalidInput on unknown labels.
DecompMatrix submatrix(const DecompMatrix& m, const std::vector<Partition>& rows, const std::vector<Partition>& cols);

/// Square, ones on the diagonal, zeros above it.
bool is_lower_unitriangular(const DecompMatrix& m);

/// Header row and first column hold labels like "4+2+2+1".
std::string to_csv(const DecompMatrix& m);
/// Aligned table, '·' for 0.
std::string to_text(const DecompMatrix& m);

/// Weight-2 decomposition number: 1 when λ = μ, λ = m(μ)', or
/// m(μ)' ⊴ λ ⊴ μ with ∂λ - ∂μ = ±1; 0 otherwise. m comes from the chains for
/// a self-conjugate core and from the symbol algorithm otherwise.
int decomp_number(const BlockCatalog& cat, const Partition& lambda, const Partition& mu);

/// Rows: the block, columns: its regulars, both descending lexicographic.
DecompMatrix decomp_matrix(const BlockCatalog& cat);

/// Decomposition matrix of the block of `core` of weight 0, 1 or 2, rows and
/// columns in descending lexicographic order.
DecompMatrix block_decomp_matrix(const Partition& core, int p, int weight);

/// Whole-n matrix assembled from blocks; every block must have weight at most
/// 2, otherwise InvalidInput. Rows and columns descending lexicographic.
DecompMatrix decomp_matrix_n(int n, int p, int bound = default_enumeration_bound);

/// Decomposition matrix of S_4 in characteristic 3.
DecompMatrix d43_reference();

} // namespace blocklab
