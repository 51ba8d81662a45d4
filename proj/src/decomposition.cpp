#include "blocklab/decomposition.hpp"

#include "blocklab/mullineux.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

namespace blocklab {

DecompMatrix::DecompMatrix(std::vector<Partition> rows, std::vector<Partition> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)), bits_(rows_.size() * cols_.size(), 0) {}

std::size_t DecompMatrix::row_index(const Partition& row) const {
    auto it = std::ranges::find(rows_, row);
    if (it == rows_.end())
        throw InvalidInput("no row labelled " + to_string(row));
    return static_cast<std::size_t>(it - rows_.begin());
}

std::size_t DecompMatrix::col_index(const Partition& col) const {
    auto it = std::ranges::find(cols_, col);
    if (it == cols_.end())
        throw InvalidInput("no column labelled " + to_string(col));
    return static_cast<std::size_t>(it - cols_.begin());
}

int DecompMatrix::entry(const Partition& row, const Partition& col) const {
    return at(row_index(row), col_index(col));
}

DecompMatrix submatrix(const DecompMatrix& m, const std::vector<Partition>& rows, const std::vector<Partition>& cols) {
    DecompMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::size_t src_r = m.row_index(rows[r]);
        for (std::size_t c = 0; c < cols.size(); ++c)
            out.set(r, c, m.at(src_r, m.col_index(cols[c])));
    }
    return out;
}

bool is_lower_unitriangular(const DecompMatrix& m) {
    if (m.row_count() != m.col_count())
        return false;
    for (std::size_t r = 0; r < m.row_count(); ++r) {
        if (m.at(r, r) != 1)
            return false;
        for (std::size_t c = r + 1; c < m.col_count(); ++c)
            if (m.at(r, c) != 0)
                return false;
    }
    return true;
}

std::string to_csv(const DecompMatrix& m) {
    std::ostringstream os;
    os << "partition";
    for (const auto& c : m.cols())
        os << ',' << to_plus_string(c);
    os << '\n';
    for (std::size_t r = 0; r < m.row_count(); ++r) {
        os << to_plus_string(m.rows()[r]);
        for (std::size_t c = 0; c < m.col_count(); ++c)
            os << ',' << m.at(r, c);
        os << '\n';
    }
    return os.str();
}

std::string to_text(const DecompMatrix& m) {
    std::size_t width = 0;
    for (const auto& r : m.rows())
        width = std::max(width, to_string(r).size());
    std::ostringstream os;
    for (std::size_t r = 0; r < m.row_count(); ++r) {
        std::string label = to_string(m.rows()[r]);
        os << label << std::string(width - label.size(), ' ') << " |";
        for (std::size_t c = 0; c < m.col_count(); ++c)
            os << ' ' << (m.at(r, c) ? "1" : "·");
        os << '\n';
    }
    return os.str();
}

namespace {

Partition mullineux_in_block(const BlockCatalog& cat, const Partition& mu) {
    if (cat.self_conjugate_core())
        return mullineux_block(cat, mu);
    return mullineux(mu, cat.p());
}

} // namespace

int decomp_number(const BlockCatalog& cat, const Partition& lambda, const Partition& mu) {
    const BlockRecord& rl = cat.record(lambda);
    const BlockRecord& rm = cat.record(mu);
    if (!rm.regular)
        throw InvalidInput(to_string(mu) + " is " + std::to_string(cat.p()) + "-singular");
    if (lambda == mu)
        return 1;
    Partition low = conjugate(mullineux_in_block(cat, mu));
    if (lambda == low)
        return 1;
    if (std::abs(rl.partial - rm.partial) != 1)
        return 0;
    return dominated_by(low, lambda) && dominated_by(lambda, mu) ? 1 : 0;
}

DecompMatrix decomp_matrix(const BlockCatalog& cat) {
    std::vector<Partition> rows;
    for (const auto& r : cat.records())
        rows.push_back(r.partition);
    DecompMatrix m(std::move(rows), cat.regulars());
    for (std::size_t r = 0; r < m.row_count(); ++r)
        for (std::size_t c = 0; c < m.col_count(); ++c)
            m.set(r, c, decomp_number(cat, m.rows()[r], m.cols()[c]));
    return m;
}

DecompMatrix block_decomp_matrix(const Partition& core, int p, int weight) {
    if (!is_p_core(core, p))
        throw InvalidInput(to_string(core) + " is not a " + std::to_string(p) + "-core");
    switch (weight) {
    case 0: {
        DecompMatrix m({core}, {core});
        m.set(0, 0, 1);
        return m;
    }
    case 1: {
        // λ^0 ⊴ ... ⊴ λ^{p-1}; column λ^j (j >= 1) has 1s at λ^j and λ^{j-1}.
        auto chain = weight_one_chain(core, p);
        std::vector<Partition> rows(chain.rbegin(), chain.rend());
        std::vector<Partition> cols(rows.begin(), rows.end() - 1);
        DecompMatrix m(rows, cols);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            m.set(c, c, 1);
            m.set(c + 1, c, 1);
        }
        return m;
    }
    case 2:
        return decomp_matrix(BlockCatalog::build(core, p));
    default:
        throw InvalidInput("decomposition numbers are only available up to weight 2");
    }
}

DecompMatrix decomp_matrix_n(int n, int p, int bound) {
    require_odd_prime(p);
    auto all = enumerate_partitions(n, bound);
    std::vector<Partition> cols;
    std::map<Partition, CoreWeight> info;
    for (const auto& lambda : all) {
        info.emplace(lambda, p_core_weight(lambda, p));
        if (is_p_regular(lambda, p))
            cols.push_back(lambda);
    }
    DecompMatrix m(all, cols);
    std::map<Partition, DecompMatrix> blocks;
    for (const auto& lambda : all) {
        const CoreWeight& cw = info.at(lambda);
        if (cw.weight > 2)
            throw InvalidInput("n=" + std::to_string(n) + " has a block of " + std::to_string(p) + "-weight " +
                               std::to_string(cw.weight));
        if (!blocks.contains(cw.core))
            blocks.emplace(cw.core, block_decomp_matrix(cw.core, p, cw.weight));
    }
    for (std::size_t r = 0; r < all.size(); ++r) {
        const CoreWeight& rw = info.at(all[r]);
        const DecompMatrix& b = blocks.at(rw.core);
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (info.at(cols[c]).core == rw.core)
                m.set(r, c, b.entry(all[r], cols[c]));
    }
    return m;
}

DecompMatrix d43_reference() {
    DecompMatrix m({{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}, {{4}, {3, 1}, {2, 2}, {2, 1, 1}});
    const int golden[5][4] = {
        {1, 0, 0, 0},
        {0, 1, 0, 0},
        {1, 0, 1, 0},
        {0, 0, 0, 1},
        {0, 0, 1, 0},
    };
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            m.set(r, c, golden[r][c]);
    return m;
}

} // namespace blocklab
