#include "blocklab/pyramid.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace blocklab {

Pyramid Pyramid::build(const Partition& core, int p) {
    require_odd_prime(p);
    if (!is_p_core(core, p))
        throw InvalidInput(to_string(core) + " is not a " + std::to_string(p) + "-core");
    Pyramid py;
    py.p_ = p;
    py.core_ = core;
    py.rho_ = runner_labels(Abacus::from_partition(core, p)).rho;
    py.bits_.assign(static_cast<std::size_t>(p * p), 0);
    for (int i = 0; i < p; ++i)
        for (int j = i; j < p; ++j) {
            int gap = py.rho_[static_cast<std::size_t>(j)] - py.rho_[static_cast<std::size_t>(i)];
            // Lowest beads of a core sit on distinct residues mod p.
            if (gap == p)
                throw std::logic_error("pyramid: runners " + std::to_string(i) + " and " + std::to_string(j) +
                                       " are exactly p apart");
            py.bits_[static_cast<std::size_t>(py.index(i, j))] = gap < p ? 1 : 0;
        }
    return py;
}

int Pyramid::entry(int i, int j) const {
    if (i < 0 || j >= p_ || i > j)
        throw InvalidInput("pyramid entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    return bits_[static_cast<std::size_t>(index(i, j))];
}

int Pyramid::entry_extended(int i, int j) const noexcept {
    if (i > j)
        return 1;
    if (i < 0 || j >= p_)
        return 0;
    return bits_[static_cast<std::size_t>(index(i, j))];
}

std::vector<int> Pyramid::row(int k) const {
    std::vector<int> out;
    for (int i = 0; i + k < p_; ++i)
        out.push_back(entry(i, i + k));
    return out;
}

bool Pyramid::is_horizontally_symmetric() const {
    for (int i = 0; i < p_; ++i)
        for (int j = i; j < p_; ++j)
            if (entry(i, j) != entry(p_ - 1 - j, p_ - 1 - i))
                return false;
    return true;
}

std::vector<int> Pyramid::middle_column() const {
    int h = (p_ - 1) / 2;
    std::vector<int> g;
    for (int k = 1; k <= h; ++k)
        g.push_back(entry(h - k, h + k));
    return g;
}

int Pyramid::delta() const {
    if (!is_self_conjugate(core_))
        throw InvalidInput("delta: core " + to_string(core_) + " is not self-conjugate");
    auto g = middle_column();
    int delta = 0;
    for (std::size_t k = 0; k < g.size(); ++k)
        if (g[k] == 1)
            delta = static_cast<int>(k) + 1;
    return delta;
}

std::string render_pyramid(const Pyramid& py) {
    int p = py.p();
    std::ostringstream os;
    for (int k = p - 1; k >= 0; --k) {
        os << std::string(static_cast<std::size_t>(k), ' ');
        auto r = py.row(k);
        for (std::size_t x = 0; x < r.size(); ++x)
            os << (x ? " " : "") << r[x];
        os << '\n';
    }
    return os.str();
}

} // namespace blocklab
