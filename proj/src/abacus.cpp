#include "blocklab/abacus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace blocklab {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

int floor_mod(int a, int b) { return a - b * floor_div(a, b); }

Partition partition_from_beads(std::vector<int> beads) {
    std::ranges::sort(beads, std::greater<>{});
    std::vector<int> parts(beads.size());
    for (std::size_t i = 0; i < beads.size(); ++i)
        parts[i] = beads[i] + static_cast<int>(i) + 1;
    return Partition(std::move(parts));
}

} // namespace

Abacus::Abacus(int p, Partition lambda) : p_(p), partition_(std::move(lambda)) {
    int count = ((partition_.length() + p - 1) / p) * p;
    beads_.resize(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i)
        beads_[static_cast<std::size_t>(i - 1)] = partition_.part(i) - i;
}

Abacus Abacus::from_partition(const Partition& lambda, int p) {
    require_odd_prime(p);
    return Abacus(p, lambda);
}

bool Abacus::has_bead(int position) const {
    if (position < threshold())
        return true;
    return std::binary_search(beads_.begin(), beads_.end(), position, std::greater<>{});
}

int Abacus::column_of(int position) const noexcept { return floor_mod(position, p_); }

int Abacus::row_of(int position) const noexcept { return floor_div(position, p_); }

std::vector<int> Abacus::lowest_beads() const {
    std::vector<int> lowest(static_cast<std::size_t>(p_));
    std::vector<bool> seen(static_cast<std::size_t>(p_), false);
    for (int b : beads_) {
        auto c = static_cast<std::size_t>(column_of(b));
        if (!seen[c]) {
            seen[c] = true;
            lowest[c] = b;
        }
    }
    // Columns with no bead in the window have their lowest bead just below it.
    for (int x = threshold() - 1; x >= threshold() - p_; --x) {
        auto c = static_cast<std::size_t>(column_of(x));
        if (!seen[c]) {
            seen[c] = true;
            lowest[c] = x;
        }
    }
    return lowest;
}

int Abacus::beads_between(int from, int to) const {
    int lo = std::min(from, to);
    int hi = std::max(from, to);
    int count = 0;
    for (int x = lo + 1; x < hi; ++x)
        count += has_bead(x) ? 1 : 0;
    return count;
}

RunnerLabels runner_labels(const Abacus& a) {
    Abacus core = raise_all(a);
    RunnerLabels out;
    auto lowest = core.lowest_beads();
    int p = a.p();
    out.column_of_label.resize(static_cast<std::size_t>(p));
    std::iota(out.column_of_label.begin(), out.column_of_label.end(), 0);
    std::ranges::sort(out.column_of_label, [&](int x, int y) {
        return lowest[static_cast<std::size_t>(x)] < lowest[static_cast<std::size_t>(y)];
    });
    out.label_of_column.resize(static_cast<std::size_t>(p));
    out.rho.resize(static_cast<std::size_t>(p));
    for (int label = 0; label < p; ++label) {
        int col = out.column_of_label[static_cast<std::size_t>(label)];
        out.label_of_column[static_cast<std::size_t>(col)] = label;
        out.rho[static_cast<std::size_t>(label)] = lowest[static_cast<std::size_t>(col)];
    }
    return out;
}

Abacus slide_bead(const Abacus& a, int position, SlideDirection dir) {
    int target = dir == SlideDirection::down ? position + a.p() : position - a.p();
    if (!a.has_bead(position))
        throw InvalidInput("slide_bead: no bead at position " + std::to_string(position));
    if (a.has_bead(target))
        throw InvalidInput("slide_bead: position " + std::to_string(target) + " is occupied");
    // Widen the window so that both positions are explicit.
    int lowest = std::min({position, target, a.threshold()});
    std::vector<int> beads = a.window_beads();
    for (int x = a.threshold() - 1; x >= lowest - a.p(); --x)
        beads.push_back(x);
    std::erase(beads, position);
    beads.push_back(target);
    return Abacus::from_partition(partition_from_beads(std::move(beads)), a.p());
}

int slide_leg_length(const Abacus& a, int position, SlideDirection dir) {
    int target = dir == SlideDirection::down ? position + a.p() : position - a.p();
    return a.beads_between(position, target);
}

Abacus raise_all(const Abacus& a) {
    int p = a.p();
    std::vector<int> counts(static_cast<std::size_t>(p), 0);
    for (int b : a.window_beads())
        ++counts[static_cast<std::size_t>(a.column_of(b))];
    // Beads on column c pack upward from the first window row.
    std::vector<int> beads;
    int top_row = a.row_of(a.threshold());
    for (int c = 0; c < p; ++c)
        for (int k = 0; k < counts[static_cast<std::size_t>(c)]; ++k)
            beads.push_back(c + p * (top_row + k));
    return Abacus::from_partition(partition_from_beads(std::move(beads)), p);
}

Abacus conjugate_abacus(const Abacus& a) {
    // Runner c swaps with p-1-c and each runner is read upside down with beads
    // and gaps exchanged; on positions this is x -> -1 - x applied to gaps.
    std::vector<int> beads;
    int top = a.window_beads().empty() ? -1 : a.window_beads().front();
    for (int x = a.threshold(); x <= top; ++x)
        if (!a.has_bead(x))
            beads.push_back(-1 - x);
    // Gaps above the highest bead become the cofinite tail; keep enough of it
    // to cover every part of the conjugate.
    int tail_len = a.bead_count();
    for (int k = 0; k < tail_len; ++k)
        beads.push_back(-2 - top - k);
    return Abacus::from_partition(partition_from_beads(std::move(beads)), a.p());
}

std::vector<Partition> p_quotient(const Abacus& a) {
    RunnerLabels labels = runner_labels(a);
    int p = a.p();
    int top_row = a.row_of(a.threshold());
    std::vector<Partition> out;
    out.reserve(static_cast<std::size_t>(p));
    for (int label = 0; label < p; ++label) {
        int col = labels.column_of_label[static_cast<std::size_t>(label)];
        std::vector<int> parts;
        int empties = 0;
        int lowest_row = a.row_of(a.lowest_beads()[static_cast<std::size_t>(col)]);
        std::vector<int> bead_parts;
        for (int row = top_row; row <= lowest_row; ++row) {
            if (a.has_bead(col + p * row))
                bead_parts.push_back(empties);
            else
                ++empties;
        }
        std::ranges::reverse(bead_parts);
        out.emplace_back(std::move(bead_parts));
    }
    return out;
}

Partition from_core_and_quotient(const Partition& core, const std::vector<Partition>& quotient, int p) {
    require_odd_prime(p);
    if (static_cast<int>(quotient.size()) != p)
        throw InvalidInput("from_core_and_quotient: quotient must have p components");
    int weight = 0;
    for (const auto& q : quotient)
        weight += q.rank();
    // Pad the core window so every runner has room for its quotient component.
    Abacus base = Abacus::from_partition(core, p);
    if (!is_p_core(core, p))
        throw InvalidInput("from_core_and_quotient: " + to_string(core) + " is not a " + std::to_string(p) + "-core");
    RunnerLabels labels = runner_labels(base);
    int extra_rows = weight + 1;
    int lowest_window = base.threshold() - p * extra_rows;
    std::vector<int> beads;
    for (int label = 0; label < p; ++label) {
        int top = labels.rho[static_cast<std::size_t>(label)];
        const Partition& q = quotient[static_cast<std::size_t>(label)];
        // i-th bead from the bottom of the runner moves down q_i rows.
        int i = 1;
        for (int x = top; x >= lowest_window; x -= p, ++i)
            beads.push_back(x + p * q.part(i));
    }
    return partition_from_beads(std::move(beads));
}

std::string render_abacus(const Abacus& a) {
    int p = a.p();
    RunnerLabels labels = runner_labels(a);
    std::ostringstream os;
    for (int c = 0; c < p; ++c)
        os << (c ? " " : "") << labels.label_of_column[static_cast<std::size_t>(c)];
    os << '\n';
    int first_row = a.row_of(a.threshold()) - 1;
    int top = a.window_beads().empty() ? a.threshold() : a.window_beads().front();
    int last_row = a.row_of(top) + 1;
    for (int row = first_row; row <= last_row; ++row) {
        for (int c = 0; c < p; ++c)
            os << (c ? " " : "") << (a.has_bead(c + p * row) ? 'o' : '.');
        os << '\n';
    }
    return os.str();
}

} // namespace blocklab
