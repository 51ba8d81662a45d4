#include "blocklab/block.hpp"

#include "blocklab/abacus.hpp"

#include <algorithm>
#include <cstdlib>

namespace blocklab {

std::string to_string(const AngleLabel& label) {
    switch (label.kind) {
    case AngleKind::pair:
        return "<" + std::to_string(label.i) + "," + std::to_string(label.j) + ">";
    case AngleKind::doubled:
        return "<" + std::to_string(label.i) + ">";
    case AngleKind::squared:
        return "<" + std::to_string(label.i) + "^2>";
    }
    return "?";
}

std::string to_string(const CeilLabel& label) {
    return "[" + std::to_string(label.i) + "," + std::to_string(label.j) + "]";
}

std::string_view to_string(Sign s) {
    switch (s) {
    case Sign::plus:
        return "+";
    case Sign::minus:
        return "-";
    case Sign::none:
        break;
    }
    return "";
}

std::vector<AngleLabel> all_angle_labels(int p) {
    require_odd_prime(p);
    std::vector<AngleLabel> out;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            out.push_back(AngleLabel::pair(i, j));
    for (int i = 0; i < p; ++i)
        out.push_back(AngleLabel::doubled(i));
    for (int i = 0; i < p; ++i)
        out.push_back(AngleLabel::squared(i));
    return out;
}

Partition angle_partition(const Partition& core, int p, const AngleLabel& label) {
    if (!is_p_core(core, p))
        throw InvalidInput(to_string(core) + " is not a " + std::to_string(p) + "-core");
    auto in_range = [p](int x) { return x >= 0 && x < p; };
    if (!in_range(label.i) || !in_range(label.j) || (label.kind == AngleKind::pair && label.i >= label.j))
        throw InvalidInput("angle label " + to_string(label) + " out of range");
    Abacus a = Abacus::from_partition(core, p);
    const auto rho = runner_labels(a).rho;
    int x = rho[static_cast<std::size_t>(label.i)];
    switch (label.kind) {
    case AngleKind::pair:
        a = slide_bead(a, x, SlideDirection::down);
        a = slide_bead(a, rho[static_cast<std::size_t>(label.j)], SlideDirection::down);
        break;
    case AngleKind::doubled:
        a = slide_bead(a, x, SlideDirection::down);
        a = slide_bead(a, x + p, SlideDirection::down);
        break;
    case AngleKind::squared:
        a = slide_bead(a, x, SlideDirection::down);
        a = slide_bead(a, x - p, SlideDirection::down);
        break;
    }
    return a.to_partition();
}

AngleLabel ceil_to_angle(const Pyramid& py, CeilLabel c) {
    int p = py.p();
    int i = c.i;
    int j = c.j;
    if (i < 0 || i > j || j >= p || i >= p - 1)
        throw InvalidInput("ceil label " + to_string(c) + " out of range");
    auto e = [&py](int a, int b) { return py.entry_extended(a, b); };
    if (i == j)
        return e(i + 1, i + 2) == 0 ? AngleLabel::doubled(i + 1) : AngleLabel::pair(i + 1, i + 2);
    if (e(i + 1, j) == 0)
        return AngleLabel::pair(i + 1, j);
    if (e(i, j) == 0)
        return AngleLabel::squared(j);
    if (e(i, j + 1) == 0)
        return AngleLabel::doubled(i);
    return AngleLabel::pair(i, j + 1);
}

Partition ceil_to_partition(const Pyramid& py, CeilLabel c) {
    return angle_partition(py.core(), py.p(), ceil_to_angle(py, c));
}

namespace {

// Hooks of length exactly `len`, topmost row first.
std::vector<HookData> hooks_of_length(const Partition& lambda, int len) {
    std::vector<HookData> out;
    for (const HookData& h : hooks(lambda))
        if (h.length == len)
            out.push_back(h);
    return out;
}

void require_weight_two(const Partition& lambda, int p) {
    if (p_core_weight(lambda, p).weight != 2)
        throw InvalidInput(to_string(lambda) + " does not have " + std::to_string(p) + "-weight 2");
}

} // namespace

int partial_value(const Partition& lambda, int p) {
    require_weight_two(lambda, p);
    auto first = hooks_of_length(lambda, p);
    const HookData& h1 = first.front();
    Partition rest = remove_rim_hook(lambda, h1.row, h1.col);
    auto second = hooks_of_length(rest, p);
    return std::abs(h1.leg - second.front().leg);
}

int partial_via_pyramid(const Pyramid& py, CeilLabel c) {
    return c.j - c.i - 1 + py.entry(c.i, c.j);
}

Sign sign_partial0(const Partition& lambda, int p) {
    if (partial_value(lambda, p) != 0)
        throw InvalidInput(to_string(lambda) + " is not in the class of partial value 0");
    auto longer = hooks_of_length(lambda, 2 * p);
    if (!longer.empty()) {
        int r = longer.front().leg % 4;
        return (r == 0 || r == 3) ? Sign::plus : Sign::minus;
    }
    auto ph = hooks_of_length(lambda, p);
    if (ph.size() != 2)
        throw std::logic_error("sign_partial0: expected two p-hooks in " + to_string(lambda));
    int larger = std::max(ph[0].leg, ph[1].leg);
    return larger % 2 == 0 ? Sign::plus : Sign::minus;
}

BlockCatalog BlockCatalog::build(const Partition& core, int p) {
    BlockCatalog cat;
    cat.pyramid_ = Pyramid::build(core, p);
    cat.p_ = p;
    cat.core_ = core;
    cat.self_conjugate_ = is_self_conjugate(core);

    for (const AngleLabel& label : all_angle_labels(p)) {
        BlockRecord r;
        r.partition = angle_partition(core, p, label);
        r.angle = label;
        r.partial = partial_value(r.partition, p);
        if (r.partial == 0)
            r.sign = sign_partial0(r.partition, p);
        r.regular = is_p_regular(r.partition, p);
        r.self_conjugate = is_self_conjugate(r.partition);
        cat.records_.push_back(std::move(r));
    }
    std::ranges::sort(cat.records_, [](const BlockRecord& a, const BlockRecord& b) { return a.partition > b.partition; });
    for (std::size_t k = 1; k < cat.records_.size(); ++k)
        if (cat.records_[k].partition == cat.records_[k - 1].partition)
            throw std::logic_error("block: two labels give " + to_string(cat.records_[k].partition));

    for (int i = 0; i < p - 1; ++i)
        for (int j = i; j < p; ++j) {
            CeilLabel c{i, j};
            Partition lambda = ceil_to_partition(cat.pyramid_, c);
            auto it = std::ranges::find_if(cat.records_, [&](const BlockRecord& r) { return r.partition == lambda; });
            if (it == cat.records_.end() || !it->regular || it->ceil)
                throw std::logic_error("block: ceil label " + to_string(c) + " is not a bijection onto regulars");
            it->ceil = c;
        }

    if (cat.self_conjugate_) {
        cat.delta_ = cat.pyramid_.delta();
        int h = (p - 1) / 2;
        for (int k = 1; k <= h; ++k) {
            cat.nu_.push_back(angle_partition(core, p, AngleLabel::pair(h - k, h + k)));
            cat.mu_.push_back(ceil_to_partition(cat.pyramid_, CeilLabel{h - k, h + k}));
        }
        for (BlockRecord& r : cat.records_)
            if (r.regular)
                r.self_mullineux = mullineux_block(cat, r.partition) == r.partition;
    }
    return cat;
}

bool BlockCatalog::contains(const Partition& lambda) const {
    return std::ranges::any_of(records_, [&](const BlockRecord& r) { return r.partition == lambda; });
}

const BlockRecord& BlockCatalog::record(const Partition& lambda) const {
    auto it = std::ranges::find_if(records_, [&](const BlockRecord& r) { return r.partition == lambda; });
    if (it == records_.end())
        throw InvalidInput(to_string(lambda) + " is not in the block of core " + to_string(core_));
    return *it;
}

std::vector<Partition> BlockCatalog::regulars() const {
    std::vector<Partition> out;
    for (const BlockRecord& r : records_)
        if (r.regular)
            out.push_back(r.partition);
    return out;
}

std::vector<Partition> BlockCatalog::chain(int l, Sign sign) const {
    if (l < 0 || l >= p_)
        throw InvalidInput("chain index " + std::to_string(l) + " out of range");
    if ((l == 0) != (sign != Sign::none))
        throw InvalidInput("a sign is required exactly for the class 0");
    std::vector<Partition> out;
    for (const BlockRecord& r : records_)
        if (r.partial == l && r.sign == sign)
            out.push_back(r.partition);
    // Lex refines dominance, so a chain sorted by lex is sorted by dominance.
    std::ranges::reverse(out);
    for (std::size_t k = 1; k < out.size(); ++k)
        if (dominance_cmp(out[k - 1], out[k]) != Dominance::less)
            throw std::logic_error("chain " + std::to_string(l) + std::string(to_string(sign)) + ": " +
                                   to_string(out[k - 1]) + " and " + to_string(out[k]) + " are incomparable");
    return out;
}

Partition mullineux_block(const BlockCatalog& cat, const Partition& mu) {
    if (!cat.self_conjugate_core())
        throw InvalidInput("mullineux_block needs a self-conjugate core");
    const BlockRecord& r = cat.record(mu);
    if (!r.regular)
        throw InvalidInput(to_string(mu) + " is " + std::to_string(cat.p()) + "-singular");
    auto ch = cat.chain(r.partial, r.sign);
    auto it = std::ranges::find(ch, mu);
    if (it == ch.begin())
        throw std::logic_error("mullineux_block: regular partition at the bottom of its chain");
    return conjugate(*(it - 1));
}

bool left_right_check(const BlockCatalog& cat, const Partition& lambda, const Partition& tau) {
    const BlockRecord& a = cat.record(lambda);
    const BlockRecord& b = cat.record(tau);
    if (!a.ceil || !b.ceil)
        throw InvalidInput("left_right_check needs regular partitions");
    if (a.ceil->i + a.ceil->j >= b.ceil->i + b.ceil->j)
        throw InvalidInput(to_string(lambda) + " is not left of " + to_string(tau));
    return dominance_cmp(tau, lambda) != Dominance::less;
}

std::vector<Partition> weight_one_chain(const Partition& core, int p) {
    if (!is_p_core(core, p))
        throw InvalidInput(to_string(core) + " is not a " + std::to_string(p) + "-core");
    Abacus a = Abacus::from_partition(core, p);
    std::vector<Partition> out;
    for (int x : runner_labels(a).rho)
        out.push_back(slide_bead(a, x, SlideDirection::down).to_partition());
    return out;
}

} // namespace blocklab
