#include "blocklab/subs.hpp"

#include "blocklab/mullineux.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace blocklab {

const Partition& Ubs::psi_of(const Partition& member) const {
    for (const auto& [from, to] : psi)
        if (from == member)
            return to;
    throw InvalidInput(to_string(member) + " is not a member of the basic set");
}

std::size_t Ubs::rank_of(const Partition& lambda) const {
    auto it = std::ranges::find(order, lambda);
    if (it == order.end())
        throw InvalidInput(to_string(lambda) + " is not in the ordered block");
    return static_cast<std::size_t>(it - order.begin());
}

void VerificationReport::merge(const VerificationReport& other) {
    passed = passed && other.passed;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

VerificationReport verify_ubs(const Ubs& u, const DecompMatrix& m) {
    VerificationReport rep;
    if (u.members.size() != m.col_count())
        rep.fail("size: " + std::to_string(u.members.size()) + " members for " + std::to_string(m.col_count()) +
                 " simple modules");
    std::map<Partition, Partition> inverse;
    for (const auto& [from, to] : u.psi) {
        if (std::ranges::find(m.cols(), to) == m.cols().end()) {
            rep.fail("psi: image " + to_string(to) + " of " + to_string(from) + " is not a column");
            continue;
        }
        if (!inverse.emplace(to, from).second)
            rep.fail("psi: " + to_string(to) + " is hit twice");
    }
    if (!rep.passed)
        return rep;
    for (const Partition& mu : u.members) {
        const Partition& d = u.psi_of(mu);
        if (m.entry(mu, d) != 1)
            rep.fail("(1): d[" + to_string(mu) + ", " + to_string(d) + "] = " + std::to_string(m.entry(mu, d)));
    }
    for (std::size_t c = 0; c < m.col_count(); ++c) {
        const Partition& tau = inverse.at(m.cols()[c]);
        std::size_t bound = u.rank_of(tau);
        for (std::size_t r = 0; r < m.row_count(); ++r)
            if (m.at(r, c) != 0 && u.rank_of(m.rows()[r]) < bound)
                rep.fail("(2): d[" + to_string(m.rows()[r]) + ", " + to_string(m.cols()[c]) + "] != 0 but " +
                         to_string(m.rows()[r]) + " is above " + to_string(tau));
    }
    return rep;
}

VerificationReport verify_stability(const std::vector<Partition>& members, int p) {
    VerificationReport rep;
    std::set<Partition> set(members.begin(), members.end());
    for (const Partition& lambda : members) {
        Partition c = conjugate(lambda);
        if (!set.contains(c))
            rep.fail("(A): " + to_string(lambda) + " is a member but " + to_string(c) + " is not");
        else if (c == lambda && !is_bg_partition(lambda, p))
            rep.fail("(B): " + to_string(lambda) + " has a diagonal hook divisible by " + std::to_string(p));
    }
    return rep;
}

VerificationReport verify_dominance(const DecompMatrix& m) {
    VerificationReport rep;
    for (std::size_t r = 0; r < m.row_count(); ++r)
        for (std::size_t c = 0; c < m.col_count(); ++c)
            if (m.at(r, c) != 0 && !dominated_by(m.rows()[r], m.cols()[c]))
                rep.fail("dominance: d[" + to_string(m.rows()[r]) + ", " + to_string(m.cols()[c]) + "] != 0");
    return rep;
}

Ubs regular_baseline_ubs(const Partition& core, int p, const DecompMatrix& m) {
    Ubs u;
    u.core = core;
    u.p = p;
    u.order = m.rows();
    std::ranges::sort(u.order, std::greater<>{});
    for (const Partition& lambda : u.order)
        if (std::ranges::find(m.cols(), lambda) != m.cols().end()) {
            u.members.push_back(lambda);
            u.psi.emplace_back(lambda, lambda);
        }
    return u;
}

SubsW2 build_subs_w2(const BlockCatalog& cat) {
    if (!cat.self_conjugate_core())
        throw InvalidInput("build_subs_w2 needs a self-conjugate core, got " + to_string(cat.core()));
    SubsW2 s;
    for (const Partition& lambda : cat.regulars())
        if (mullineux_block(cat, lambda) < lambda)
            s.v1.push_back(lambda);
    for (const Partition& lambda : s.v1)
        s.v2.push_back(conjugate(lambda));

    s.delta = *cat.delta();
    int h = (cat.p() - 1) / 2;
    std::vector<int> ks;
    for (int k = 1; k <= s.delta; ++k)
        ks.push_back(k);
    for (int k = h; k > s.delta; --k)
        ks.push_back(k);
    std::vector<Partition> images;
    for (int k : ks) {
        s.v3.push_back(cat.nu()[static_cast<std::size_t>(k - 1)]);
        images.push_back(cat.mu()[static_cast<std::size_t>(k - 1)]);
    }

    Ubs& u = s.ubs;
    u.core = cat.core();
    u.p = cat.p();
    for (const Partition& lambda : s.v1)
        u.psi.emplace_back(lambda, lambda);
    for (const Partition& lambda : s.v2)
        u.psi.emplace_back(lambda, mullineux_block(cat, conjugate(lambda)));
    for (std::size_t k = 0; k < s.v3.size(); ++k)
        u.psi.emplace_back(s.v3[k], images[k]);
    for (const auto& entry : u.psi)
        u.members.push_back(entry.first);
    u.order = u.members;
    std::set<Partition> in_v(u.members.begin(), u.members.end());
    for (const BlockRecord& r : cat.records())
        if (!in_v.contains(r.partition))
            u.order.push_back(r.partition);
    return s;
}

DecompMatrix subs_matrix(const SubsW2& s, const DecompMatrix& full) {
    std::vector<Partition> cols;
    for (const Partition& member : s.ubs.members)
        cols.push_back(s.ubs.psi_of(member));
    return submatrix(full, s.ubs.members, cols);
}

namespace {

bool block_is_zero(const DecompMatrix& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    for (std::size_t r = r0; r < r1; ++r)
        for (std::size_t c = c0; c < c1; ++c)
            if (m.at(r, c) != 0)
                return false;
    return true;
}

} // namespace

VerificationReport verify_zero_pattern(const SubsW2& s, const DecompMatrix& full) {
    VerificationReport rep;
    DecompMatrix d = subs_matrix(s, full);
    if (!is_lower_unitriangular(d))
        rep.fail("matrix over V is not lower unitriangular");
    std::size_t t = s.v1.size();
    std::size_t h = s.v3.size();
    if (!block_is_zero(d, 0, t, t, 2 * t))
        rep.fail("D2 is not zero");
    if (!block_is_zero(d, t, 2 * t, 0, t))
        rep.fail("D3 is not zero");
    if (!block_is_zero(d, 0, 2 * t, 2 * t, 2 * t + h))
        rep.fail("D5 is not zero");
    for (std::size_t r = 0; r < t; ++r)
        for (std::size_t c = 0; c < t; ++c)
            if (d.at(r, c) != d.at(t + r, t + c))
                rep.fail("D1 and D4 differ at (" + std::to_string(r) + "," + std::to_string(c) + ")");
    std::vector<Partition> v3_cols;
    for (const Partition& nu : s.v3)
        v3_cols.push_back(s.ubs.psi_of(nu));
    if (!is_lower_unitriangular(submatrix(full, s.v3, v3_cols)))
        rep.fail("D6 is not lower unitriangular");
    return rep;
}

namespace {

// Greatest-first linear extension of "tau above lambda" constraints, taking
// the lexicographically largest available partition at each step. Anything
// left on a cycle is appended lex-descending so that verification reports it.
std::vector<Partition> constrained_order(const std::vector<Partition>& block,
                                         const std::vector<std::pair<Partition, Partition>>& above) {
    std::map<Partition, int> indegree;
    std::map<Partition, std::vector<Partition>> below;
    for (const Partition& lambda : block)
        indegree[lambda] = 0;
    for (const auto& [hi, lo] : above) {
        below[hi].push_back(lo);
        ++indegree[lo];
    }
    std::set<Partition, std::greater<>> ready;
    for (const auto& [lambda, deg] : indegree)
        if (deg == 0)
            ready.insert(lambda);
    std::vector<Partition> out;
    while (!ready.empty()) {
        Partition top = *ready.begin();
        ready.erase(ready.begin());
        out.push_back(top);
        for (const Partition& lo : below[top])
            if (--indegree[lo] == 0)
                ready.insert(lo);
    }
    if (out.size() != block.size()) {
        std::set<Partition> placed(out.begin(), out.end());
        std::vector<Partition> rest;
        for (const Partition& lambda : block)
            if (!placed.contains(lambda))
                rest.push_back(lambda);
        std::ranges::sort(rest, std::greater<>{});
        out.insert(out.end(), rest.begin(), rest.end());
    }
    return out;
}

} // namespace

PairSubs build_subs_odd_or_split(const Partition& core, int p, int weight) {
    if (!is_p_core(core, p))
        throw InvalidInput(to_string(core) + " is not a " + std::to_string(p) + "-core");
    bool self_conjugate = is_self_conjugate(core);
    if (weight != 1 && weight != 2)
        throw InvalidInput("only weights 1 and 2 are supported");
    if (weight == 2 && self_conjugate)
        throw InvalidInput("weight 2 with a self-conjugate core is the V construction, not this one");

    std::vector<Partition> cores{core};
    if (!self_conjugate)
        cores.push_back(conjugate(core));

    PairSubs out;
    std::vector<DecompMatrix> mats;
    std::set<Partition> u1;
    std::set<Partition> u3;
    for (const Partition& c : cores) {
        mats.push_back(block_decomp_matrix(c, p, weight));
        for (const Partition& lambda : mats.back().cols()) {
            Partition image = mullineux(lambda, p);
            if (image < lambda)
                u1.insert(lambda);
            else if (image == lambda)
                u3.insert(lambda);
        }
    }

    for (std::size_t b = 0; b < cores.size(); ++b) {
        const DecompMatrix& m = mats[b];
        Ubs u;
        u.core = cores[b];
        u.p = p;
        for (const Partition& lambda : m.rows()) {
            if (u1.contains(lambda) || u3.contains(lambda))
                u.psi.emplace_back(lambda, lambda);
            else if (u1.contains(conjugate(lambda)))
                u.psi.emplace_back(lambda, mullineux(conjugate(lambda), p));
        }
        std::vector<std::pair<Partition, Partition>> above;
        std::map<Partition, Partition> inverse;
        for (const auto& [from, to] : u.psi)
            inverse.emplace(to, from);
        for (std::size_t c = 0; c < m.col_count(); ++c) {
            auto it = inverse.find(m.cols()[c]);
            if (it == inverse.end())
                continue;
            for (std::size_t r = 0; r < m.row_count(); ++r)
                if (m.at(r, c) != 0 && m.rows()[r] != it->second)
                    above.emplace_back(it->second, m.rows()[r]);
        }
        u.order = constrained_order(m.rows(), above);
        for (const Partition& lambda : u.order)
            if (std::ranges::any_of(u.psi, [&](const auto& e) { return e.first == lambda; }))
                u.members.push_back(lambda);
        out.members.insert(out.members.end(), u.members.begin(), u.members.end());
        out.blocks.push_back(std::move(u));
        out.matrices.push_back(m);
    }
    return out;
}

long long self_mullineux_census(const Partition& core, int p, int weight) {
    require_odd_prime(p);
    if (!is_p_core(core, p) || !is_self_conjugate(core))
        throw InvalidInput(to_string(core) + " is not a self-conjugate " + std::to_string(p) + "-core");
    if (weight < 0)
        throw InvalidInput("negative weight");
    if (weight % 2 != 0)
        return 0;
    int k = weight / 2;
    int h = (p - 1) / 2;
    // Multipartitions with h components: h-fold convolution of partition counts.
    std::vector<long long> parts(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j)
        parts[static_cast<std::size_t>(j)] = static_cast<long long>(enumerate_partitions(j).size());
    std::vector<long long> acc(static_cast<std::size_t>(k) + 1, 0);
    acc[0] = 1;
    for (int c = 0; c < h; ++c) {
        std::vector<long long> next(acc.size(), 0);
        for (int a = 0; a <= k; ++a)
            for (int b = 0; a + b <= k; ++b)
                next[static_cast<std::size_t>(a + b)] += acc[static_cast<std::size_t>(a)] * parts[static_cast<std::size_t>(b)];
        acc = std::move(next);
    }
    return acc[static_cast<std::size_t>(k)];
}

} // namespace blocklab
