#include "blocklab/sweep.hpp"

#include "blocklab/block.hpp"
#include "blocklab/decomposition.hpp"
#include "blocklab/mullineux.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace blocklab {

std::vector<Partition> enumerate_cores(int p, int max_rank) {
    require_odd_prime(p);
    std::vector<Partition> out;
    for (int n = 0; n <= max_rank; ++n)
        for (Partition& lambda : enumerate_partitions(n, std::max(max_rank, default_enumeration_bound)))
            if (is_p_core(lambda, p))
                out.push_back(std::move(lambda));
    return out;
}

std::vector<Partition> enumerate_self_conjugate_cores(int p, int max_rank) {
    require_odd_prime(p);
    std::vector<Partition> out;
    for (int n = 0; n <= max_rank; ++n)
        for (Partition& lambda : enumerate_self_conjugate(n))
            if (is_p_core(lambda, p))
                out.push_back(std::move(lambda));
    return out;
}

namespace {

std::string where(const Partition& lambda) { return to_string(lambda); }

void check_subs(const BlockCatalog& cat, const DecompMatrix& full, BlockCheck& out) {
    int p = cat.p();
    SubsW2 s = build_subs_w2(cat);
    out.subs.merge(verify_ubs(s.ubs, full));
    out.subs.merge(verify_stability(s.ubs.members, p));
    out.subs.merge(verify_zero_pattern(s, full));

    Ubs baseline = regular_baseline_ubs(cat.core(), p, full);
    out.subs.merge(verify_ubs(baseline, full));
    out.subs.merge(verify_dominance(full));

    for (std::size_t r = 0; r < full.row_count(); ++r)
        for (std::size_t c = 0; c < full.col_count(); ++c) {
            const Partition& lambda = full.rows()[r];
            const Partition& mu = full.cols()[c];
            if (full.at(r, c) != full.entry(conjugate(lambda), mullineux_block(cat, mu)))
                out.subs.fail("symmetry: d[" + where(lambda) + ", " + where(mu) + "] differs from its Mullineux twin");
        }
}

void check_counts(const BlockCatalog& cat, BlockCheck& out) {
    int p = cat.p();
    int h = (p - 1) / 2;
    VerificationReport& rep = out.counts;
    const auto& records = cat.records();
    if (static_cast<int>(records.size()) != p * (p + 3) / 2)
        rep.fail("block has " + std::to_string(records.size()) + " partitions");
    int singular = static_cast<int>(std::ranges::count_if(records, [](const BlockRecord& r) { return !r.regular; }));
    if (singular != p + 1)
        rep.fail(std::to_string(singular) + " singular partitions");

    int zero = static_cast<int>(std::ranges::count_if(records, [](const BlockRecord& r) { return r.partial == 0; }));
    if (zero % 2 != 0)
        rep.fail("|∂0| = " + std::to_string(zero) + " is odd");

    int sm = static_cast<int>(std::ranges::count_if(records, [](const BlockRecord& r) { return r.self_mullineux; }));
    int sc = static_cast<int>(std::ranges::count_if(records, [](const BlockRecord& r) { return r.self_conjugate; }));
    long long census = self_mullineux_census(cat.core(), p, 2);
    if (sm != h || sc != h || census != h)
        rep.fail("fixpoints: " + std::to_string(sm) + " self-Mullineux, " + std::to_string(sc) + " self-conjugate, census " +
                 std::to_string(census));

    try {
        for (Sign s : {Sign::plus, Sign::minus}) {
            auto ch = cat.chain(0, s);
            if (ch.empty() || cat.record(ch.front()).regular)
                rep.fail("∂0" + std::string(to_string(s)) + " has no singular minimum");
            for (std::size_t k = 1; k < ch.size(); ++k)
                if (!cat.record(ch[k]).regular)
                    rep.fail("∂0" + std::string(to_string(s)) + " has a singular non-minimum " + where(ch[k]));
            for (const auto& lambda : ch)
                if (cat.record(conjugate(lambda)).sign == s)
                    rep.fail("conjugation keeps the sign of " + where(lambda));
        }
        for (int l = 1; l < p; ++l) {
            auto ch = cat.chain(l);
            if (ch.empty() || cat.record(ch.front()).regular)
                rep.fail("∂" + std::to_string(l) + " has no singular minimum");
            for (std::size_t k = 1; k < ch.size(); ++k)
                if (!cat.record(ch[k]).regular)
                    rep.fail("∂" + std::to_string(l) + " has a singular non-minimum " + where(ch[k]));
            int csm = 0;
            int csc = 0;
            for (const auto& lambda : ch) {
                csm += cat.record(lambda).self_mullineux ? 1 : 0;
                csc += cat.record(lambda).self_conjugate ? 1 : 0;
            }
            bool even = ch.size() % 2 == 0;
            if ((even && (csm != 1 || csc != 0)) || (!even && (csm != 0 || csc != 1)))
                rep.fail("parity rule fails in ∂" + std::to_string(l));
        }
    } catch (const std::logic_error& e) {
        rep.fail(e.what());
    }

    int delta = *cat.delta();
    for (int k = 1; k <= h; ++k) {
        int mu_partial = cat.record(cat.mu()[static_cast<std::size_t>(k - 1)]).partial;
        int nu_partial = cat.record(cat.nu()[static_cast<std::size_t>(k - 1)]).partial;
        int want_mu = k <= delta ? 2 * k : 2 * k - 1;
        int want_nu = k <= delta ? 2 * k - 1 : 2 * k;
        if (mu_partial != want_mu || nu_partial != want_nu)
            rep.fail("placement of mu_" + std::to_string(k) + "/nu_" + std::to_string(k) + " disagrees with delta");
        if (!cat.record(cat.mu()[static_cast<std::size_t>(k - 1)]).self_mullineux)
            rep.fail("mu_" + std::to_string(k) + " is not self-Mullineux");
        if (!cat.record(cat.nu()[static_cast<std::size_t>(k - 1)]).self_conjugate)
            rep.fail("nu_" + std::to_string(k) + " is not self-conjugate");
    }
}

void check_oracle(const BlockCatalog& cat, BlockCheck& out) {
    for (const Partition& mu : cat.regulars()) {
        Partition a = mullineux(mu, cat.p());
        Partition b = mullineux_block(cat, mu);
        if (a != b)
            out.oracle.fail("m(" + where(mu) + "): oracle " + where(a) + ", block " + where(b));
    }
}

void check_formulas(const BlockCatalog& cat, BlockCheck& out) {
    int p = cat.p();
    const Pyramid& py = cat.pyramid();
    VerificationReport& rep = out.formulas;
    std::vector<std::pair<CeilLabel, Partition>> labelled;
    for (const BlockRecord& r : cat.records())
        if (r.ceil) {
            labelled.emplace_back(*r.ceil, r.partition);
            if (partial_via_pyramid(py, *r.ceil) != r.partial)
                rep.fail("pyramid route to ∂ disagrees at " + to_string(*r.ceil));
        }
    auto at = [&](int i, int j) { return ceil_to_partition(py, CeilLabel{i, j}); };
    for (int i = 1; i < p - 1; ++i)
        for (int j = i; j < p; ++j) {
            Partition left = at(i - 1, j);
            if (j + 1 < p && !dominated_by(left, at(i - 1, j + 1)))
                rep.fail("[" + std::to_string(i - 1) + "," + std::to_string(j) + "] not below [" + std::to_string(i - 1) +
                         "," + std::to_string(j + 1) + "]");
            if (!dominated_by(left, at(i, j)))
                rep.fail("[" + std::to_string(i - 1) + "," + std::to_string(j) + "] not below [" + std::to_string(i) + "," +
                         std::to_string(j) + "]");
        }
    // The claim fails when the left partition sits on the base row; those
    // pairs are counted, anything else is a violation.
    for (const auto& [a, lambda] : labelled)
        for (const auto& [b, tau] : labelled)
            if (a.i + a.j < b.i + b.j && !left_right_check(cat, lambda, tau)) {
                if (a.i == a.j)
                    ++out.base_row_exceptions;
                else
                    rep.fail(where(tau) + " is strictly dominated by " + where(lambda) + " which lies to its left");
            }
}

} // namespace

BlockCheck check_self_conjugate_block(const Partition& core, int p) {
    BlockCheck out;
    out.p = p;
    out.core = core;
    out.n = core.rank() + 2 * p;
    BlockCatalog cat = BlockCatalog::build(core, p);
    if (!cat.self_conjugate_core())
        throw InvalidInput(to_string(core) + " is not self-conjugate");
    out.delta = *cat.delta();
    out.block_size = static_cast<int>(cat.records().size());
    out.regular_count = static_cast<int>(cat.regulars().size());
    DecompMatrix full = decomp_matrix(cat);
    check_subs(cat, full, out);
    check_counts(cat, out);
    check_oracle(cat, out);
    check_formulas(cat, out);
    return out;
}

bool SweepResult::passed() const {
    return std::ranges::all_of(blocks, [](const BlockCheck& b) { return b.passed(); });
}

SweepResult run_sweep(const SweepConfig& config) {
    std::vector<std::pair<int, Partition>> tasks;
    for (int p : config.primes)
        for (Partition& core : enumerate_self_conjugate_cores(p, config.max_core_rank))
            tasks.emplace_back(p, std::move(core));

    SweepResult result;
    result.blocks.resize(tasks.size());
    unsigned workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) {
            const auto& [p, core] = tasks[k];
            try {
                result.blocks[k] = check_self_conjugate_block(core, p);
            } catch (const std::exception& e) {
                BlockCheck failed;
                failed.p = p;
                failed.core = core;
                failed.n = core.rank() + 2 * p;
                failed.subs.fail(std::string("exception: ") + e.what());
                result.blocks[k] = std::move(failed);
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();
    return result;
}

} // namespace blocklab
