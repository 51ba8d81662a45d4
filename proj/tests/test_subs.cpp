#include "blocklab/mullineux.hpp"
#include "blocklab/subs.hpp"
#include "blocklab/sweep.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace blocklab;

namespace {

using P = Partition;

const BlockCatalog& b22() {
    static const BlockCatalog cat = BlockCatalog::build(P{2, 2}, 5);
    return cat;
}

std::vector<Partition> cores_up_to(int p, int max_rank) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_rank; ++n)
        for (auto& lambda : enumerate_partitions(n))
            if (is_p_core(lambda, p))
                out.push_back(lambda);
    return out;
}

} // namespace

TEST_CASE("V for B(2,2)") {
    SubsW2 s = build_subs_w2(b22());
    DecompMatrix full = decomp_matrix(b22());
    CHECK(s.delta == 0);
    CHECK(s.ubs.members.size() == 14);
    CHECK(s.v3 == std::vector<P>{P{7, 2, 1, 1, 1, 1, 1}, P{6, 3, 2, 1, 1, 1}});
    CHECK(s.ubs.rank_of(P{7, 2, 1, 1, 1, 1, 1}) < s.ubs.rank_of(P{6, 3, 2, 1, 1, 1}));
    CHECK(s.ubs.psi_of(P{6, 3, 2, 1, 1, 1}) == P{6, 3, 3, 1, 1});
    CHECK(s.ubs.psi_of(P{7, 2, 1, 1, 1, 1, 1}) == P{7, 2, 2, 1, 1, 1});
    REQUIRE(s.v1.size() == s.v2.size());
    for (std::size_t k = 0; k < s.v1.size(); ++k) {
        CHECK(s.v2[k] == conjugate(s.v1[k]));
        CHECK(mullineux_block(b22(), s.v1[k]) < s.v1[k]);
        CHECK(s.ubs.psi_of(s.v1[k]) == s.v1[k]);
        CHECK(s.ubs.psi_of(s.v2[k]) == mullineux_block(b22(), s.v1[k]));
    }
    std::vector<P> all = s.v1;
    all.insert(all.end(), s.v2.begin(), s.v2.end());
    all.insert(all.end(), s.v3.begin(), s.v3.end());
    CHECK(all == s.ubs.members);
    std::vector<P> self_conjugate;
    for (const auto& r : b22().records())
        if (r.self_conjugate)
            self_conjugate.push_back(r.partition);
    CHECK(std::set<P>(s.v3.begin(), s.v3.end()) == std::set<P>(self_conjugate.begin(), self_conjugate.end()));
    CHECK(s.ubs.order.size() == 20);
    CHECK(verify_ubs(s.ubs, full).passed);
    CHECK(verify_stability(s.ubs.members, 5).passed);
    CHECK(verify_zero_pattern(s, full).passed);
    CHECK(is_lower_unitriangular(subs_matrix(s, full)));
    CHECK_THROWS_AS(build_subs_w2(BlockCatalog::build(P{3, 1}, 5)), InvalidInput);
}

TEST_CASE("negative controls") {
    DecompMatrix full = decomp_matrix(b22());
    SubsW2 s = build_subs_w2(b22());
    Ubs broken = s.ubs;
    std::swap(broken.psi[0].second, broken.psi[1].second);
    VerificationReport r = verify_ubs(broken, full);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.violations.empty());

    Ubs baseline = regular_baseline_ubs(P{2, 2}, 5, full);
    CHECK(verify_ubs(baseline, full).passed);
    CHECK(verify_dominance(full).passed);
    VerificationReport stab = verify_stability(baseline.members, 5);
    CHECK_FALSE(stab.passed);
    CHECK(verify_stability({}, 5).passed);
    CHECK_FALSE(verify_stability({P{14}}, 5).passed);
    CHECK(verify_stability({P{14}, conjugate(P{14})}, 5).passed);

    Ubs reversed = baseline;
    std::reverse(reversed.order.begin(), reversed.order.end());
    std::reverse(reversed.members.begin(), reversed.members.end());
    CHECK_FALSE(verify_ubs(reversed, full).passed);
}

TEST_CASE("regular baseline fails stability whenever p <= n") {
    for (int n = 5; n <= 12; ++n) {
        DecompMatrix d = decomp_matrix_n(n, 5);
        std::vector<P> regs = d.cols();
        CHECK(std::find(regs.begin(), regs.end(), P{n}) != regs.end());
        CHECK(std::find(regs.begin(), regs.end(), conjugate(P{n})) == regs.end());
        CHECK_FALSE(verify_stability(regs, 5).passed);
    }
}

TEST_CASE("weight one and split pairs") {
    SUBCASE("tau = (3) at p=5") {
        PairSubs ps = build_subs_odd_or_split(P{3}, 5, 1);
        REQUIRE(ps.blocks.size() == 2);
        std::set<P> expected{P{8}, P{4, 4}, P{3, 3, 1, 1}, P{3, 2, 1, 1, 1}, P{3, 1, 1, 1, 1, 1}};
        bool found = false;
        for (const auto& u : ps.blocks)
            if (u.core == P{3}) {
                CHECK(std::set<P>(u.order.begin(), u.order.end()) == expected);
                found = true;
            }
        CHECK(found);
        for (const auto& m : ps.members) {
            CHECK_FALSE(is_self_conjugate(m));
            CHECK_FALSE((is_p_regular(m, 5) && mullineux(m, 5) == m));
        }
        CHECK(verify_stability(ps.members, 5).passed);
        for (std::size_t k = 0; k < ps.blocks.size(); ++k)
            CHECK(verify_ubs(ps.blocks[k], ps.matrices[k]).passed);
    }
    SUBCASE("self-conjugate core (2,1) at p=5") {
        PairSubs ps = build_subs_odd_or_split(P{2, 1}, 5, 1);
        REQUIRE(ps.blocks.size() == 1);
        std::set<P> expected{P{7, 1}, P{5, 3}, P{3, 3, 2}, P{2, 2, 2, 1, 1}, P{2, 1, 1, 1, 1, 1, 1}};
        CHECK(std::set<P>(ps.blocks[0].order.begin(), ps.blocks[0].order.end()) == expected);
        CHECK(verify_ubs(ps.blocks[0], ps.matrices[0]).passed);
        CHECK(verify_stability(ps.members, 5).passed);
    }
    SUBCASE("every core of rank <= 12") {
        for (int p : {3, 5})
            for (const auto& core : cores_up_to(p, 12))
                for (int w : {1, 2}) {
                    if (w == 2 && is_self_conjugate(core))
                        continue;
                    CAPTURE(to_string(core));
                    CAPTURE(p);
                    CAPTURE(w);
                    PairSubs ps = build_subs_odd_or_split(core, p, w);
                    CHECK(verify_stability(ps.members, p).passed);
                    for (std::size_t k = 0; k < ps.blocks.size(); ++k) {
                        CHECK(verify_ubs(ps.blocks[k], ps.matrices[k]).passed);
                        CHECK(ps.blocks[k].members.size() == ps.matrices[k].col_count());
                    }
                }
    }
    SUBCASE("refused inputs") {
        CHECK_THROWS_AS(build_subs_odd_or_split(P{2, 2}, 5, 2), InvalidInput);
        CHECK_THROWS_AS(build_subs_odd_or_split(P{3}, 5, 3), InvalidInput);
        CHECK_THROWS_AS(build_subs_odd_or_split(P{5}, 5, 1), InvalidInput);
    }
}

TEST_CASE("self-Mullineux census") {
    CHECK(self_mullineux_census(P{2, 2}, 5, 2) == 2);
    CHECK(self_mullineux_census(P{7, 2, 1, 1, 1, 1, 1}, 11, 2) == 5);
    CHECK(self_mullineux_census(P{2, 2}, 5, 1) == 0);
    CHECK(self_mullineux_census(P{2, 2}, 5, 0) == 1);
    for (int p : {3, 5, 7, 11})
        for (int w : {2, 4, 6})
            CHECK(self_mullineux_census(P{}, p, w) == oracle::multipartitions((p - 1) / 2, w / 2));
    CHECK_THROWS_AS(self_mullineux_census(P{3, 1}, 5, 2), InvalidInput);
}

TEST_CASE("fixpoint pairs share their classes") {
    for (int p : {3, 5, 7})
        for (const auto& core : cores_up_to(p, 20)) {
            if (!is_self_conjugate(core))
                continue;
            BlockCatalog cat = BlockCatalog::build(core, p);
            SubsW2 s = build_subs_w2(cat);
            for (int k = 1; k <= (p - 1) / 2; ++k) {
                const P& nu = cat.nu()[static_cast<std::size_t>(k - 1)];
                const P& mu = cat.mu()[static_cast<std::size_t>(k - 1)];
                CHECK(s.ubs.psi_of(nu) == mu);
                std::vector<P> sm;
                std::vector<P> sc;
                for (const auto& r : cat.records())
                    if (r.partial == 2 * k - 1 || r.partial == 2 * k) {
                        if (r.self_mullineux)
                            sm.push_back(r.partition);
                        if (r.self_conjugate)
                            sc.push_back(r.partition);
                    }
                CHECK(sm == std::vector<P>{mu});
                CHECK(sc == std::vector<P>{nu});
            }
        }
}

TEST_CASE("sweep over small cores") {
    SweepConfig config;
    config.primes = {3, 5, 7};
    config.max_core_rank = 20;
    SweepResult result = run_sweep(config);
    CHECK(result.passed());
    CHECK_FALSE(result.blocks.empty());
    for (const auto& b : result.blocks) {
        CAPTURE(to_string(b.core));
        CHECK(b.block_size == b.p * (b.p + 3) / 2);
        CHECK(b.regular_count == b.block_size - (b.p + 1));
        CHECK(b.subs.passed);
        CHECK(b.counts.passed);
        CHECK(b.oracle.passed);
        CHECK(b.formulas.passed);
    }
    SweepConfig single = config;
    single.threads = 1;
    SweepResult serial = run_sweep(single);
    REQUIRE(serial.blocks.size() == result.blocks.size());
    for (std::size_t k = 0; k < serial.blocks.size(); ++k) {
        CHECK(serial.blocks[k].core == result.blocks[k].core);
        CHECK(serial.blocks[k].base_row_exceptions == result.blocks[k].base_row_exceptions);
    }
}

TEST_CASE("B(2,2) block check") {
    BlockCheck c = check_self_conjugate_block(P{2, 2}, 5);
    CHECK(c.passed());
    CHECK(c.delta == 0);
    CHECK(c.base_row_exceptions > 0);
    CHECK_THROWS_AS(check_self_conjugate_block(P{3, 1}, 5), InvalidInput);
}
