#include "blocklab/abacus.hpp"
#include "blocklab/block.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <numeric>

using namespace blocklab;

namespace {

oracle::Parts parts_of(const Partition& lambda) { return {lambda.parts().begin(), lambda.parts().end()}; }

std::vector<Partition> cores_up_to(int p, int max_rank) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_rank; ++n)
        for (auto& lambda : enumerate_partitions(n))
            if (is_p_core(lambda, p))
                out.push_back(lambda);
    return out;
}

} // namespace

TEST_CASE("beads of a partition") {
    Abacus a = Abacus::from_partition(Partition{4, 3, 3, 3, 2, 1, 1}, 5);
    CHECK(a.window_beads() == std::vector<int>{3, 1, 0, -1, -3, -5, -6, -8, -9, -10});
    CHECK(a.bead_count() % 5 == 0);
    CHECK(a.has_bead(-11));
    CHECK_FALSE(a.has_bead(-2));

    Abacus empty = Abacus::from_partition(Partition{}, 7);
    CHECK(empty.window_beads().empty());
    CHECK(empty.has_bead(-1));
    CHECK(empty.has_bead(-100));
    CHECK_FALSE(empty.has_bead(0));
}

TEST_CASE("round trip") {
    for (int p : {3, 5, 7})
        for (const auto& lambda : enumerate_partitions(10))
            CHECK(Abacus::from_partition(lambda, p).to_partition() == lambda);
}

TEST_CASE("runner labels") {
    SUBCASE("(2,1) at p=5") {
        RunnerLabels r = runner_labels(Abacus::from_partition(Partition{2, 1}, 5));
        CHECK(r.label_of_column == std::vector<int>{1, 4, 2, 0, 3});
    }
    SUBCASE("(2,2) at p=5") {
        RunnerLabels r = runner_labels(Abacus::from_partition(Partition{2, 2}, 5));
        CHECK(r.label_of_column == std::vector<int>{3, 4, 2, 0, 1});
        // Positions counted from the top-left of a drawing with two full rows
        // above the beta-number origin.
        std::vector<int> shifted;
        for (int x : r.rho)
            shifted.push_back(x + 10);
        CHECK(shifted == std::vector<int>{3, 4, 7, 10, 11});
        for (int label = 0; label < 5; ++label)
            CHECK(r.label_of_column[static_cast<std::size_t>(r.column_of_label[static_cast<std::size_t>(label)])] == label);
    }
    SUBCASE("empty core at p=3") {
        RunnerLabels r = runner_labels(Abacus::from_partition(Partition{}, 3));
        CHECK(r.label_of_column == std::vector<int>{0, 1, 2});
    }
    SUBCASE("agree with the oracle on cores of rank <= 20") {
        for (int p : {3, 5, 7})
            for (const auto& core : cores_up_to(p, 20)) {
                RunnerLabels r = runner_labels(Abacus::from_partition(core, p));
                CHECK(r.label_of_column == oracle::runner_labels(parts_of(core), p));
                CHECK(std::is_sorted(r.rho.begin(), r.rho.end()));
                CHECK(std::adjacent_find(r.rho.begin(), r.rho.end()) == r.rho.end());
            }
    }
}

TEST_CASE("bead slides") {
    SUBCASE("weight-1 block of (2,1) at p=5") {
        Partition core{2, 1};
        Abacus a = Abacus::from_partition(core, 5);
        RunnerLabels r = runner_labels(a);
        std::vector<Partition> chain;
        for (int i = 0; i < 5; ++i)
            chain.push_back(slide_bead(a, r.rho[static_cast<std::size_t>(i)], SlideDirection::down).to_partition());
        std::vector<Partition> expected{Partition{2, 1, 1, 1, 1, 1, 1}, Partition{2, 2, 2, 1, 1}, Partition{3, 3, 2},
                                        Partition{5, 3}, Partition{7, 1}};
        CHECK(chain == expected);
        CHECK(chain == weight_one_chain(core, 5));
    }
    SUBCASE("down then up is the identity") {
        Abacus a = Abacus::from_partition(Partition{2, 2}, 5);
        for (int x : runner_labels(a).rho) {
            Abacus down = slide_bead(a, x, SlideDirection::down);
            CHECK(slide_bead(down, x + 5, SlideDirection::up) == a);
        }
    }
    SUBCASE("occupancy violations") {
        Abacus a = Abacus::from_partition(Partition{2, 2}, 5);
        CHECK_THROWS_AS(slide_bead(a, 5, SlideDirection::down), InvalidInput);
        CHECK_THROWS_AS(slide_bead(a, -4, SlideDirection::up), InvalidInput);
    }
    SUBCASE("leg lengths match the added hook") {
        for (int p : {3, 5, 7})
            for (const auto& core : cores_up_to(p, 10)) {
                Abacus a = Abacus::from_partition(core, p);
                for (int x : runner_labels(a).rho) {
                    Partition mu = slide_bead(a, x, SlideDirection::down).to_partition();
                    int leg = slide_leg_length(a, x, SlideDirection::down);
                    CHECK(mu.rank() == core.rank() + p);
                    bool found = false;
                    for (const auto& h : hooks(mu))
                        if (h.length == p && remove_rim_hook(mu, h.row, h.col) == core) {
                            CHECK(h.leg == leg);
                            found = true;
                        }
                    CHECK(found);
                }
            }
    }
}

TEST_CASE("conjugation on the abacus") {
    Partition gamma{6, 5, 3, 2, 2, 1};
    REQUIRE(is_p_core(gamma, 5));
    CHECK(conjugate_abacus(Abacus::from_partition(gamma, 5)).to_partition() == gamma);
    CHECK(conjugate_abacus(Abacus::from_partition(Partition{}, 3)).to_partition() == Partition{});
    for (int p : {3, 5})
        for (const auto& lambda : enumerate_partitions(10)) {
            Abacus a = Abacus::from_partition(lambda, p);
            CHECK(conjugate_abacus(a).to_partition() == conjugate(lambda));
            CHECK(conjugate_abacus(conjugate_abacus(a)) == a);
        }
}

TEST_CASE("conjugation reverses the runner order") {
    for (int p : {3, 5, 7})
        for (const auto& core : cores_up_to(p, 20)) {
            auto r = runner_labels(Abacus::from_partition(core, p)).rho;
            auto s = runner_labels(Abacus::from_partition(conjugate(core), p)).rho;
            for (std::size_t k = 0; k + 1 < r.size(); ++k)
                CHECK(s[k + 1] - s[k] == r[r.size() - 1 - k] - r[r.size() - 2 - k]);
            if (is_self_conjugate(core)) {
                auto labels = runner_labels(Abacus::from_partition(core, p)).label_of_column;
                for (int c = 0; c < p; ++c)
                    CHECK(labels[static_cast<std::size_t>(c)] + labels[static_cast<std::size_t>(p - 1 - c)] == p - 1);
            }
        }
}

TEST_CASE("p-quotients") {
    SUBCASE("cores have empty quotients") {
        for (const auto& core : cores_up_to(5, 15))
            for (const auto& q : p_quotient(Abacus::from_partition(core, 5)))
                CHECK(q.empty());
    }
    SUBCASE("weight one") {
        for (int p : {3, 5, 7})
            for (const auto& core : cores_up_to(p, 12)) {
                auto chain = weight_one_chain(core, p);
                for (int i = 0; i < p; ++i) {
                    auto q = p_quotient(Abacus::from_partition(chain[static_cast<std::size_t>(i)], p));
                    for (int k = 0; k < p; ++k)
                        CHECK(q[static_cast<std::size_t>(k)] == (k == i ? Partition{1} : Partition{}));
                }
            }
    }
    SUBCASE("self-conjugate weight-2 partitions") {
        for (int p : {3, 5, 7})
            for (const auto& core : cores_up_to(p, 20)) {
                if (!is_self_conjugate(core))
                    continue;
                for (const auto& lambda : enumerate_self_conjugate(core.rank() + 2 * p)) {
                    if (p_core_weight(lambda, p).core != core)
                        continue;
                    auto q = p_quotient(Abacus::from_partition(lambda, p));
                    std::size_t h = static_cast<std::size_t>((p - 1) / 2);
                    CHECK(q[h].empty());
                    for (std::size_t k = 0; k < h; ++k)
                        CHECK(q[static_cast<std::size_t>(p) - 1 - k] == conjugate(q[k]));
                }
            }
    }
    SUBCASE("core and quotient determine the partition") {
        for (int p : {3, 5, 7})
            for (int n = 0; n <= 12; ++n)
                for (const auto& lambda : enumerate_partitions(n)) {
                    Abacus a = Abacus::from_partition(lambda, p);
                    CoreWeight cw = p_core_weight(lambda, p);
                    auto q = p_quotient(a);
                    int size = std::accumulate(q.begin(), q.end(), 0, [](int s, const Partition& x) { return s + x.rank(); });
                    CHECK(size == cw.weight);
                    CHECK(raise_all(a).to_partition() == cw.core);
                    CHECK(from_core_and_quotient(cw.core, q, p) == lambda);
                }
    }
}

TEST_CASE("drawing") {
    std::string expected = "3 4 2 0 1\n"
                           "o o o o o\n"
                           "o o o . .\n"
                           "o o . . .\n"
                           ". . . . .\n";
    CHECK(render_abacus(Abacus::from_partition(Partition{2, 2}, 5)) == expected);
}
