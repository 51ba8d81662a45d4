#include "blocklab/pyramid.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace blocklab;

namespace {

const std::vector<Partition>& cores(int p) {
    static std::map<int, std::vector<Partition>> cache;
    auto it = cache.find(p);
    if (it != cache.end())
        return it->second;
    std::vector<Partition> out;
    for (int n = 0; n <= 40; ++n)
        for (auto& lambda : enumerate_partitions(n))
            if (is_p_core(lambda, p))
                out.push_back(lambda);
    return cache[p] = out;
}

} // namespace

TEST_CASE("pyramid of (2,2) at p=5") {
    Pyramid py = Pyramid::build(Partition{2, 2}, 5);
    CHECK(py.row(0) == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(py.row(1) == std::vector<int>{1, 1, 1, 1});
    CHECK(py.row(2) == std::vector<int>{1, 0, 1});
    CHECK(py.row(3) == std::vector<int>{0, 0});
    CHECK(py.row(4) == std::vector<int>{0});
    CHECK(py.apex() == 0);
    CHECK(py.delta() == 0);
    CHECK(py.is_horizontally_symmetric());
    CHECK(render_pyramid(py) == "    0\n   0 0\n  1 0 1\n 1 1 1 1\n1 1 1 1 1\n");
}

TEST_CASE("pyramid of the empty core") {
    Pyramid py = Pyramid::build(Partition{}, 3);
    for (int k = 0; k < 3; ++k)
        for (int v : py.row(k))
            CHECK(v == 1);
    CHECK(py.apex() == 1);
    CHECK(py.middle_column() == std::vector<int>{1});
    CHECK(py.delta() == 1);
}

TEST_CASE("delta of (7,2,1^5) at p=11") {
    Pyramid py = Pyramid::build(Partition{7, 2, 1, 1, 1, 1, 1}, 11);
    CHECK(py.delta() == 3);
    CHECK(py.middle_column() == std::vector<int>{1, 1, 1, 0, 0});
}

TEST_CASE("extended entries") {
    Pyramid py = Pyramid::build(Partition{2, 2}, 5);
    CHECK(py.entry_extended(3, 1) == 1);
    CHECK(py.entry_extended(-1, 0) == 0);
    CHECK(py.entry_extended(0, 5) == 0);
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j)
            CHECK(py.entry_extended(i, j) == py.entry(i, j));
    CHECK_THROWS_AS(py.entry(3, 1), InvalidInput);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(Pyramid::build(Partition{5}, 5), InvalidInput);
    CHECK_THROWS_AS(Pyramid::build(Partition{3, 1}, 5).delta(), InvalidInput);
}

TEST_CASE("structure on every core of rank <= 40") {
    for (int p : {3, 5, 7, 11}) {
        CAPTURE(p);
        for (const auto& core : cores(p)) {
            Pyramid py = Pyramid::build(core, p);
            auto low = oracle::lowest_beads(oracle::Parts(core.parts().begin(), core.parts().end()), p);
            std::sort(low.begin(), low.end());
            for (int i = 0; i < p; ++i)
                for (int j = i; j < p; ++j) {
                    int gap = low[static_cast<std::size_t>(j)] - low[static_cast<std::size_t>(i)];
                    CHECK(gap != p);
                    CHECK(py.entry(i, j) == (gap < p ? 1 : 0));
                    if (py.entry(i, j) == 1) {
                        if (i + 1 <= j)
                            CHECK(py.entry(i + 1, j) == 1);
                        if (j - 1 >= i)
                            CHECK(py.entry(i, j - 1) == 1);
                    }
                }
            for (int v : py.row(0))
                CHECK(v == 1);
            Pyramid mirror = Pyramid::build(conjugate(core), p);
            for (int i = 0; i < p; ++i)
                for (int j = i; j < p; ++j)
                    CHECK(mirror.entry(p - 1 - j, p - 1 - i) == py.entry(i, j));
            if (is_self_conjugate(core))
                CHECK(py.is_horizontally_symmetric());
            if (is_self_conjugate(core)) {
                auto g = py.middle_column();
                CHECK(std::is_sorted(g.rbegin(), g.rend()));
                CHECK(py.delta() == std::count(g.begin(), g.end(), 1));
            }
        }
    }
}

TEST_CASE("symmetric pyramids of cores that are not self-conjugate") {
    // Scopes-equivalent cores share a pyramid.
    Partition core{11, 2, 2, 1, 1, 1, 1, 1, 1, 1};
    REQUIRE(is_p_core(core, 11));
    REQUIRE_FALSE(is_self_conjugate(core));
    CHECK(Pyramid::build(core, 11).is_horizontally_symmetric());
}

TEST_CASE("equal cores give equal pyramids") {
    CHECK(Pyramid::build(Partition{2, 2}, 5) == Pyramid::build(Partition{2, 2}, 5));
    CHECK_FALSE(Pyramid::build(Partition{2, 2}, 5) == Pyramid::build(Partition{3, 1}, 5));
}
