#include "blocklab/decomposition.hpp"
#include "blocklab/mullineux.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

using namespace blocklab;

namespace {

using P = Partition;

const BlockCatalog& b22() {
    static const BlockCatalog cat = BlockCatalog::build(P{2, 2}, 5);
    return cat;
}

/// A random linear extension of ⊴ on `items`.
std::vector<Partition> random_dominance_extension(std::vector<Partition> items, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Partition> out;
    while (!items.empty()) {
        std::vector<std::size_t> maximal;
        for (std::size_t a = 0; a < items.size(); ++a) {
            bool top = std::none_of(items.begin(), items.end(),
                                    [&](const Partition& b) { return dominance_cmp(items[a], b) == Dominance::less; });
            if (top)
                maximal.push_back(a);
        }
        std::uniform_int_distribution<std::size_t> pick(0, maximal.size() - 1);
        std::size_t k = maximal[pick(rng)];
        out.push_back(items[k]);
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return out;
}

} // namespace

TEST_CASE("D(4,3)") {
    DecompMatrix d = d43_reference();
    REQUIRE(d.rows() == std::vector<P>{P{4}, P{3, 1}, P{2, 2}, P{2, 1, 1}, P{1, 1, 1, 1}});
    REQUIRE(d.col_count() == 4);
    std::vector<std::vector<int>> expected{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            CHECK(d.at(r, c) == expected[r][c]);
    CHECK(decomp_matrix_n(4, 3) == d);
    CHECK(to_csv(d) == "partition,4,3+1,2+2,2+1+1\n"
                       "4,1,0,0,0\n"
                       "3+1,0,1,0,0\n"
                       "2+2,1,0,1,0\n"
                       "2+1+1,0,0,0,1\n"
                       "1+1+1+1,0,0,1,0\n");
}

TEST_CASE("B(2,2) matrix") {
    DecompMatrix d = decomp_matrix(b22());
    CHECK(d.row_count() == 20);
    CHECK(d.col_count() == 14);
    for (const auto& mu : d.cols()) {
        CHECK(d.entry(mu, mu) == 1);
        Partition m = mullineux_block(b22(), mu);
        CHECK(d.entry(conjugate(m), mu) == 1);
        for (const auto& lambda : d.rows()) {
            int v = d.entry(lambda, mu);
            CHECK((v == 0 || v == 1));
            if (v != 0) {
                CHECK(dominated_by(lambda, mu));
                CHECK(dominated_by(conjugate(m), lambda));
                if (lambda != mu && lambda != conjugate(m))
                    CHECK(std::abs(b22().record(lambda).partial - b22().record(mu).partial) == 1);
            }
            CHECK(v == d.entry(conjugate(lambda), m));
        }
    }
}

TEST_CASE("unitriangular under lex and a random dominance extension") {
    DecompMatrix d = decomp_matrix(b22());
    std::vector<Partition> regs = d.cols();
    CHECK(is_lower_unitriangular(submatrix(d, regs, regs)));
    for (unsigned seed : {1u, 2u, 3u}) {
        auto order = random_dominance_extension(regs, seed);
        CHECK(is_lower_unitriangular(submatrix(d, order, order)));
    }
    std::vector<Partition> wrong(regs.rbegin(), regs.rend());
    CHECK_FALSE(is_lower_unitriangular(submatrix(d, wrong, wrong)));
}

TEST_CASE("nu by mu submatrix of the p=11 block of (7,2,1^5)") {
    BlockCatalog cat = BlockCatalog::build(P{7, 2, 1, 1, 1, 1, 1}, 11);
    DecompMatrix d = decomp_matrix(cat);
    DecompMatrix six = submatrix(d, cat.nu(), cat.mu());
    std::vector<std::vector<int>> expected{
        {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}};
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c)
            CHECK(six.at(r, c) == expected[r][c]);
    for (std::size_t k = 0; k < 5; ++k)
        CHECK(decomp_number(cat, cat.nu()[k], cat.mu()[k]) == 1);
}

TEST_CASE("submatrix") {
    DecompMatrix d = d43_reference();
    DecompMatrix none = submatrix(d, {}, d.cols());
    CHECK(none.row_count() == 0);
    CHECK(none.col_count() == 4);
    DecompMatrix sq = submatrix(d, d.cols(), d.cols());
    CHECK(sq.row_count() == 4);
    CHECK(is_lower_unitriangular(sq));
    CHECK_THROWS_AS(submatrix(d, {P{5}}, d.cols()), InvalidInput);
    CHECK_THROWS_AS(d.entry(P{4}, P{1, 1, 1, 1}), InvalidInput);
}

TEST_CASE("small blocks") {
    DecompMatrix w0 = block_decomp_matrix(P{2, 2}, 5, 0);
    CHECK(w0.row_count() == 1);
    CHECK(w0.at(0, 0) == 1);
    for (int p : {3, 5, 7}) {
        DecompMatrix w1 = block_decomp_matrix(P{}, p, 1);
        auto chain = weight_one_chain(P{}, p);
        REQUIRE(static_cast<int>(w1.row_count()) == p);
        REQUIRE(static_cast<int>(w1.col_count()) == p - 1);
        for (int i = 0; i < p; ++i)
            for (int j = 1; j < p; ++j) {
                int expected = (i == j || i == j - 1) ? 1 : 0;
                CHECK(w1.entry(chain[static_cast<std::size_t>(i)], chain[static_cast<std::size_t>(j)]) == expected);
            }
    }
    CHECK_THROWS_AS(block_decomp_matrix(P{}, 3, 3), InvalidInput);
    CHECK_THROWS_AS(decomp_matrix_n(9, 3), InvalidInput);
}

TEST_CASE("whole-n matrices") {
    for (auto [p, max_n] : {std::pair{3, 8}, std::pair{5, 14}, std::pair{7, 16}})
        for (int n = 1; n <= max_n; ++n) {
            CAPTURE(p);
            CAPTURE(n);
            DecompMatrix d = decomp_matrix_n(n, p);
            CHECK(is_lower_unitriangular(submatrix(d, d.cols(), d.cols())));
            for (std::size_t c = 0; c < d.col_count(); ++c) {
                const Partition& mu = d.cols()[c];
                Partition m = mullineux(mu, p);
                for (std::size_t r = 0; r < d.row_count(); ++r) {
                    const Partition& lambda = d.rows()[r];
                    if (d.at(r, c) != 0)
                        CHECK(dominated_by(lambda, mu));
                    CHECK(d.at(r, c) == d.entry(conjugate(lambda), m));
                }
            }
        }
}

TEST_CASE("text rendering") {
    std::string expected = "(4)     | 1 · · ·\n"
                           "(3,1)   | · 1 · ·\n"
                           "(2^2)   | 1 · 1 ·\n"
                           "(2,1^2) | · · · 1\n"
                           "(1^4)   | · · 1 ·\n";
    CHECK(to_text(d43_reference()) == expected);
}
