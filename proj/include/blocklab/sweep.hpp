#pragma once

#include "blocklab/partition.hpp"
#include "blocklab/subs.hpp"

#include <vector>

namespace blocklab {

/// p-cores of rank at most `max_rank`, by increasing rank then descending
/// lexicographic order.
std::vector<Partition> enumerate_cores(int p, int max_rank);
std::vector<Partition> enumerate_self_conjugate_cores(int p, int max_rank);

/// Every check run on one self-conjugate weight-2 block, grouped by theme.
struct BlockCheck {
    int p = 3;
    Partition core;
    int n = 0;
    int delta = 0;
    int block_size = 0;
    int regular_count = 0;
    /// V_γ passes the UBS axioms and stability, the reordered matrix is lower
    /// unitriangular with the expected zero blocks; regular baseline and
    /// Mullineux symmetry of the matrix.
    VerificationReport subs;
    /// Block size, singular count, |∂₀| parity, fixpoint counts, the parity
    /// rule for fixpoints in each ∂_l, chain minima, ν/μ placement by δ.
    VerificationReport counts;
    /// Symbol-algorithm Mullineux map against the chain-based one.
    VerificationReport oracle;
    /// Pyramid route to ∂, the adjacent-column dominance relations and the
    /// left/right non-domination claim.
    VerificationReport formulas;
    /// Pairs λ left of τ with τ strictly below λ. All of them have λ on the
    /// base row of the pyramid, where the non-domination claim does not hold;
    /// a pair with λ higher up is a `formulas` violation instead.
    long long base_row_exceptions = 0;

    bool passed() const { return subs.passed && counts.passed && oracle.passed && formulas.passed; }
};

BlockCheck check_self_conjugate_block(const Partition& core, int p);

struct SweepConfig {
    std::vector<int> primes{3, 5, 7, 11, 13};
    int max_core_rank = 40;
    /// 0 means hardware concurrency.
    unsigned threads = 0;
};

struct SweepResult {
    /// Ordered by p, then core as produced by enumerate_self_conjugate_cores.
    std::vector<BlockCheck> blocks;
    bool passed() const;
};

SweepResult run_sweep(const SweepConfig& config);

} // namespace blocklab
