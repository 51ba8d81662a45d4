#pragma once

#include "blocklab/block.hpp"
#include "blocklab/decomposition.hpp"
#include "blocklab/partition.hpp"

#include <string>
#include <utility>
#include <vector>

namespace blocklab {

/// A candidate unitriangular basic set of one block.
struct Ubs {
    Partition core;
    int p = 3;
    /// The whole block under the total order, greatest first.
    std::vector<Partition> order;
    /// Members in the order they appear in `order`.
    std::vector<Partition> members;
    /// member -> label of the simple module (a p-regular partition).
    std::vector<std::pair<Partition, Partition>> psi;

    const Partition& psi_of(const Partition& member) const;
    /// Position in `order`; smaller is greater. Throws InvalidInput if absent.
    std::size_t rank_of(const Partition& lambda) const;
};

struct VerificationReport {
    bool passed = true;
    std::vector<std::string> violations;

    void fail(std::string message) {
        passed = false;
        violations.push_back(std::move(message));
    }
    void merge(const VerificationReport& other);
};

/// (1) d_{μ,Ψ(μ)} = 1 for every member; (2) d_{λ,D} != 0 implies λ is not
/// above Ψ^{-1}(D) in the triplet's own order. Also checks that Ψ is a
/// bijection onto the columns of `m`.
VerificationReport verify_ubs(const Ubs& u, const DecompMatrix& m);

/// (A) closed under conjugation; (B) every self-conjugate member is a
/// BG-partition.
VerificationReport verify_stability(const std::vector<Partition>& members, int p);

/// The stronger form for the regular baseline: d_{λμ} != 0 implies λ ⊴ μ.
VerificationReport verify_dominance(const DecompMatrix& m);

/// Regular partitions, Ψ the identity, descending lexicographic order.
Ubs regular_baseline_ubs(const Partition& core, int p, const DecompMatrix& m);

/// The set V_γ = V¹ ⊔ V² ⊔ V³ with its order ≺ and bijection Ψ_γ.
struct SubsW2 {
    std::vector<Partition> v1; ///< Regular λ with m(λ) <lex λ, lex-descending.
    std::vector<Partition> v2; ///< Conjugates of v1, same order.
    std::vector<Partition> v3; ///< ν_1..ν_δ, ν_{(p-1)/2}..ν_{δ+1}.
    int delta = 0;
    Ubs ubs;
};

/// Requires a self-conjugate core.
SubsW2 build_subs_w2(const BlockCatalog& cat);

/// Rows v1, v2, v3 and the Ψ-images as columns, in matching order.
DecompMatrix subs_matrix(const SubsW2& s, const DecompMatrix& full);

/// 𝐃̃ lower unitriangular, and its blocks: D2 = D3 = 0 (t x t), D5 = 0
/// (2t x (p-1)/2), D1 = D4, D6 lower unitriangular.
VerificationReport verify_zero_pattern(const SubsW2& s, const DecompMatrix& full);

/// SUBS for a weight-1 block, or for the pair of blocks of a non-self-conjugate
/// core of weight 1 or 2: one UBS per block (one only when γ = γ').
struct PairSubs {
    std::vector<Ubs> blocks;
    std::vector<DecompMatrix> matrices;
    /// Union of the members of every block.
    std::vector<Partition> members;
};

/// Members and Ψ follow the restriction of the Brunat-Gramain-Jacon set to
/// the blocks of γ and γ'. The total order is the lexicographically greedy
/// linear extension of the constraints imposed by condition (2). Throws
/// InvalidInput unless w is 1, or w is 2 and γ is not self-conjugate.
PairSubs build_subs_odd_or_split(const Partition& core, int p, int weight);

/// Number of ((p-1)/2)-multipartitions of w/2 for even w, 0 for odd w.
long long self_mullineux_census(const Partition& core, int p, int weight);

} // namespace blocklab
