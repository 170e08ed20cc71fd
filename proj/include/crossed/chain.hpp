#pragma once

#include "crossed/complex.hpp"
#include "crossed/matrix.hpp"

namespace crossed {

/// Chain complex of free right ZG-modules derived from a free crossed
/// complex over finite G: C0 = ZG, C1 free on X1 with d1(x) = phi(x) - 1,
/// d2 from the free derivative of the relators, higher dimensions the
/// abelianized strata. Boundaries are stored both flattened over the group
/// basis (exact Z-matrices) and augmented (coefficients summed to Z).
struct ChainComplex {
    GroupPtr group;
    int maxdim = 0;
    std::vector<GroupElem> elems;                      // fixed element order
    std::vector<std::vector<std::string>> basis;       // names, dim 0..maxdim
    std::vector<SparseIntMat> bdry;                    // [n]: C_n -> C_{n-1}, n >= 1
    std::vector<Mat> aug;                              // augmented boundaries

    int rank(int n) const { return static_cast<int>(basis[static_cast<std::size_t>(n)].size()); }
};

ChainComplex to_chain_complex(const CrossedComplexSpec& spec, int maxdim);

/// Invariant factors of H_n of the augmented complex (group homology for a
/// resolution): torsion divisors ascending, then one 0 per free rank.
std::vector<Int> homology_over_Z(const ChainComplex& chain, int n);

struct ExactnessReport {
    bool exact = false;
    std::vector<Int> invariants;    // of ker d_n / im d_{n+1}, empty iff exact
    long long kernel_rank = 0;      // Z-rank of ker d_n (module of identities at n = 2)
};

/// Exactness of the un-augmented complex at n, as Z-modules. A missing
/// dimension n+1 (truncated complex) contributes a zero image.
ExactnessReport exactness_check(const CrossedComplexSpec& spec, int n);

std::string invariants_str(const std::vector<Int>& inv);   // "[2 2]", "[]", "[0]"

} // namespace crossed
