#pragma once

#include "crossed/group.hpp"
#include "crossed/report.hpp"

#include <vector>

namespace crossed {

/// Automorphism as a permutation of table indices. Composition is
/// "apply a, then b".
struct Perm {
    std::vector<int> map;
    int apply(int x) const { return map[static_cast<std::size_t>(x)]; }
    friend bool operator==(const Perm& a, const Perm& b) { return a.map == b.map; }
};

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);   // apply a then b
Perm perm_inverse(const Perm& a);
Perm perm_power(const Perm& a, long long k);

/// All automorphisms of a finite group, by brute force over bijections.
std::vector<Perm> automorphisms(const TableDesc& k);

/// Inner automorphism x -> k^-1 x k.
Perm inner_automorphism(const TableDesc& t, int k);

TableDesc to_table(const GroupPtr& g);   // finite groups only

/// 2-cocycle data on a finite group G with values in K, checked against the
/// standard resolution: compatibility of k2 with the relator boundaries and
/// vanishing of k2 on the dimension-3 boundaries.
/// k1 and k2 are indexed by the positions of G->elements().
Report check_cocycle(const GroupPtr& g, const TableDesc& k,
                     const std::vector<Perm>& k1,
                     const std::vector<std::vector<int>>& k2);

/// Cocycle data on the periodic resolution of C_p: an automorphism a and a
/// fixed point k of a with inner(k) = a^p (the exponent is the order p of
/// the cyclic quotient).
bool cyclic_cocycle_check(long long p, const TableDesc& k, int k_elem, const Perm& a);

/// Extension of C_p by K determined by (k, a):
/// carrier (i, m), i in [0,p), m in K, with
/// (i,m)(j,n) = (i+j mod p, a^j(m) * n * k^((i+j) div p)).
/// The result is validated: group table, normal copy of K, cyclic quotient.
GroupPtr extension_from_cocycle(long long p, const TableDesc& k, int k_elem, const Perm& a);

/// True when the finite groups are isomorphic (generator-image backtracking).
bool is_isomorphic(const TableDesc& a, const TableDesc& b);

struct ExtensionClass {
    GroupPtr representative;
    std::vector<std::pair<int, Perm>> members;   // (k, a) data realizing the class
};

/// All valid (k, a) cocycle data for C_p by K, built and partitioned into
/// isomorphism classes of the resulting extensions.
std::vector<ExtensionClass> enumerate_extensions(long long p, const TableDesc& k);

} // namespace crossed
