#pragma once

#include "crossed/complex.hpp"

namespace crossed {

/// Standard free crossed resolution of a finite group: dimension-n basis is
/// the set of n-tuples over G (degenerate tuples included), with the
/// bar-type boundaries. Generators are named [a], [a,b], [a,b,c], ...
CrossedComplexSpec standard_resolution(const GroupPtr& g, int maxdim);

/// Periodic free crossed resolution of the cyclic group of order p >= 2:
/// one generator per dimension, w(x2) = x1^p, then boundaries alternating
/// between the difference and norm coefficients.
CrossedComplexSpec cyclic_resolution(long long p, int maxdim, const std::string& prefix = "x");

/// Length-1 free crossed resolution of the infinite cyclic group.
CrossedComplexSpec infinite_cyclic_complex(const std::string& gen = "x");

/// Length-2 complex of a presentation <gens | relators> over G. phi_images
/// assigns a G-element to each generator; relator words are over the
/// generators.
CrossedComplexSpec presentation_complex(const GroupPtr& g,
                                        const std::vector<std::pair<std::string, GroupElem>>& gens,
                                        const std::vector<std::pair<std::string, Word>>& relators);

/// Copy of a complex with every generator name prefixed (for disjoint
/// tensor factors).
CrossedComplexSpec with_prefix(const CrossedComplexSpec& spec, const std::string& prefix);

} // namespace crossed
