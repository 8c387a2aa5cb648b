#ifndef HYPERENT_ENTROPY_HPP
#define HYPERENT_ENTROPY_HPP

#include <span>
#include <vector>

#include "hyperent/families.hpp"
#include "hyperent/hypergraph.hpp"

namespace hyperent {

/// Degree-based entropy at exponent t, in bits:
///   log2(sum d_i^t) - sum_i (d_i^t / sum_j d_j^t) * log2(d_i^t).
/// Depends only on the degree multiset. t = 0 gives log2(n) exactly;
/// t = 1 equals log2(km) - h(H)/(km).
double degree_entropy(const Hypergraph& h, double t = 1.0);

/// h(H) = sum_i d_i * log2(d_i), the degree self-information sum.
double h_value(const Hypergraph& h);

/// Same, straight from a degree vector (any order).
double h_of_degrees(std::span<const int> degrees);

/// Closed-form bound pair, in bits. Witness tags name the families that
/// attain equality (two tags together when either of two shapes attains it).
struct BoundPair {
    double lower = 0.0;
    double upper = 0.0;
    std::vector<FamilyTag> lower_witness;
    std::vector<FamilyTag> upper_witness;
};

/// Bounds on the t=1 entropy over the connected class with cyclomatic
/// number 0, 1 or 2 at the given (k, m). Requires k >= 3, m >= 2.
BoundPair theorem_bounds(StructureTag cls, int k, int m);

/// Bounds on h over the same class. Lower/upper witnesses swap relative to
/// theorem_bounds: minimal h corresponds to maximal entropy.
BoundPair h_bounds(StructureTag cls, int k, int m);

} // namespace hyperent

#endif
