#ifndef BOOLCONV_POINT_MAP_HPP
#define BOOLCONV_POINT_MAP_HPP

#include "boolconv/clopen.hpp"

#include <cstdint>
#include <vector>

namespace boolconv {

// A point of Cantor space with a finite prefix and an all-zero tail.
// x(j) = bit j of `prefix` for j < prefix_len, else 0.
struct PointSpec {
    uint32_t prefix = 0;
    int prefix_len = 0;

    uint32_t atom_at(int depth) const;  // index of the depth-d cylinder around x
    bool coord(int j) const { return j < prefix_len && ((prefix >> j) & 1); }
};

// Finite-depth dual map of a homomorphism: a table from source atoms (the
// Stone space the measure lives on) to target atoms (where probe sets live).
// The induced homomorphism is apply(A) = preimage of A under the table, so
// bit i of the result is set iff table[i] lands in A.
struct PointMap {
    int source_depth = 0;
    int target_depth = 0;
    std::vector<uint32_t> table;  // size 2^source_depth, entries < 2^target_depth

    static PointMap identity(int depth);
    // Dual of the point-evaluation homomorphism at x: a single table entry.
    static PointMap point_eval(const PointSpec& x, int target_depth);
    // Everything maps to one target atom.
    static PointMap constant(uint32_t target_atom, int source_depth, int target_depth);

    ClopenSet apply(const ClopenSet& a) const;

    bool operator==(const PointMap& o) const {
        return source_depth == o.source_depth && target_depth == o.target_depth &&
               table == o.table;
    }
};

// table[i] = i XOR 2^coord; an involution and a measure isometry.
PointMap make_flip(int coord, int depth);

// Flips coordinate 0 exactly on the cylinder of points agreeing with s,
// where "x agrees with s" means x(k+1) = s(k) for k < |s| (bit k of
// `word` = s(k)). Needs depth >= len + 1.
PointMap make_agree_flip(uint32_t word, int len, int depth);

// Dual-side composition: the result realizes the homomorphism A -> phi(psi(A)).
// Requires phi.target_depth == psi.source_depth.
PointMap compose(const PointMap& phi, const PointMap& psi);

// Measure of the source atoms the two tables disagree on. Upper bound for the
// uniform distance: any phi(A) ^ psi(A) lives inside the disagreement set.
Dyadic disagreement_measure(const PointMap& phi, const PointMap& psi);

// Component-wise pair of homomorphisms into the max-metric product.
struct PairMap {
    PointMap first;
    PointMap second;

    PairMap(PointMap a, PointMap b);

    std::pair<ClopenSet, ClopenSet> apply(const ClopenSet& a) const;
};

// Max of the two component distances on a probe.
Dyadic pair_distance(const PairMap& a, const PairMap& b, const ClopenSet& probe);

}  // namespace boolconv

#endif
