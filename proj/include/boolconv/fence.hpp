#ifndef BOOLCONV_FENCE_HPP
#define BOOLCONV_FENCE_HPP

#include "boolconv/clopen.hpp"
#include "boolconv/point_map.hpp"
#include "boolconv/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace boolconv {

// Weighted items, each painted with an f-color and a g-color. A feasible set
// L uses disjoint color palettes on the two sides: f[L] and g[L] share no
// color. A quarter of the total weight is always feasible when f != g on
// every item, and that constant is asymptotically sharp.
struct FenceItem {
    Rational weight;
    int64_t f = 0;
    int64_t g = 0;
};

struct FenceInstance {
    std::vector<FenceItem> items;

    Rational total_weight() const;
    // Colors used on both sides (f-image intersect g-image), sorted.
    std::vector<int64_t> common_colors() const;
};

struct FenceSolution {
    std::vector<uint32_t> chosen;  // item indices, ascending
    Rational value;
    // The color subset N of H behind subset-based solutions: kept items are
    // those with (f in N or f outside H) and (g outside N or g outside H).
    std::optional<std::vector<int64_t>> color_set;
};

// Checked straight off the raw items, independent of any solver.
bool feasible(const FenceInstance& inst, const std::vector<uint32_t>& chosen);

// Exact optimum by enumerating color subsets N of H (Gray-code walk with
// incremental value updates). The optimum is always attained at some N.
// Throws when |H| > 24, pointing at solve_guarantee.
FenceSolution solve_exact(const FenceInstance& inst);

// Exhaustive over item subsets; the independent oracle for solve_exact.
FenceSolution brute_force_oracle(const FenceInstance& inst, int max_items = 20);

// Derandomized random-color-subset argument: conditional expectations over
// per-color side choices keep the expected kept weight at total/4 or above,
// so the returned feasible set has value >= total_weight / 4 exactly.
// Requires f != g on every item.
FenceSolution solve_guarantee(const FenceInstance& inst);

// One item per ordered pair (a, b), a != b in {1..n}, uniform weights
// 1/(n(n-1)). The optimum is max_k k(n-k)/(n(n-1)).
FenceInstance tight_instance(int n);

Rational tight_closed_form(int n);  // max_k k(n-k) / (n(n-1))

struct TightReport {
    int n = 0;
    Rational optimum;                  // solve_exact on the instance
    Rational closed_form;              // max_k k(n-k)/(n(n-1))
    Rational bound_as_printed;         // 1/4 + 1/(16n-4)
    Rational bound_direct_arithmetic;  // n^2/4 * 1/(n(n-1)) = 1/4 + 1/(4n-4)
    bool printed_bound_holds = false;  // optimum <= printed bound?
};

// The tight family's numbers side by side; the printed bound fails already
// at n = 2 (optimum 1/2), the direct-arithmetic bound is the honest one.
TightReport tight_report(int n);

struct DistinguishResult {
    ClopenSet witness_clopen;   // C, a union of target atoms
    Dyadic separated;           // lambda(phi(C) symdiff psi(C))
    Dyadic agreement_weight;    // delta, mass of source atoms the maps agree on
    ClopenSet chosen_atoms;     // L as a source-depth clopen set
    Rational solver_value;
};

// Extracts a single clopen C with lambda(phi(C) symdiff psi(C)) >= (1-delta)/4
// from two point maps: drop agreeing atoms, solve the fence instance whose
// colors are the two tables, take C = the f-image of the solution.
// Throws "homomorphisms equal at this depth" when the tables are identical.
DistinguishResult distinguish(const PointMap& phi, const PointMap& psi);

}  // namespace boolconv

#endif
