#ifndef BOOLCONV_CONVERGENCE_HPP
#define BOOLCONV_CONVERGENCE_HPP

#include "boolconv/badset.hpp"
#include "boolconv/family.hpp"
#include "boolconv/point_map.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace boolconv {

// Half-open index window into a family.
struct Window {
    uint32_t lo = 0;
    uint32_t hi = 0;
};

// Joint distribution of the two tables over pairs of target atoms; the
// carrier of every uniform-distance computation. Entries are source-atom
// counts, so weights are exact dyadics count / 2^source_depth.
struct AtomCoupling {
    int source_depth = 0;
    int target_depth = 0;
    std::map<std::pair<uint32_t, uint32_t>, uint64_t> counts;

    static AtomCoupling of(const PointMap& phi, const PointMap& psi);

    Dyadic weight(uint32_t a, uint32_t b) const;
    std::vector<Dyadic> first_marginal() const;
    std::vector<Dyadic> second_marginal() const;
    Dyadic total() const;
};

// d_mu(phi(A), psi(A)) for one probe.
Dyadic pointwise_distance(const PointMap& phi, const PointMap& psi, const ClopenSet& a);

struct UniformDistance {
    Dyadic value;          // exact sup when `exact`, else best lower bound found
    ClopenSet witness;     // union of target atoms achieving `value`
    bool exact = false;
    Dyadic upper_bound;    // disagreement measure; always >= the true sup
};

struct UniformOptions {
    int exact_cap = 20;    // enumerate exhaustively up to this many support atoms
    int search_starts = 32;
    uint64_t seed = 0;
    // Witness candidates tried first; kept as the witness when they attain
    // the returned value.
    const std::vector<ClopenSet>* hints = nullptr;
};

// Sup over the whole depth-m target algebra of d_mu(phi(A), psi(A)). The
// objective depends on A only through its atom set, so subset enumeration
// over the coupling's support atoms is the full supremum; above the cap a
// seeded single-flip local search reports a lower bound with exact=false.
UniformDistance uniform_distance(const PointMap& phi, const PointMap& psi,
                                 const UniformOptions& opts = {});

// Meet / join of phi_k(A) over k in the window.
ClopenSet window_liminf(const HomFamily& family, const ClopenSet& a, Window w);
ClopenSet window_limsup(const HomFamily& family, const ClopenSet& a, Window w);

// Pushforward of the uniform measure along the table: entry a is the mass of
// source atoms mapped to target atom a. Entries sum to 1.
std::vector<Dyadic> pushforward(const PointMap& phi);

// Total variation on measure vectors: sum of |p_a - q_a|, the clopen form of
// the variation metric on a totally disconnected space.
Dyadic variation_distance(const std::vector<Dyadic>& p, const std::vector<Dyadic>& q);

// One named probe set; bad-set probes carry their stage starts so algebraic
// tails anchor where the construction certifies an escape.
struct Probe {
    std::string name;
    ClopenSet set;
    std::vector<int> stage_anchors;  // empty for plain clopen probes
};

struct ModeResult {
    std::string verdict;  // "holds" | "fails" | "inconclusive"
    Dyadic value;         // headline exact measure backing the verdict
    nlohmann::ordered_json witness;
};

struct ConvergenceReport {
    nlohmann::ordered_json family;
    int depth = 0;
    Window window;
    ModeResult metric;
    ModeResult uniform;
    ModeResult algebraic;
    ModeResult borel;
    std::vector<std::string> notes;

    const ModeResult& mode(const std::string& name) const;
};

struct ClassifyConfig {
    Window window{0, 48};
    uint64_t seed = 0;
    int probe_depth = 6;              // clopen probes live at min(probe_depth, depth)
    std::vector<int> borel_schedule;  // defaults to 4,6,...,depth
};

// Runs all four modes on the family's designated probes and asserts the
// implication arrows (uniform => borel => metric, algebraic => metric) on the
// verdicts before returning.
ConvergenceReport classify(const HomFamily& family, const ClassifyConfig& cfg = {});

// Measures d(phi_k(Cyl_d(x)), phi(Cyl_d(x))) for each family index k in the
// window and each depth d of the schedule.
struct BorelTable {
    std::vector<int> depths;
    std::vector<uint32_t> indices;
    std::vector<std::vector<Dyadic>> values;  // [index][depth]
};
BorelTable borel_singleton_table(const HomFamily& family, const PointSpec& x,
                                 const std::vector<int>& schedule, Window w);

}  // namespace boolconv

#endif
