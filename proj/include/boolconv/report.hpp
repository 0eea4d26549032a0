#ifndef BOOLCONV_REPORT_HPP
#define BOOLCONV_REPORT_HPP

#include "boolconv/badset.hpp"
#include "boolconv/convergence.hpp"
#include "boolconv/fence.hpp"
#include "boolconv/hamming.hpp"

#include <json.hpp>

#include <string>

namespace boolconv {

using OrderedJson = nlohmann::ordered_json;

// Exact value plus a rendered approximation, never the approximation alone.
OrderedJson json_of(const Dyadic& d);
OrderedJson json_of(const Rational& r);
OrderedJson json_of(const ClopenSet& s);

OrderedJson hamming_report(int m, bool verify, bool include_words = true);
OrderedJson badset_report(const BadSetConstruction& c, bool emit_clopen);
OrderedJson fence_solution_report(const FenceInstance& inst, const FenceSolution& sol);
OrderedJson tight_instance_report(const TightReport& r);
OrderedJson distinguish_report(const DistinguishResult& r);
OrderedJson convergence_report_json(const ConvergenceReport& r);

// One row per (index, probe) with exact values rendered as fractions.
std::string convergence_report_csv(const HomFamily& family, const ClassifyConfig& cfg);

// All five example families classified at one (depth, window) scale, plus the
// implication-diagram footnotes.
OrderedJson diagram_report(int depth, const ClassifyConfig& cfg);

FenceInstance fence_instance_from_json(const OrderedJson& j);
OrderedJson fence_instance_to_json(const FenceInstance& inst);

struct MapPair {
    PointMap phi;
    PointMap psi;
};
MapPair map_pair_from_json(const OrderedJson& j);

}  // namespace boolconv

#endif
