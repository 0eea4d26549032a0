#include "boolconv/report.hpp"

#include <sstream>

namespace boolconv {

OrderedJson json_of(const Dyadic& d) {
    return {{"num", d.num.convert_to<uint64_t>()}, {"exp", d.exp}, {"approx", d.approx()}};
}

OrderedJson json_of(const Rational& r) {
    return {{"frac", r.str()}, {"approx", r.approx()}};
}

OrderedJson json_of(const ClopenSet& s) {
    return {{"depth", s.depth()}, {"atoms_hex", s.atoms_hex()}};
}

OrderedJson hamming_report(int m, bool verify, bool include_words) {
    Code c = perfect_code(m);
    OrderedJson j;
    j["m"] = m;
    j["n"] = c.n;
    j["size"] = c.size();
    if (verify) {
        PerfectReport r = verify_perfect(c);
        j["disjoint"] = r.disjoint;
        j["covering"] = r.covering;
        j["exhaustive"] = r.exhaustive;
    }
    if (include_words && c.has_words()) j["words"] = c.words;
    return j;
}

OrderedJson badset_report(const BadSetConstruction& c, bool emit_clopen) {
    OrderedJson j;
    j["target"] = json_of(c.target);
    j["requested_stages"] = c.requested_stages;
    j["built_stages"] = c.stages.size();
    j["capped"] = c.capped;
    j["depth_cap"] = c.depth_cap;
    OrderedJson stages = OrderedJson::array();
    for (size_t n = 0; n < c.stages.size(); ++n) {
        stages.push_back({{"stage", n},
                          {"depth", c.stages[n].depth},
                          {"excluded_words", c.stages[n].code.popcount()},
                          {"bad_measure", json_of(c.bad_measure(n))}});
    }
    j["stages"] = stages;
    if (emit_clopen) j["bad_set"] = json_of(c.bad_set());
    return j;
}

OrderedJson fence_solution_report(const FenceInstance& inst, const FenceSolution& sol) {
    OrderedJson j;
    j["items"] = inst.items.size();
    j["total_weight"] = json_of(inst.total_weight());
    j["value"] = json_of(sol.value);
    j["chosen"] = sol.chosen;
    j["feasible"] = feasible(inst, sol.chosen);
    if (sol.color_set) j["color_set"] = *sol.color_set;
    return j;
}

OrderedJson tight_instance_report(const TightReport& r) {
    OrderedJson j;
    j["n"] = r.n;
    j["items"] = r.n * (r.n - 1);
    j["optimum"] = json_of(r.optimum);
    j["closed_form"] = json_of(r.closed_form);
    j["bound_as_printed"] = json_of(r.bound_as_printed);
    j["bound_direct_arithmetic"] = json_of(r.bound_direct_arithmetic);
    j["printed_bound_holds"] = r.printed_bound_holds;
    if (!r.printed_bound_holds)
        j["note"] = "optimum exceeds the printed 1/4 + 1/(16n-4) bound; the direct "
                    "evaluation of n^2/4 * 1/(n(n-1)) is 1/4 + 1/(4n-4), which holds";
    return j;
}

OrderedJson distinguish_report(const DistinguishResult& r) {
    OrderedJson j;
    j["separated"] = json_of(r.separated);
    j["agreement_weight"] = json_of(r.agreement_weight);
    j["solver_value"] = json_of(r.solver_value);
    j["witness_clopen"] = json_of(r.witness_clopen);
    j["chosen_atoms"] = json_of(r.chosen_atoms);
    return j;
}

namespace {

OrderedJson mode_json(const ModeResult& m) {
    OrderedJson j;
    j["verdict"] = m.verdict;
    j["value"] = json_of(m.value);
    j["witness"] = m.witness;
    return j;
}

}  // namespace

OrderedJson convergence_report_json(const ConvergenceReport& r) {
    OrderedJson j;
    j["family"] = r.family;
    j["depth"] = r.depth;
    j["window"] = {r.window.lo, r.window.hi};
    OrderedJson modes;
    modes["uniform"] = mode_json(r.uniform);
    modes["borelProbe"] = mode_json(r.borel);
    modes["pointwiseMetric"] = mode_json(r.metric);
    modes["algebraic"] = mode_json(r.algebraic);
    j["modes"] = modes;
    j["notes"] = r.notes;
    return j;
}

std::string convergence_report_csv(const HomFamily& family, const ClassifyConfig& cfg) {
    std::ostringstream out;
    out << "family,mode,index,probe,value\n";
    if (family.is_pair()) {
        out << convergence_report_csv(family.components[0], cfg);
        out << convergence_report_csv(family.components[1], cfg);
        return out.str();
    }
    std::string name = family.kind_name();
    uint32_t ehi = std::min<uint32_t>(cfg.window.hi, family.faithful_count());
    PointMap limit = family.limit();
    int pd = std::max(1, std::min(cfg.probe_depth, family.working_depth - 1));
    std::vector<std::pair<std::string, ClopenSet>> probes = {
        {"X0", ClopenSet::coordinate_half(0, 0, std::max(pd, 1))}};
    if (pd >= 2) probes.push_back({"X1", ClopenSet::coordinate_half(1, 0, pd)});
    for (uint32_t k = cfg.window.lo; k < ehi; ++k) {
        PointMap m = family.materialize(k);
        for (const auto& [pname, pset] : probes)
            out << name << ",pointwiseMetric," << k << "," << pname << ","
                << pointwise_distance(m, limit, pset).to_rational().str() << "\n";
        UniformDistance ud = uniform_distance(m, limit, {.seed = cfg.seed});
        out << name << ",uniform," << k << ",sup,"
            << ud.value.to_rational().str() << "\n";
    }
    return out.str();
}

OrderedJson diagram_report(int depth, const ClassifyConfig& cfg) {
    struct Row {
        const char* label;
        HomFamily family;
    };
    std::vector<Row> rows;
    rows.push_back({"point_eval", HomFamily::point_eval(depth)});
    rows.push_back({"agree_flip", HomFamily::agree_flip(depth)});
    rows.push_back({"pair", HomFamily::pair(HomFamily::point_eval(depth),
                                            HomFamily::agree_flip(depth))});
    rows.push_back({"flip", HomFamily::flip(depth)});
    rows.push_back({"restriction", HomFamily::restriction(depth)});

    OrderedJson j;
    j["depth"] = depth;
    j["window"] = {cfg.window.lo, cfg.window.hi};
    OrderedJson fams = OrderedJson::array();
    for (const auto& row : rows) {
        ConvergenceReport rep = classify(row.family, cfg);
        OrderedJson f = convergence_report_json(rep);
        f["label"] = row.label;
        fams.push_back(f);
    }
    j["families"] = fams;
    j["footnotes"] = {
        "implications: uniform => pointwise Borel metric => pointwise metric; "
        "pointwise algebraic => pointwise metric",
        "pointwise metric => pointwise Borel metric holds when the domain algebra "
        "has the positive Grothendieck property",
        "pointwise algebraic => uniform holds when the domain algebra has Seever's "
        "interpolation property (F-space Stone space)"};
    return j;
}

FenceInstance fence_instance_from_json(const OrderedJson& j) {
    FenceInstance inst;
    for (const auto& row : j) {
        FenceItem it;
        it.weight = Rational::parse(row.at("w").get<std::string>());
        it.f = row.at("f").get<int64_t>();
        it.g = row.at("g").get<int64_t>();
        inst.items.push_back(std::move(it));
    }
    return inst;
}

OrderedJson fence_instance_to_json(const FenceInstance& inst) {
    OrderedJson j = OrderedJson::array();
    for (const auto& it : inst.items)
        j.push_back({{"w", it.weight.str()}, {"f", it.f}, {"g", it.g}});
    return j;
}

MapPair map_pair_from_json(const OrderedJson& j) {
    MapPair p;
    p.phi.source_depth = p.psi.source_depth = j.at("sourceDepth").get<int>();
    p.phi.target_depth = p.psi.target_depth = j.at("targetDepth").get<int>();
    p.phi.table = j.at("phi").get<std::vector<uint32_t>>();
    p.psi.table = j.at("psi").get<std::vector<uint32_t>>();
    size_t expect = size_t(1) << p.phi.source_depth;
    if (p.phi.table.size() != expect || p.psi.table.size() != expect)
        throw std::invalid_argument("map pair: table length must be 2^sourceDepth");
    for (uint32_t a : p.phi.table)
        if (a >= (uint64_t(1) << p.phi.target_depth))
            throw std::invalid_argument("map pair: phi entry out of range");
    for (uint32_t a : p.psi.table)
        if (a >= (uint64_t(1) << p.psi.target_depth))
            throw std::invalid_argument("map pair: psi entry out of range");
    return p;
}

}  // namespace boolconv
