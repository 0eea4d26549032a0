#include "boolconv/convergence.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace boolconv {

namespace {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

nlohmann::ordered_json dyadic_json(const Dyadic& d) {
    return {{"num", d.num.convert_to<uint64_t>()}, {"exp", d.exp}, {"approx", d.approx()}};
}

nlohmann::ordered_json clopen_json(const ClopenSet& s) {
    return {{"depth", s.depth()}, {"atoms_hex", s.atoms_hex()}};
}

}  // namespace

AtomCoupling AtomCoupling::of(const PointMap& phi, const PointMap& psi) {
    if (phi.source_depth != psi.source_depth || phi.target_depth != psi.target_depth)
        throw std::invalid_argument("coupling: depth mismatch");
    AtomCoupling c;
    c.source_depth = phi.source_depth;
    c.target_depth = phi.target_depth;
    for (size_t i = 0; i < phi.table.size(); ++i)
        ++c.counts[{phi.table[i], psi.table[i]}];
    return c;
}

Dyadic AtomCoupling::weight(uint32_t a, uint32_t b) const {
    auto it = counts.find({a, b});
    if (it == counts.end()) return Dyadic::zero();
    return Dyadic(it->second, uint32_t(source_depth));
}

std::vector<Dyadic> AtomCoupling::first_marginal() const {
    std::vector<Dyadic> m(size_t(1) << target_depth, Dyadic::zero());
    for (const auto& [pair, n] : counts)
        m[pair.first] = m[pair.first] + Dyadic(n, uint32_t(source_depth));
    return m;
}

std::vector<Dyadic> AtomCoupling::second_marginal() const {
    std::vector<Dyadic> m(size_t(1) << target_depth, Dyadic::zero());
    for (const auto& [pair, n] : counts)
        m[pair.second] = m[pair.second] + Dyadic(n, uint32_t(source_depth));
    return m;
}

Dyadic AtomCoupling::total() const {
    uint64_t t = 0;
    for (const auto& [pair, n] : counts) t += n;
    return Dyadic(t, uint32_t(source_depth));
}

Dyadic pointwise_distance(const PointMap& phi, const PointMap& psi, const ClopenSet& a) {
    if (phi.source_depth != psi.source_depth)
        throw std::invalid_argument("pointwise distance: source depth mismatch");
    return fn_distance(phi.apply(a), psi.apply(a));
}

namespace {

// Max-cut view of the uniform distance: support atoms are the targets hit by
// off-diagonal coupling pairs, edge weight = count(a,b) + count(b,a), and
// d(phi(A), psi(A)) * 2^n is the cut value of A's side assignment.
struct CutProblem {
    std::vector<uint32_t> atoms;                            // sorted support
    std::vector<std::vector<std::pair<int, uint64_t>>> adj;  // index -> (index, w)
    uint64_t upper = 0;                                      // total off-diag count

    int index_of(uint32_t atom) const {
        auto it = std::lower_bound(atoms.begin(), atoms.end(), atom);
        return it != atoms.end() && *it == atom ? int(it - atoms.begin()) : -1;
    }

    uint64_t cut_value(const std::vector<uint8_t>& side) const {
        uint64_t v = 0;
        for (size_t u = 0; u < adj.size(); ++u)
            for (const auto& [o, w] : adj[u])
                if (int(u) < o && side[u] != side[size_t(o)]) v += w;
        return v;
    }

    int64_t flip_gain(const std::vector<uint8_t>& side, size_t u) const {
        int64_t g = 0;
        for (const auto& [o, w] : adj[u])
            g += side[u] == side[size_t(o)] ? int64_t(w) : -int64_t(w);
        return g;
    }
};

CutProblem build_cut(const AtomCoupling& coupling) {
    CutProblem p;
    std::map<std::pair<uint32_t, uint32_t>, uint64_t> sym;
    for (const auto& [pair, n] : coupling.counts) {
        if (pair.first == pair.second) continue;
        auto key = std::minmax(pair.first, pair.second);
        sym[{key.first, key.second}] += n;
        p.upper += n;
    }
    for (const auto& [pair, n] : sym) {
        p.atoms.push_back(pair.first);
        p.atoms.push_back(pair.second);
    }
    std::sort(p.atoms.begin(), p.atoms.end());
    p.atoms.erase(std::unique(p.atoms.begin(), p.atoms.end()), p.atoms.end());
    p.adj.resize(p.atoms.size());
    for (const auto& [pair, n] : sym) {
        int u = p.index_of(pair.first), v = p.index_of(pair.second);
        p.adj[size_t(u)].push_back({v, n});
        p.adj[size_t(v)].push_back({u, n});
    }
    return p;
}

}  // namespace

UniformDistance uniform_distance(const PointMap& phi, const PointMap& psi,
                                 const UniformOptions& opts) {
    AtomCoupling coupling = AtomCoupling::of(phi, psi);
    CutProblem cut = build_cut(coupling);
    uint32_t n = uint32_t(phi.source_depth);

    UniformDistance res;
    res.upper_bound = Dyadic(cut.upper, n);
    res.witness = ClopenSet(phi.target_depth);
    if (cut.upper == 0) {  // identical tables
        res.exact = true;
        return res;
    }

    uint64_t best = 0;
    bool have_witness_set = false;
    std::vector<uint8_t> best_side;
    ClopenSet best_hint(phi.target_depth);

    // Named candidates first, so an attaining probe stays the witness.
    if (opts.hints) {
        for (const ClopenSet& hint : *opts.hints) {
            if (hint.depth() > phi.target_depth) continue;
            ClopenSet h = hint.refine(phi.target_depth);
            uint64_t v = 0;
            for (const auto& [pair, cnt] : coupling.counts)
                if (h.test(pair.first) != h.test(pair.second)) v += cnt;
            if (v > best) {
                best = v;
                best_hint = h;
                have_witness_set = false;
            }
            if (best == cut.upper) break;
        }
    }

    size_t s = cut.atoms.size();
    if (best < cut.upper && int(s) <= opts.exact_cap) {
        // Gray-code walk over support subsets; incremental cut updates.
        std::vector<uint8_t> side(s, 0);
        uint64_t cur = 0;
        for (uint64_t step = 1; step < (uint64_t(1) << s); ++step) {
            size_t u = size_t(std::countr_zero(step));
            cur = uint64_t(int64_t(cur) + cut.flip_gain(side, u));
            side[u] ^= 1;
            if (cur > best) {
                best = cur;
                best_side = side;
                have_witness_set = true;
            }
        }
        res.exact = true;
    } else if (best < cut.upper) {
        uint64_t rng = opts.seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull;
        for (int start = 0; start < opts.search_starts && best < cut.upper; ++start) {
            std::vector<uint8_t> side(s);
            for (auto& b : side) b = uint8_t(splitmix64(rng) & 1);
            uint64_t cur = cut.cut_value(side);
            bool improved = true;
            while (improved) {
                improved = false;
                for (size_t u = 0; u < s; ++u) {
                    int64_t g = cut.flip_gain(side, u);
                    if (g > 0) {
                        side[u] ^= 1;
                        cur = uint64_t(int64_t(cur) + g);
                        improved = true;
                    }
                }
            }
            if (cur > best) {
                best = cur;
                best_side = side;
                have_witness_set = true;
            }
        }
        res.exact = best == cut.upper;
    } else {
        res.exact = true;  // a hint met the disagreement bound
    }

    res.value = Dyadic(best, n);
    if (have_witness_set) {
        ClopenSet w(phi.target_depth);
        for (size_t u = 0; u < s; ++u)
            if (best_side[u]) w.set(cut.atoms[u]);
        res.witness = w;
    } else {
        res.witness = best_hint;
    }
    return res;
}

ClopenSet window_liminf(const HomFamily& family, const ClopenSet& a, Window w) {
    if (w.lo >= w.hi) throw std::invalid_argument("window: empty");
    ClopenSet acc = family.materialize(w.lo).apply(a);
    for (uint32_t k = w.lo + 1; k < w.hi; ++k)
        acc = meet(acc, family.materialize(k).apply(a));
    return acc;
}

ClopenSet window_limsup(const HomFamily& family, const ClopenSet& a, Window w) {
    if (w.lo >= w.hi) throw std::invalid_argument("window: empty");
    ClopenSet acc = family.materialize(w.lo).apply(a);
    for (uint32_t k = w.lo + 1; k < w.hi; ++k)
        acc = join(acc, family.materialize(k).apply(a));
    return acc;
}

std::vector<Dyadic> pushforward(const PointMap& phi) {
    std::vector<uint64_t> counts(size_t(1) << phi.target_depth, 0);
    for (uint32_t a : phi.table) ++counts[a];
    std::vector<Dyadic> out;
    out.reserve(counts.size());
    for (uint64_t c : counts) out.push_back(Dyadic(c, uint32_t(phi.source_depth)));
    return out;
}

Dyadic variation_distance(const std::vector<Dyadic>& p, const std::vector<Dyadic>& q) {
    if (p.size() != q.size()) throw std::invalid_argument("variation: length mismatch");
    Dyadic total;
    for (size_t i = 0; i < p.size(); ++i)
        total = total + (p[i] < q[i] ? q[i] - p[i] : p[i] - q[i]);
    return total;
}

BorelTable borel_singleton_table(const HomFamily& family, const PointSpec& x,
                                 const std::vector<int>& schedule, Window w) {
    BorelTable t;
    t.depths = schedule;
    PointMap limit = family.limit();
    for (uint32_t k = w.lo; k < w.hi; ++k) t.indices.push_back(k);
    t.values.resize(t.indices.size());
    for (size_t ki = 0; ki < t.indices.size(); ++ki) {
        PointMap member = family.materialize(t.indices[ki]);
        for (int d : schedule) {
            ClopenSet cyl = ClopenSet::atom(x.atom_at(d), d);
            t.values[ki].push_back(
                fn_distance(member.apply(cyl), limit.apply(cyl)));
        }
    }
    return t;
}

const ModeResult& ConvergenceReport::mode(const std::string& name) const {
    if (name == "pointwiseMetric") return metric;
    if (name == "uniform") return uniform;
    if (name == "algebraic") return algebraic;
    if (name == "borelProbe") return borel;
    throw std::invalid_argument("report: unknown mode " + name);
}

namespace {

std::vector<uint32_t> default_anchors(uint32_t lo, uint32_t hi) {
    std::vector<uint32_t> a;
    uint32_t len = hi - lo;
    uint32_t step = std::max<uint32_t>(1, len / 8);
    for (uint32_t v = lo; v < hi; v += step) a.push_back(v);
    if (a.back() != hi - 1) a.push_back(hi - 1);
    return a;
}

// Tail suprema of a value sequence starting at E.lo, evaluated at anchors.
std::vector<Dyadic> tail_sups(const std::vector<Dyadic>& values, uint32_t lo,
                              const std::vector<uint32_t>& anchors) {
    std::vector<Dyadic> suffix(values.size() + 1, Dyadic::zero());
    for (size_t i = values.size(); i-- > 0;)
        suffix[i] = std::max(values[i], suffix[i + 1]);
    std::vector<Dyadic> out;
    for (uint32_t a : anchors) out.push_back(suffix[a - lo]);
    return out;
}

struct DecayVerdict {
    std::string verdict;
    Dyadic first;
    Dyadic last;
};

// holds: the tail bound vanished or at least halved across the window;
// fails: positive and not improved at all; otherwise inconclusive.
DecayVerdict decay_verdict(const std::vector<Dyadic>& sups) {
    DecayVerdict v;
    v.first = sups.front();
    v.last = sups.back();
    if (v.last.is_zero() || v.last.doubled() <= v.first) v.verdict = "holds";
    else if (v.last == v.first) v.verdict = "fails";
    else v.verdict = "inconclusive";
    return v;
}

std::vector<Probe> build_probes(const HomFamily& family, const ClassifyConfig& cfg) {
    int depth = family.working_depth;
    // Probes stay strictly below the working depth: a probe reading the last
    // faithful coordinate would spike at the window's edge where no decay can
    // be observed.
    int pd = std::max(1, std::min(cfg.probe_depth, depth - 1));
    std::vector<Probe> probes;
    probes.push_back({"X0", ClopenSet::coordinate_half(0, 0, std::max(pd, 1)), {}});
    if (pd >= 2) probes.push_back({"X1", ClopenSet::coordinate_half(1, 0, pd), {}});
    if (pd >= 4)
        probes.push_back({"X" + std::to_string(pd - 1),
                          ClopenSet::coordinate_half(pd - 1, 0, pd), {}});
    uint64_t rng = cfg.seed * 0x9e3779b97f4a7c15ull + 0xd1b54a32d192ed03ull;
    for (int r = 0; r < 2; ++r) {
        ClopenSet s(pd);
        for (uint64_t i = 0; i < s.atom_count(); ++i)
            if (splitmix64(rng) & 1) s.set(i);
        probes.push_back({"rand" + std::to_string(r), s, {}});
    }
    if (family.kind == HomFamily::Kind::Flip && depth >= 6) {
        BadSetConstruction bs = build_stages(Rational(1, 2), 8, depth);
        if (bs.stages.size() >= 2) {
            Probe p{"badset", bs.bad_set(), {}};
            uint32_t ehi = std::min<uint32_t>(cfg.window.hi, family.faithful_count());
            for (size_t j = 0; j + 1 < bs.stages.size(); ++j) {
                uint32_t dj = uint32_t(bs.stages[j].depth);
                uint32_t dj1 = uint32_t(bs.stages[j + 1].depth);
                if (dj >= cfg.window.lo && dj1 <= ehi) p.stage_anchors.push_back(int(dj));
            }
            if (!p.stage_anchors.empty()) probes.push_back(std::move(p));
        }
    }
    return probes;
}

struct ModeAccumulator {
    ModeResult result;
    bool any_fail = false;
    bool any_inconclusive = false;

    void add_probe(const std::string& verdict, const Dyadic& value,
                   nlohmann::ordered_json witness) {
        if (verdict == "fails") {
            if (!any_fail || value > result.value) {
                result.value = value;
                result.witness = std::move(witness);
            }
            any_fail = true;
        } else if (verdict == "inconclusive") {
            any_inconclusive = true;
        } else if (!any_fail && !any_inconclusive && value > result.value) {
            result.value = value;  // residual bound backing a holds verdict
            result.witness = std::move(witness);
        }
    }

    ModeResult finish() {
        result.verdict = any_fail ? "fails" : (any_inconclusive ? "inconclusive" : "holds");
        return result;
    }
};

ConvergenceReport classify_single(const HomFamily& family, const ClassifyConfig& cfg) {
    int depth = family.working_depth;
    if (depth < 1) throw std::invalid_argument("classify: depth must be positive");
    uint32_t ehi = std::min<uint32_t>(cfg.window.hi, family.faithful_count());
    if (cfg.window.lo >= ehi)
        throw std::invalid_argument("classify: window misses the faithful range");
    Window e{cfg.window.lo, ehi};
    std::vector<uint32_t> anchors = default_anchors(e.lo, e.hi);
    std::vector<Probe> probes = build_probes(family, cfg);
    PointMap limit = family.limit();

    std::vector<PointMap> members;
    members.reserve(e.hi - e.lo);
    for (uint32_t k = e.lo; k < e.hi; ++k) members.push_back(family.materialize(k));

    ConvergenceReport rep;
    rep.family = family.descriptor();
    rep.depth = depth;
    rep.window = cfg.window;
    if (ehi < cfg.window.hi)
        rep.notes.push_back("family truncated to faithful indices [" +
                            std::to_string(e.lo) + ", " + std::to_string(e.hi) +
                            ") at depth " + std::to_string(depth));

    // pointwise metric
    {
        ModeAccumulator acc;
        for (const Probe& p : probes) {
            ClopenSet lim_a = limit.apply(p.set);
            std::vector<Dyadic> vals;
            for (const PointMap& m : members)
                vals.push_back(fn_distance(m.apply(p.set), lim_a));
            std::vector<Dyadic> sups = tail_sups(vals, e.lo, anchors);
            DecayVerdict dv = decay_verdict(sups);
            nlohmann::ordered_json w{{"probe", p.name},
                                     {"tail_sup_first", dyadic_json(dv.first)},
                                     {"tail_sup_last", dyadic_json(dv.last)}};
            acc.add_probe(dv.verdict, dv.last, std::move(w));
        }
        rep.metric = acc.finish();
    }

    // uniform
    {
        std::vector<ClopenSet> hints;
        // Coordinate halves at full depth first: they attain the sup for the
        // flip-style families and make the witness a named set.
        for (int j = 0; j < depth; ++j)
            hints.push_back(ClopenSet::coordinate_half(j, 0, depth));
        for (const Probe& p : probes) hints.push_back(p.set);
        std::vector<Dyadic> lowers, uppers;
        std::vector<UniformDistance> uds;
        UniformOptions opts;
        opts.seed = cfg.seed;
        opts.hints = &hints;
        for (const PointMap& m : members) {
            uds.push_back(uniform_distance(m, limit, opts));
            lowers.push_back(uds.back().value);
            uppers.push_back(uds.back().upper_bound);
        }
        std::vector<Dyadic> sup_lo = tail_sups(lowers, e.lo, anchors);
        std::vector<Dyadic> sup_up = tail_sups(uppers, e.lo, anchors);
        ModeResult r;
        bool all_exact = true;
        for (const auto& ud : uds) all_exact = all_exact && ud.exact;
        if (sup_up.back().is_zero() || sup_up.back().doubled() <= sup_up.front()) {
            r.verdict = "holds";
            r.value = sup_up.back();
            r.witness = {{"tail_bound_first", dyadic_json(sup_up.front())},
                         {"tail_bound_last", dyadic_json(sup_up.back())}};
        } else if (!sup_lo.back().is_zero() && sup_lo.back() == sup_lo.front()) {
            // the exact lower bounds never improved across the window
            uint32_t arg = e.lo;
            for (uint32_t k = anchors.back(); k < e.hi; ++k)
                if (lowers[k - e.lo] == sup_lo.back()) { arg = k; break; }
            const UniformDistance& ud = uds[arg - e.lo];
            r.verdict = "fails";
            r.value = ud.value;
            r.witness = {{"index", arg},
                         {"witness", clopen_json(ud.witness)},
                         {"value", dyadic_json(ud.value)},
                         {"exact", ud.exact}};
        } else {
            r.verdict = "inconclusive";
            r.value = sup_lo.back();
            r.witness = {{"tail_lower_last", dyadic_json(sup_lo.back())},
                         {"tail_upper_last", dyadic_json(sup_up.back())}};
        }
        if (!all_exact)
            rep.notes.push_back("uniform distances above the max-cut cap use local search");
        rep.uniform = r;
    }

    // pointwise algebraic
    {
        struct Failure {
            bool liminf_empty;
            Dyadic min_gap;
            nlohmann::ordered_json witness;
        };
        std::vector<Failure> failures;
        for (const Probe& p : probes) {
            ClopenSet lim_a = limit.apply(p.set);
            std::vector<uint32_t> pa;
            if (!p.stage_anchors.empty())
                for (int a : p.stage_anchors) pa.push_back(uint32_t(a));
            else
                pa = anchors;
            bool settled = false;
            Dyadic min_gap;
            bool first = true;
            bool liminf_empty = false;
            nlohmann::ordered_json anchor_rows = nlohmann::ordered_json::array();
            for (uint32_t a : pa) {
                ClopenSet m = window_liminf(family, p.set, {a, e.hi});
                ClopenSet j = window_limsup(family, p.set, {a, e.hi});
                Dyadic gap = fn_distance(m, lim_a) + fn_distance(j, lim_a);
                anchor_rows.push_back({{"anchor", a}, {"gap", dyadic_json(gap)}});
                if (a == pa.front() && m.is_empty() && !lim_a.is_empty()) liminf_empty = true;
                if (gap.is_zero()) settled = true;
                if (first || gap < min_gap) min_gap = gap;
                first = false;
            }
            if (!settled)
                failures.push_back({liminf_empty, min_gap,
                                    {{"probe", p.name},
                                     {"min_gap", dyadic_json(min_gap)},
                                     {"liminf_empty", liminf_empty},
                                     {"anchors", anchor_rows}}});
        }
        ModeResult r;
        if (failures.empty()) {
            r.verdict = "holds";
        } else {
            // Witness preference: an empty window-liminf is the cleanest
            // evidence, then the largest exact gap.
            const Failure* pick = &failures.front();
            for (const Failure& f : failures) {
                if (f.liminf_empty != pick->liminf_empty) {
                    if (f.liminf_empty) pick = &f;
                } else if (f.min_gap > pick->min_gap) {
                    pick = &f;
                }
            }
            r.verdict = "fails";
            r.value = pick->min_gap;
            r.witness = pick->witness;
        }
        rep.algebraic = r;
    }

    // Borel singleton probe at the all-zero point
    {
        std::vector<int> schedule = cfg.borel_schedule;
        if (schedule.empty()) {
            int start = depth >= 9 ? 4 : 1;
            int step = depth >= 9 ? 2 : 1;
            for (int d = start; d <= depth; d += step) schedule.push_back(d);
        }
        BorelTable t = borel_singleton_table(family, PointSpec{}, schedule, e);
        ModeResult r;
        if (schedule.size() < 3) {
            r.verdict = "inconclusive";  // too shallow to detect stabilization
        } else {
            r.verdict = "holds";
            // Stabilization must persist to the deepest cylinders probed: a
            // plateau that later decays is not a lower bound uniform in d.
            size_t last = schedule.size() - 1;
            for (size_t ki = 0; ki < t.indices.size(); ++ki) {
                const auto& row = t.values[ki];
                if (!row[last].is_zero() && row[last] == row[last - 1] &&
                    row[last] == row[last - 2]) {
                    r.verdict = "fails";
                    r.value = row[last];
                    r.witness = {{"index", t.indices[ki]},
                                 {"stable_value", dyadic_json(row[last])},
                                 {"from_depth", t.depths[last - 2]}};
                    break;
                }
            }
        }
        rep.borel = r;
    }

    // Implication arrows of the convergence diagram; a violating report is a
    // bug, not an output.
    auto guard = [](const ModeResult& from, const ModeResult& to, const char* what) {
        if (from.verdict == "holds" && to.verdict == "fails")
            throw std::logic_error(std::string("implication violated: ") + what);
    };
    guard(rep.uniform, rep.borel, "uniform => borel");
    guard(rep.borel, rep.metric, "borel => metric");
    guard(rep.algebraic, rep.metric, "algebraic => metric");
    return rep;
}

ModeResult conjoin(const ModeResult& a, const ModeResult& b) {
    ModeResult r;
    const ModeResult* fail = a.verdict == "fails" ? &a : (b.verdict == "fails" ? &b : nullptr);
    if (fail) {
        r.verdict = "fails";
        r.value = fail->value;
        r.witness = {{"component", fail == &a ? 0 : 1}, {"detail", fail->witness}};
    } else if (a.verdict == "inconclusive" || b.verdict == "inconclusive") {
        r.verdict = "inconclusive";
        r.value = std::max(a.value, b.value);
    } else {
        r.verdict = "holds";
        r.value = std::max(a.value, b.value);
    }
    return r;
}

}  // namespace

ConvergenceReport classify(const HomFamily& family, const ClassifyConfig& cfg) {
    if (!family.is_pair()) return classify_single(family, cfg);
    ConvergenceReport first = classify(family.components[0], cfg);
    ConvergenceReport second = classify(family.components[1], cfg);
    ConvergenceReport rep;
    rep.family = family.descriptor();
    rep.depth = family.working_depth;
    rep.window = cfg.window;
    rep.metric = conjoin(first.metric, second.metric);
    rep.uniform = conjoin(first.uniform, second.uniform);
    rep.algebraic = conjoin(first.algebraic, second.algebraic);
    rep.borel = conjoin(first.borel, second.borel);
    rep.notes.push_back("pair verdicts are component conjunctions (max product metric)");
    return rep;
}

}  // namespace boolconv
