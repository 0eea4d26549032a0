#include "boolconv/fence.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace boolconv {

namespace {

using boost::multiprecision::lcm;

// Common-denominator integer weights; all solver arithmetic on BigInt.
struct ScaledWeights {
    BigInt denom = 1;
    std::vector<BigInt> w;

    explicit ScaledWeights(const FenceInstance& inst) {
        for (const auto& it : inst.items) {
            if (it.weight <= Rational(0))
                throw std::invalid_argument("fence: weights must be positive");
            denom = lcm(denom, it.weight.den);
        }
        w.reserve(inst.items.size());
        for (const auto& it : inst.items) w.push_back(it.weight.num * (denom / it.weight.den));
    }

    Rational unscale(const BigInt& v) const { return Rational(v, denom); }
};

std::vector<uint32_t> kept_items(const FenceInstance& inst,
                                 const std::set<int64_t>& h,
                                 const std::set<int64_t>& n_side) {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < inst.items.size(); ++i) {
        const auto& it = inst.items[i];
        bool f_ok = !h.count(it.f) || n_side.count(it.f);
        bool g_ok = !h.count(it.g) || !n_side.count(it.g);
        if (f_ok && g_ok) out.push_back(i);
    }
    return out;
}

}  // namespace

Rational FenceInstance::total_weight() const {
    Rational t(0);
    for (const auto& it : items) t += it.weight;
    return t;
}

std::vector<int64_t> FenceInstance::common_colors() const {
    std::set<int64_t> fs, gs;
    for (const auto& it : items) {
        fs.insert(it.f);
        gs.insert(it.g);
    }
    std::vector<int64_t> h;
    for (int64_t c : fs)
        if (gs.count(c)) h.push_back(c);
    return h;
}

bool feasible(const FenceInstance& inst, const std::vector<uint32_t>& chosen) {
    std::set<int64_t> fs, gs;
    for (uint32_t i : chosen) {
        fs.insert(inst.items.at(i).f);
        gs.insert(inst.items.at(i).g);
    }
    for (int64_t c : fs)
        if (gs.count(c)) return false;
    return true;
}

FenceSolution solve_exact(const FenceInstance& inst) {
    std::vector<int64_t> h = inst.common_colors();
    size_t hc = h.size();
    if (hc > 24)
        throw std::invalid_argument(
            "fence: more than 24 shared colors, use solve_guarantee");
    ScaledWeights sw(inst);

    std::map<int64_t, int> idx;
    for (size_t i = 0; i < hc; ++i) idx[h[i]] = int(i);

    // value(N) = sum_{a in N, b in H\N} M[a][b] + row extras of N
    //          + col extras of H\N + weight of items off H on both sides
    std::vector<std::vector<BigInt>> m(hc, std::vector<BigInt>(hc, BigInt(0)));
    std::vector<BigInt> row_extra(hc, BigInt(0)), col_extra(hc, BigInt(0));
    BigInt out_mass = 0;
    for (size_t i = 0; i < inst.items.size(); ++i) {
        const auto& it = inst.items[i];
        bool fh = idx.count(it.f), gh = idx.count(it.g);
        if (fh && gh) {
            if (it.f == it.g) continue;  // never feasible to keep
            m[size_t(idx[it.f])][size_t(idx[it.g])] += sw.w[i];
        } else if (fh) {
            row_extra[size_t(idx[it.f])] += sw.w[i];
        } else if (gh) {
            col_extra[size_t(idx[it.g])] += sw.w[i];
        } else {
            out_mass += sw.w[i];
        }
    }

    // N = empty: only col extras and off-H mass are kept.
    BigInt cur = out_mass;
    for (size_t b = 0; b < hc; ++b) cur += col_extra[b];
    BigInt best = cur;
    uint32_t best_mask = 0, mask = 0;

    uint64_t subsets = uint64_t(1) << hc;
    for (uint64_t step = 1; step < subsets; ++step) {
        int c = std::countr_zero(step);  // Gray code: flip bit c
        uint32_t cbit = uint32_t(1) << c;
        bool adding = !(mask & cbit);
        BigInt delta = row_extra[size_t(c)] - col_extra[size_t(c)];
        for (size_t o = 0; o < hc; ++o) {
            if (o == size_t(c)) continue;
            if (mask & (uint32_t(1) << o))
                delta -= m[o][size_t(c)];  // c joins N: (o, c) pairs stop counting
            else
                delta += m[size_t(c)][o];  // (c, o) pairs start counting
        }
        mask ^= cbit;
        cur += adding ? delta : -delta;
        if (cur > best || (cur == best && mask < best_mask)) {
            best = cur;
            best_mask = mask;
        }
    }

    FenceSolution sol;
    sol.value = sw.unscale(best);
    std::set<int64_t> hset(h.begin(), h.end()), nset;
    std::vector<int64_t> ncolors;
    for (size_t i = 0; i < hc; ++i)
        if (best_mask & (uint32_t(1) << i)) {
            nset.insert(h[i]);
            ncolors.push_back(h[i]);
        }
    sol.color_set = ncolors;
    sol.chosen = kept_items(inst, hset, nset);
    if (!feasible(inst, sol.chosen)) throw std::logic_error("fence: infeasible exact solution");
    return sol;
}

FenceSolution brute_force_oracle(const FenceInstance& inst, int max_items) {
    if (int(inst.items.size()) > max_items)
        throw std::invalid_argument("fence oracle: too many items");
    ScaledWeights sw(inst);

    // Colors packed into bitmasks for O(1) feasibility of each subset.
    std::map<int64_t, int> color_idx;
    for (const auto& it : inst.items) {
        color_idx.emplace(it.f, int(color_idx.size()));
        color_idx.emplace(it.g, int(color_idx.size()));
    }
    size_t ni = inst.items.size();
    std::vector<uint64_t> fbit(ni), gbit(ni);
    for (size_t i = 0; i < ni; ++i) {
        fbit[i] = uint64_t(1) << color_idx[inst.items[i].f];
        gbit[i] = uint64_t(1) << color_idx[inst.items[i].g];
    }

    BigInt best = 0;
    uint32_t best_mask = 0;
    for (uint32_t mask = 0; mask < (uint64_t(1) << ni); ++mask) {
        uint64_t fs = 0, gs = 0;
        BigInt v = 0;
        for (size_t i = 0; i < ni; ++i)
            if ((mask >> i) & 1) {
                fs |= fbit[i];
                gs |= gbit[i];
                v += sw.w[i];
            }
        if ((fs & gs) == 0 && (v > best || (v == best && mask < best_mask))) {
            best = v;
            best_mask = mask;
        }
    }
    FenceSolution sol;
    sol.value = sw.unscale(best);
    for (uint32_t i = 0; i < ni; ++i)
        if ((best_mask >> i) & 1) sol.chosen.push_back(i);
    return sol;
}

FenceSolution solve_guarantee(const FenceInstance& inst) {
    for (const auto& it : inst.items)
        if (it.f == it.g) throw std::invalid_argument("not a.e. distinct");
    ScaledWeights sw(inst);
    std::vector<int64_t> h = inst.common_colors();
    std::set<int64_t> hset(h.begin(), h.end());
    size_t ni = inst.items.size();

    // contrib[i] = 4 * w_i * P[item kept | decisions so far], kept integral
    // by tracking quarters: undecided H-side factors contribute 1/2 each.
    std::vector<BigInt> contrib(ni);
    BigInt e4 = 0;
    for (size_t i = 0; i < ni; ++i) {
        int quarters = 4;
        if (hset.count(inst.items[i].f)) quarters /= 2;
        if (hset.count(inst.items[i].g)) quarters /= 2;
        contrib[i] = sw.w[i] * quarters;
        e4 += contrib[i];
    }
    // E[kept weight] >= total/4 before any decision.
    BigInt total = 0;
    for (const auto& wi : sw.w) total += wi;
    if (e4 < total) throw std::logic_error("fence guarantee: expectation below total/4");

    // Items listed per color, separately for the two sides.
    std::map<int64_t, std::vector<size_t>> by_f, by_g;
    for (size_t i = 0; i < ni; ++i) {
        if (hset.count(inst.items[i].f)) by_f[inst.items[i].f].push_back(i);
        if (hset.count(inst.items[i].g)) by_g[inst.items[i].g].push_back(i);
    }

    // Decision order: descending incident weight, ties by color id.
    std::vector<std::pair<BigInt, int64_t>> order;
    for (int64_t c : h) {
        BigInt inc = 0;
        for (size_t i : by_f[c]) inc += sw.w[i];
        for (size_t i : by_g[c]) inc += sw.w[i];
        order.push_back({inc, c});
    }
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });

    std::set<int64_t> nset;
    for (const auto& [inc, c] : order) {
        BigInt f_gain = 0, g_gain = 0;
        for (size_t i : by_f[c]) f_gain += contrib[i];
        for (size_t i : by_g[c]) g_gain += contrib[i];
        // c into N: f-factors double, g-factors vanish; complement mirrors.
        bool into_n = f_gain >= g_gain;  // ties go to N
        if (into_n) nset.insert(c);
        for (size_t i : by_f[c]) contrib[i] = into_n ? contrib[i] * 2 : BigInt(0);
        for (size_t i : by_g[c]) contrib[i] = into_n ? BigInt(0) : contrib[i] * 2;
        e4 += into_n ? (f_gain - g_gain) : (g_gain - f_gain);
    }

    FenceSolution sol;
    sol.chosen = kept_items(inst, hset, nset);
    BigInt kept = 0;
    for (uint32_t i : sol.chosen) kept += sw.w[i];
    if (kept * 4 != e4) throw std::logic_error("fence guarantee: bookkeeping drift");
    if (kept * 4 < total) throw std::logic_error("fence guarantee: below total/4");
    sol.value = sw.unscale(kept);
    sol.color_set = std::vector<int64_t>(nset.begin(), nset.end());
    if (!feasible(inst, sol.chosen))
        throw std::logic_error("fence guarantee: infeasible solution");
    return sol;
}

FenceInstance tight_instance(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("tight instance: n must be even, >= 2");
    FenceInstance inst;
    Rational w(1, BigInt(n) * (n - 1));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a != b) inst.items.push_back({w, a, b});
    return inst;
}

Rational tight_closed_form(int n) {
    Rational best(0);
    for (int k = 0; k <= n; ++k) {
        Rational v(BigInt(k) * (n - k), BigInt(n) * (n - 1));
        if (v > best) best = v;
    }
    return best;
}

TightReport tight_report(int n) {
    TightReport r;
    r.n = n;
    r.optimum = solve_exact(tight_instance(n)).value;
    r.closed_form = tight_closed_form(n);
    r.bound_as_printed = Rational(1, 4) + Rational(1, 16 * n - 4);
    r.bound_direct_arithmetic = Rational(1, 4) + Rational(1, 4 * n - 4);
    r.printed_bound_holds = r.optimum <= r.bound_as_printed;
    return r;
}

DistinguishResult distinguish(const PointMap& phi, const PointMap& psi) {
    if (phi.source_depth != psi.source_depth || phi.target_depth != psi.target_depth)
        throw std::invalid_argument("distinguish: depth mismatch");
    int n = phi.source_depth;
    uint64_t atoms = uint64_t(1) << n;

    FenceInstance inst;
    std::vector<uint32_t> atom_of_item;
    uint64_t agree = 0;
    Rational w(1, BigInt(1) << n);
    for (uint64_t i = 0; i < atoms; ++i) {
        if (phi.table[i] == psi.table[i]) {
            ++agree;
            continue;
        }
        inst.items.push_back({w, int64_t(phi.table[i]), int64_t(psi.table[i])});
        atom_of_item.push_back(uint32_t(i));
    }
    if (inst.items.empty()) throw std::invalid_argument("homomorphisms equal at this depth");

    FenceSolution sol = inst.common_colors().size() <= 20 ? solve_exact(inst)
                                                          : solve_guarantee(inst);

    DistinguishResult res;
    res.agreement_weight = Dyadic(agree, uint32_t(n));
    res.solver_value = sol.value;
    res.chosen_atoms = ClopenSet(n);
    ClopenSet c(phi.target_depth);
    for (uint32_t item : sol.chosen) {
        res.chosen_atoms.set(atom_of_item[item]);
        c.set(phi.table[atom_of_item[item]]);
    }
    res.witness_clopen = c;
    res.separated = fn_distance(phi.apply(c), psi.apply(c));

    Dyadic floor = (Dyadic::one() - res.agreement_weight).halved(2);
    if (res.separated < floor) throw std::logic_error("distinguish: below (1-delta)/4");
    if (!subset_of(res.chosen_atoms, setminus(phi.apply(c), psi.apply(c))))
        throw std::logic_error("distinguish: witness atoms not separated");
    return res;
}

}  // namespace boolconv
