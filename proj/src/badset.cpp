#include "boolconv/badset.hpp"

#include "boolconv/hamming.hpp"

#include <stdexcept>

namespace boolconv {

namespace {

// Kernel perfect code of length 2^m - 1 as a membership bitset; m = 1 is the
// one-word code {0}, legitimate for stage codes even though the public
// perfect_code starts at m = 2.
ClopenSet stage_code_bits(int m) {
    ParityCheck h = ParityCheck::standard(m);
    ClopenSet bits(h.n);
    for (uint64_t w = 0; w < (uint64_t(1) << h.n); ++w)
        if (h.syndrome(w) == 0) bits.set(w);
    return bits;
}

Rational density(const ClopenSet& code) {
    return Rational(BigInt(code.popcount()), BigInt(1) << code.depth());
}

}  // namespace

BadSetConstruction build_stages(const Rational& target, int num_stages, int depth_cap) {
    if (target <= Rational(0) || target >= Rational(1))
        throw std::invalid_argument("badset: target must lie in (0, 1)");
    if (num_stages < 1) throw std::invalid_argument("badset: need at least one stage");
    if (depth_cap > ClopenSet::kDepthCap)
        throw std::invalid_argument("badset: depth cap above global cap");

    BadSetConstruction c;
    c.target = target;
    c.depth_cap = depth_cap;
    c.requested_stages = num_stages;

    Rational one_minus_t = Rational(1) - target;

    // Seed stage: smallest perfect-code length with density 2^-m < 1 - t.
    int m0 = 2;
    while (Rational(1, BigInt(1) << m0) >= one_minus_t) ++m0;
    int d0 = (1 << m0) - 1;
    if (d0 > depth_cap)
        throw std::invalid_argument("badset: seed code depth exceeds depth cap");
    c.stages.push_back({d0, stage_code_bits(m0)});

    while (int(c.stages.size()) < num_stages) {
        const auto& cur = c.stages.back();
        int d = cur.depth;
        BigInt size = cur.code.popcount();
        BigInt pow_d = BigInt(1) << d;
        Rational alpha = Rational(one_minus_t.num * pow_d - one_minus_t.den * size,
                                  one_minus_t.den * (pow_d - size));
        // smallest k = 2^m - 1 with 1/(k+1) = 2^-m < alpha
        int m = 1;
        while (Rational(1, BigInt(1) << m) >= alpha) ++m;
        int k = (1 << m) - 1;
        if (d + k > depth_cap) {
            c.capped = true;
            break;
        }
        ClopenSet code_k = stage_code_bits(m);
        // C_{n+1} = all extensions of C_n plus fresh-code blocks elsewhere.
        ClopenSet next = cur.code.refine(d + k);
        for (uint64_t w = 0; w < code_k.atom_count(); ++w) {
            if (!code_k.test(w)) continue;
            for (uint64_t p = 0; p < (uint64_t(1) << d); ++p) next.set((w << d) | p);
        }
        if (density(next) >= one_minus_t)
            throw std::logic_error("badset: density bound violated");
        c.stages.push_back({d + k, std::move(next)});
    }
    return c;
}

ConditionReport verify_conditions(const BadSetConstruction& c) {
    ConditionReport r;
    Rational one_minus_t = Rational(1) - c.target;
    for (size_t n = 0; n < c.stages.size(); ++n) {
        if (density(c.stages[n].code) >= one_minus_t) {
            r.cond2 = false;
            r.witness_stage = int64_t(n);
            return r;
        }
    }
    for (size_t n = 0; n + 1 < c.stages.size(); ++n) {
        const auto& cur = c.stages[n];
        const auto& nxt = c.stages[n + 1];
        if (!subset_of(cur.code.refine(nxt.depth), nxt.code)) {
            r.cond3 = false;
            r.witness_stage = int64_t(n);
            return r;
        }
        StageEscape esc = stage_escape(c, n);
        if (!esc.ok) {
            r.cond4 = false;
            r.witness_stage = int64_t(n);
            for (size_t w = 0; w < esc.witness.size(); ++w)
                if (esc.witness[w] == -2) { r.witness_word = int64_t(w); break; }
            return r;
        }
    }
    return r;
}

StageEscape stage_escape(const BadSetConstruction& c, size_t n) {
    if (n + 1 >= c.stages.size()) throw std::invalid_argument("badset: no next stage");
    const auto& cur = c.stages[n];
    const auto& nxt = c.stages[n + 1];
    StageEscape esc;
    esc.ok = true;
    esc.witness.assign(size_t(nxt.code.atom_count()), -1);
    for (uint64_t s = 0; s < nxt.code.atom_count(); ++s) {
        if (nxt.code.test(s)) continue;
        int found = -2;
        for (int m = cur.depth; m < nxt.depth; ++m) {
            if (nxt.code.test(s ^ (uint64_t(1) << m))) { found = m; break; }
        }
        esc.witness[size_t(s)] = int8_t(found);
        if (found == -2) esc.ok = false;
    }
    return esc;
}

ClopenSet flip_image(const ClopenSet& a, int coord) {
    if (coord < 0 || coord >= a.depth())
        throw std::invalid_argument("flip image: coordinate not below depth");
    ClopenSet out(a.depth());
    uint64_t bit = uint64_t(1) << coord;
    for (uint64_t i = 0; i < a.atom_count(); ++i)
        if (a.test(i ^ bit)) out.set(i);
    return out;
}

Dyadic flip_meet_measure(const ClopenSet& b, int from, int to) {
    if (from >= to) throw std::invalid_argument("flip meet: empty range");
    ClopenSet acc = flip_image(b, from);
    for (int m = from + 1; m < to; ++m) acc = meet(acc, flip_image(b, m));
    return acc.measure();
}

Dyadic window_flip_intersection(const BadSetConstruction& c, size_t from_stage) {
    if (from_stage + 1 >= c.stages.size())
        throw std::invalid_argument("badset: from_stage needs a following stage");
    return flip_meet_measure(c.bad_set(), c.stages[from_stage].depth, c.last_depth());
}

}  // namespace boolconv
