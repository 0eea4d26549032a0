#include "boolconv/fence.hpp"

#include <doctest.h>

using namespace boolconv;

namespace {

uint64_t splitmix(uint64_t& s) {
    uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

FenceInstance random_instance(uint64_t& rng, int max_items, int max_colors,
                              bool distinct = true) {
    FenceInstance inst;
    int items = 1 + int(splitmix(rng) % uint64_t(max_items));
    for (int i = 0; i < items; ++i) {
        FenceItem it;
        it.weight = Rational(1 + int64_t(splitmix(rng) % 30),
                             1 + int64_t(splitmix(rng) % 16));
        it.f = int64_t(splitmix(rng) % uint64_t(max_colors));
        do {
            it.g = int64_t(splitmix(rng) % uint64_t(max_colors));
        } while (distinct && it.g == it.f);
        inst.items.push_back(it);
    }
    return inst;
}

}  // namespace

TEST_CASE("disjoint palettes make the constraint vacuous") {
    FenceInstance inst;
    inst.items = {{Rational(1, 3), 1, 10}, {Rational(1, 2), 2, 11}, {Rational(2), 3, 12}};
    CHECK(inst.common_colors().empty());
    FenceSolution s = solve_exact(inst);
    CHECK(s.chosen.size() == 3);
    CHECK(s.value == inst.total_weight());
    FenceSolution g = solve_guarantee(inst);
    CHECK(g.chosen.size() == 3);
}

TEST_CASE("tight instance n = 2") {
    FenceInstance inst = tight_instance(2);
    REQUIRE(inst.items.size() == 2);
    CHECK(inst.items[0].weight == Rational(1, 2));
    CHECK(solve_exact(inst).value == Rational(1, 2));
    CHECK(brute_force_oracle(inst).value == Rational(1, 2));
}

TEST_CASE("tight instance values match the closed form") {
    // max_k k(n-k)/(n(n-1)); brute force confirms for the small sizes
    CHECK(solve_exact(tight_instance(4)).value == Rational(1, 3));
    CHECK(brute_force_oracle(tight_instance(4)).value == Rational(1, 3));
    CHECK(solve_exact(tight_instance(6)).value == Rational(3, 10));
    CHECK(solve_exact(tight_instance(8)).value == Rational(2, 7));
    for (int n : {2, 4, 6, 8})
        CHECK(solve_exact(tight_instance(n)).value == tight_closed_form(n));
    CHECK_THROWS(tight_instance(3));
    CHECK_THROWS(tight_instance(0));
}

TEST_CASE("tight report flags the printed-constant discrepancy") {
    TightReport r = tight_report(2);
    CHECK(r.optimum == Rational(1, 2));
    CHECK(r.bound_as_printed == Rational(1, 4) + Rational(1, 28));
    CHECK(r.bound_direct_arithmetic == Rational(1, 2));  // 1/4 + 1/4
    CHECK(!r.printed_bound_holds);
    for (int n : {2, 4, 6, 8}) {
        TightReport t = tight_report(n);
        CHECK(t.optimum <= t.bound_direct_arithmetic);
    }
}

TEST_CASE("exact solver agrees with the oracle on random instances") {
    uint64_t rng = 21;
    for (int trial = 0; trial < 200; ++trial) {
        FenceInstance inst = random_instance(rng, 12, 8, false);
        FenceSolution ex = solve_exact(inst);
        FenceSolution br = brute_force_oracle(inst);
        CHECK(ex.value == br.value);
        CHECK(feasible(inst, ex.chosen));
        CHECK(feasible(inst, br.chosen));
    }
}

TEST_CASE("empty and single-item edge cases") {
    FenceInstance empty;
    CHECK(brute_force_oracle(empty).value == Rational(0));
    CHECK(solve_exact(empty).value == Rational(0));
    FenceInstance one;
    one.items = {{Rational(5, 7), 1, 2}};
    CHECK(solve_exact(one).value == Rational(5, 7));
    CHECK(solve_guarantee(one).chosen.size() == 1);
}

TEST_CASE("guarantee meets total/4 on the tight family") {
    for (int n : {2, 4, 6, 8}) {
        FenceInstance inst = tight_instance(n);
        FenceSolution s = solve_guarantee(inst);
        CHECK(feasible(inst, s.chosen));
        CHECK(s.value >= Rational(1, 4));  // total weight is 1
        CHECK(s.value <= solve_exact(inst).value);
    }
}

TEST_CASE("guarantee meets total/4 on random instances") {
    uint64_t rng = 22;
    for (int trial = 0; trial < 150; ++trial) {
        FenceInstance inst = random_instance(rng, 60, 12);
        FenceSolution s = solve_guarantee(inst);
        CHECK(feasible(inst, s.chosen));
        CHECK(s.value >= inst.total_weight() * Rational(1, 4));
        // never better than the optimum
        if (inst.common_colors().size() <= 12) CHECK(s.value <= solve_exact(inst).value);
    }
}

TEST_CASE("guarantee covers the out-of-H corner") {
    // nu(HxH) = 0 but the out-of-H mass is color-constrained through H
    FenceInstance inst;
    inst.items = {{Rational(1), 1, 100}, {Rational(30), 101, 1},
                  {Rational(1), 2, 102}, {Rational(30), 103, 2}};
    FenceSolution s = solve_guarantee(inst);
    CHECK(feasible(inst, s.chosen));
    CHECK(s.value >= inst.total_weight() * Rational(1, 4));
}

TEST_CASE("guarantee rejects items with equal colors") {
    FenceInstance inst;
    inst.items = {{Rational(1), 3, 3}};
    CHECK_THROWS_WITH(solve_guarantee(inst), "not a.e. distinct");
}

TEST_CASE("exact solver redirects oversized instances") {
    FenceInstance inst;
    for (int c = 0; c < 25; ++c) {
        inst.items.push_back({Rational(1), c, (c + 1) % 25});
    }
    CHECK_THROWS_AS(solve_exact(inst), std::invalid_argument);
    CHECK(solve_guarantee(inst).value >= inst.total_weight() * Rational(1, 4));
}

TEST_CASE("distinguish: identity vs flip_0 at depth 1") {
    DistinguishResult r = distinguish(PointMap::identity(1), make_flip(0, 1));
    CHECK(r.agreement_weight == Dyadic::zero());
    CHECK(r.separated == Dyadic::one());
    CHECK(r.witness_clopen == ClopenSet::atom(0, 1));
}

TEST_CASE("distinguish: identity vs flip_k") {
    for (int d : {3, 6}) {
        for (int k = 0; k < d; k += 2) {
            DistinguishResult r = distinguish(PointMap::identity(d), make_flip(k, d));
            CHECK(r.agreement_weight == Dyadic::zero());
            CHECK(r.separated == Dyadic::one());
        }
    }
    // at depth 6 the guarantee path picks the coordinate half-space itself
    DistinguishResult r = distinguish(PointMap::identity(6), make_flip(2, 6));
    CHECK(r.witness_clopen == ClopenSet::coordinate_half(2, 0, 6));
}

TEST_CASE("distinguish on random everywhere-disagreeing maps") {
    uint64_t rng = 23;
    for (int trial = 0; trial < 30; ++trial) {
        int sd = 1 + int(splitmix(rng) % 7);
        int td = std::max(1, sd - int(splitmix(rng) % 2));
        PointMap phi, psi;
        phi.source_depth = psi.source_depth = sd;
        phi.target_depth = psi.target_depth = td;
        for (uint64_t i = 0; i < (uint64_t(1) << sd); ++i) {
            uint32_t a = uint32_t(splitmix(rng) % (uint64_t(1) << td));
            uint32_t b;
            do {
                b = uint32_t(splitmix(rng) % (uint64_t(1) << td));
            } while ((uint64_t(1) << td) > 1 && b == a);
            phi.table.push_back(a);
            psi.table.push_back(b);
        }
        DistinguishResult r = distinguish(phi, psi);
        CHECK(r.agreement_weight == Dyadic::zero());
        CHECK(r.separated >= Dyadic(1, 2));
        ClopenSet phi_c = phi.apply(r.witness_clopen);
        ClopenSet psi_c = psi.apply(r.witness_clopen);
        CHECK(subset_of(r.chosen_atoms, setminus(phi_c, psi_c)));
    }
}

TEST_CASE("distinguish trims agreement atoms and reports delta") {
    // maps agreeing on half the atoms: delta = 1/2, floor (1-delta)/4 = 1/8
    PointMap phi = PointMap::identity(2);
    PointMap psi = phi;
    psi.table[0] = 1;
    psi.table[1] = 0;  // swap atoms 0,1; agree on 2,3
    DistinguishResult r = distinguish(phi, psi);
    CHECK(r.agreement_weight == Dyadic(1, 1));
    CHECK(r.separated >= Dyadic(1, 3));
    CHECK_THROWS_WITH(distinguish(phi, phi), "homomorphisms equal at this depth");
}
