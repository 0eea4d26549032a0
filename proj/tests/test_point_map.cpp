#include "boolconv/family.hpp"
#include "boolconv/point_map.hpp"

#include <doctest.h>

using namespace boolconv;

namespace {

uint64_t splitmix(uint64_t& s) {
    uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

ClopenSet random_set(int depth, uint64_t& rng) {
    ClopenSet s(depth);
    for (uint64_t i = 0; i < s.atom_count(); ++i)
        if (splitmix(rng) & 1) s.set(i);
    return s;
}

PointMap random_map(int sd, int td, uint64_t& rng) {
    PointMap m;
    m.source_depth = sd;
    m.target_depth = td;
    m.table.resize(size_t(1) << sd);
    for (auto& e : m.table) e = uint32_t(splitmix(rng) % (uint64_t(1) << td));
    return m;
}

}  // namespace

TEST_CASE("apply basics") {
    uint64_t rng = 11;
    PointMap id = PointMap::identity(4);
    for (int t = 0; t < 10; ++t) {
        ClopenSet a = random_set(4, rng);
        CHECK(id.apply(a) == a);
    }
    // constant map: full when the target atom is inside, empty otherwise
    PointMap c = PointMap::constant(5, 3, 4);
    ClopenSet with5 = ClopenSet::atom(5, 4);
    CHECK(c.apply(with5) == ClopenSet::full_set(3));
    CHECK(c.apply(with5.complement()) == ClopenSet::empty_set(3));
    // depth overflow
    CHECK_THROWS_WITH(id.apply(ClopenSet::full_set(5)), "target resolution exceeded");
}

TEST_CASE("flip maps") {
    PointMap f0 = make_flip(0, 1);
    CHECK(f0.table == std::vector<uint32_t>{1, 0});
    CHECK(f0.apply(ClopenSet::atom(0, 1)) == ClopenSet::atom(1, 1));

    uint64_t rng = 12;
    for (int t = 0; t < 30; ++t) {
        int d = 2 + int(splitmix(rng) % 5);
        int n = int(splitmix(rng) % uint64_t(d));
        PointMap fn = make_flip(n, d);
        ClopenSet a = random_set(d, rng);
        CHECK(fn.apply(a).measure() == a.measure());  // isometry
        ClopenSet b = random_set(d, rng);
        CHECK(fn_distance(fn.apply(a), fn.apply(b)) == fn_distance(a, b));
        CHECK(compose(fn, fn) == PointMap::identity(d));  // involution
    }
    // d(flip_n(X_n), X_n) = 1 for the half-space reading coordinate n
    for (int d = 1; d <= 6; ++d)
        for (int n = 0; n < d; ++n) {
            ClopenSet xn = ClopenSet::coordinate_half(n, 0, d);
            CHECK(fn_distance(make_flip(n, d).apply(xn), xn) == Dyadic::one());
        }
    CHECK_THROWS(make_flip(3, 3));
}

TEST_CASE("agree flip maps") {
    // empty word: flips bit 0 everywhere
    CHECK(make_agree_flip(0, 0, 4) == make_flip(0, 4));

    uint64_t rng = 13;
    for (int len = 0; len <= 4; ++len) {
        int d = len + 1 + int(splitmix(rng) % 3);
        uint32_t word = uint32_t(splitmix(rng) % (uint64_t(1) << len));
        PointMap psi = make_agree_flip(word, len, d);
        CHECK(compose(psi, psi) == PointMap::identity(d));
        CHECK(disagreement_measure(psi, PointMap::identity(d)) ==
              Dyadic(1, uint32_t(len)));  // moved set = the agreement cylinder
        for (int t = 0; t < 10; ++t) {
            ClopenSet a = random_set(d, rng);
            CHECK(fn_distance(psi.apply(a), a) <= Dyadic(1, uint32_t(len)));
        }
    }
    CHECK_THROWS(make_agree_flip(0, 3, 3));
}

TEST_CASE("point evaluation maps") {
    // x = 000...: apply to [0] gives the full depth-0 set
    PointMap at_zero = PointMap::point_eval(PointSpec{}, 4);
    CHECK(at_zero.apply(ClopenSet::atom(0, 1)) == ClopenSet::full_set(0));
    CHECK(at_zero.apply(ClopenSet::atom(1, 1)) == ClopenSet::empty_set(0));

    // x = 0^k 1 0...: inside [0^k 1], outside [0^{k+1}]
    for (int k = 0; k < 4; ++k) {
        PointSpec x{uint32_t(1) << k, k + 1};
        PointMap pe = PointMap::point_eval(x, 6);
        CHECK(pe.apply(ClopenSet::cylinder(uint32_t(1) << k, k + 1, 6)) ==
              ClopenSet::full_set(0));
        CHECK(pe.apply(ClopenSet::cylinder(0, k + 1, 6)) == ClopenSet::empty_set(0));
    }

    // pointwise stabilization: x_n agrees with x below depth(A) once n >= depth(A)
    HomFamily fam = HomFamily::point_eval(8);
    ClopenSet a = ClopenSet::cylinder(0, 3, 3);
    PointMap lim = fam.limit();
    for (uint32_t n = 3; n < 8; ++n)
        CHECK(fam.materialize(n).apply(a) == lim.apply(a));
}

TEST_CASE("applied maps are homomorphisms") {
    uint64_t rng = 14;
    std::vector<PointMap> maps;
    for (int t = 0; t < 40; ++t)
        maps.push_back(random_map(1 + int(splitmix(rng) % 5),
                                  1 + int(splitmix(rng) % 5), rng));
    // every constructor too, not only random tables
    maps.push_back(make_flip(2, 4));
    maps.push_back(make_agree_flip(1, 2, 4));
    maps.push_back(PointMap::point_eval(PointSpec{3, 2}, 4));
    maps.push_back(PointMap::constant(9, 3, 4));
    maps.push_back(compose(make_flip(0, 4), make_agree_flip(0, 1, 4)));
    for (const PointMap& phi : maps) {
        int td = phi.target_depth, sd = phi.source_depth;
        ClopenSet a = random_set(td, rng), b = random_set(td, rng);
        CHECK(phi.apply(meet(a, b)) == meet(phi.apply(a), phi.apply(b)));
        CHECK(phi.apply(join(a, b)) == join(phi.apply(a), phi.apply(b)));
        CHECK(phi.apply(a.complement()) == phi.apply(a).complement());
        CHECK(phi.apply(ClopenSet::full_set(td)) == ClopenSet::full_set(sd));
        CHECK(phi.apply(ClopenSet::empty_set(td)) == ClopenSet::empty_set(sd));
    }
}

TEST_CASE("composition") {
    uint64_t rng = 15;
    PointMap f = random_map(3, 4, rng);
    CHECK(compose(PointMap::identity(3), f) == f);
    CHECK(compose(f, PointMap::identity(4)) == f);
    for (int t = 0; t < 20; ++t) {
        PointMap a = random_map(3, 4, rng), b = random_map(4, 5, rng),
                 c = random_map(5, 3, rng);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
    CHECK_THROWS(compose(random_map(3, 4, rng), random_map(3, 4, rng)));
}

TEST_CASE("pairs behave component-wise") {
    uint64_t rng = 16;
    PairMap ids(PointMap::identity(4), PointMap::identity(4));
    for (int t = 0; t < 10; ++t) {
        ClopenSet a = random_set(4, rng);
        auto [x, y] = ids.apply(a);
        CHECK(x == a);
        CHECK(y == a);
    }
    for (int t = 0; t < 20; ++t) {
        PairMap p(random_map(3, 4, rng), random_map(2, 4, rng));
        PairMap q(random_map(3, 4, rng), random_map(2, 4, rng));
        ClopenSet a = random_set(4, rng);
        Dyadic d1 = fn_distance(p.first.apply(a), q.first.apply(a));
        Dyadic d2 = fn_distance(p.second.apply(a), q.second.apply(a));
        CHECK(pair_distance(p, q, a) == std::max(d1, d2));
    }
    CHECK_THROWS(PairMap(PointMap::identity(3), PointMap::identity(4)));
}

TEST_CASE("length-lex word enumeration") {
    CHECK(length_lex_word(0).len == 0);
    CHECK(length_lex_word(1).len == 1);
    CHECK(length_lex_word(1).word == 0);
    CHECK(length_lex_word(2).word == 1);
    CHECK(length_lex_word(3).len == 2);
    CHECK(length_lex_word(6).len == 2);
    CHECK(length_lex_word(7).len == 3);
    // indices [2^l - 1, 2^(l+1) - 1) enumerate every word of length l once
    for (int l = 0; l <= 4; ++l) {
        std::vector<bool> seen(size_t(1) << l, false);
        for (uint32_t k = (1u << l) - 1; k < (1u << (l + 1)) - 1; ++k) {
            LengthLexWord w = length_lex_word(k);
            CHECK(w.len == l);
            CHECK(!seen[w.word]);
            seen[w.word] = true;
        }
    }
}

TEST_CASE("family descriptors round-trip") {
    for (auto fam : {HomFamily::point_eval(6), HomFamily::agree_flip(6),
                     HomFamily::flip(6), HomFamily::restriction(6),
                     HomFamily::constant(6),
                     HomFamily::pair(HomFamily::point_eval(6), HomFamily::agree_flip(6))}) {
        HomFamily back = HomFamily::from_descriptor(fam.descriptor());
        CHECK(back.kind == fam.kind);
        CHECK(back.working_depth == fam.working_depth);
        CHECK(back.descriptor() == fam.descriptor());
    }
}

TEST_CASE("family members collapse to the limit beyond the faithful range") {
    for (auto fam : {HomFamily::point_eval(5), HomFamily::flip(5)}) {
        uint32_t fc = fam.faithful_count();
        CHECK(fam.materialize(fc) == fam.limit());
        CHECK(fam.materialize(fc + 7) == fam.limit());
    }
    HomFamily af = HomFamily::agree_flip(3);
    CHECK(af.faithful_count() == 7);
    CHECK(af.materialize(7) == af.limit());
    CHECK(af.materialize(6) != af.limit());
}
