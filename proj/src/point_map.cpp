#include "boolconv/point_map.hpp"

#include <stdexcept>

namespace boolconv {

uint32_t PointSpec::atom_at(int depth) const {
    if (depth < 0 || depth > ClopenSet::kDepthCap)
        throw std::invalid_argument("point: depth out of range");
    uint32_t mask = depth >= 32 ? ~uint32_t(0) : (uint32_t(1) << depth) - 1;
    return prefix & mask;  // tail coordinates are zero
}

PointMap PointMap::identity(int depth) {
    PointMap m;
    m.source_depth = m.target_depth = depth;
    m.table.resize(size_t(1) << depth);
    for (uint32_t i = 0; i < m.table.size(); ++i) m.table[i] = i;
    return m;
}

PointMap PointMap::point_eval(const PointSpec& x, int target_depth) {
    PointMap m;
    m.source_depth = 0;
    m.target_depth = target_depth;
    m.table = {x.atom_at(target_depth)};
    return m;
}

PointMap PointMap::constant(uint32_t target_atom, int source_depth, int target_depth) {
    if (target_atom >= (uint64_t(1) << target_depth))
        throw std::invalid_argument("point map: target atom out of range");
    PointMap m;
    m.source_depth = source_depth;
    m.target_depth = target_depth;
    m.table.assign(size_t(1) << source_depth, target_atom);
    return m;
}

ClopenSet PointMap::apply(const ClopenSet& a) const {
    if (a.depth() > target_depth) throw std::invalid_argument("target resolution exceeded");
    ClopenSet probe = a.refine(target_depth);
    ClopenSet out(source_depth);
    for (uint64_t i = 0; i < table.size(); ++i)
        if (probe.test(table[i])) out.set(i);
    return out;
}

PointMap make_flip(int coord, int depth) {
    if (coord < 0 || coord >= depth)
        throw std::invalid_argument("flip: coordinate not below depth");
    PointMap m;
    m.source_depth = m.target_depth = depth;
    m.table.resize(size_t(1) << depth);
    for (uint32_t i = 0; i < m.table.size(); ++i) m.table[i] = i ^ (uint32_t(1) << coord);
    return m;
}

PointMap make_agree_flip(uint32_t word, int len, int depth) {
    if (len < 0 || depth < len + 1)
        throw std::invalid_argument("agree flip: depth must exceed word length");
    uint32_t mask = (uint32_t(1) << len) - 1;
    word &= mask;
    PointMap m;
    m.source_depth = m.target_depth = depth;
    m.table.resize(size_t(1) << depth);
    for (uint32_t i = 0; i < m.table.size(); ++i)
        m.table[i] = (((i >> 1) & mask) == word) ? (i ^ 1u) : i;
    return m;
}

PointMap compose(const PointMap& phi, const PointMap& psi) {
    if (phi.target_depth != psi.source_depth)
        throw std::invalid_argument("compose: depth mismatch");
    PointMap m;
    m.source_depth = phi.source_depth;
    m.target_depth = psi.target_depth;
    m.table.resize(phi.table.size());
    for (size_t i = 0; i < m.table.size(); ++i) m.table[i] = psi.table[phi.table[i]];
    return m;
}

Dyadic disagreement_measure(const PointMap& phi, const PointMap& psi) {
    if (phi.source_depth != psi.source_depth || phi.target_depth != psi.target_depth)
        throw std::invalid_argument("disagreement: depth mismatch");
    uint64_t count = 0;
    for (size_t i = 0; i < phi.table.size(); ++i)
        if (phi.table[i] != psi.table[i]) ++count;
    return Dyadic(count, uint32_t(phi.source_depth));
}

PairMap::PairMap(PointMap a, PointMap b) : first(std::move(a)), second(std::move(b)) {
    if (first.target_depth != second.target_depth)
        throw std::invalid_argument("pair: mismatched target depth");
}

std::pair<ClopenSet, ClopenSet> PairMap::apply(const ClopenSet& a) const {
    return {first.apply(a), second.apply(a)};
}

Dyadic pair_distance(const PairMap& a, const PairMap& b, const ClopenSet& probe) {
    Dyadic d1 = fn_distance(a.first.apply(probe), b.first.apply(probe));
    Dyadic d2 = fn_distance(a.second.apply(probe), b.second.apply(probe));
    return std::max(d1, d2);
}

}  // namespace boolconv
