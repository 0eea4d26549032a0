#include "boolconv/family.hpp"

#include <limits>
#include <stdexcept>

namespace boolconv {

LengthLexWord length_lex_word(uint32_t k) {
    // Words of length l occupy indices [2^l - 1, 2^(l+1) - 1).
    int len = 0;
    while ((uint64_t(1) << (len + 1)) - 1 <= k) ++len;
    uint32_t offset = k - uint32_t((uint64_t(1) << len) - 1);
    return {offset, len};
}

HomFamily HomFamily::point_eval(int depth) { return {Kind::PointEval, depth, {}}; }
HomFamily HomFamily::agree_flip(int depth) { return {Kind::AgreeFlip, depth, {}}; }
HomFamily HomFamily::flip(int depth) { return {Kind::Flip, depth, {}}; }
HomFamily HomFamily::restriction(int depth) { return {Kind::Restriction, depth, {}}; }
HomFamily HomFamily::constant(int depth) { return {Kind::Constant, depth, {}}; }

HomFamily HomFamily::pair(HomFamily first, HomFamily second) {
    HomFamily f;
    f.kind = Kind::Pair;
    f.working_depth = std::max(first.working_depth, second.working_depth);
    f.components.push_back(std::move(first));
    f.components.push_back(std::move(second));
    return f;
}

PointMap HomFamily::materialize(uint32_t k) const {
    int d = working_depth;
    switch (kind) {
        case Kind::PointEval: {
            PointSpec x;  // 0^k 1 0...
            if (k < uint32_t(d)) {
                x.prefix = uint32_t(1) << k;
                x.prefix_len = int(k) + 1;
            }  // deeper spikes collapse to 000... at this depth
            return PointMap::point_eval(x, d);
        }
        case Kind::AgreeFlip: {
            LengthLexWord s = length_lex_word(k);
            if (s.len + 1 > d) return PointMap::identity(d);
            return make_agree_flip(s.word, s.len, d);
        }
        case Kind::Flip:
        case Kind::Restriction:
            if (k < uint32_t(d)) return make_flip(int(k), d);
            return PointMap::identity(d);
        case Kind::Constant:
            return PointMap::identity(d);
        case Kind::Pair:
            throw std::logic_error("family: pair has no single point map");
    }
    throw std::logic_error("family: bad kind");
}

PointMap HomFamily::limit() const {
    switch (kind) {
        case Kind::PointEval:
            return PointMap::point_eval(PointSpec{}, working_depth);
        case Kind::AgreeFlip:
        case Kind::Flip:
        case Kind::Restriction:
        case Kind::Constant:
            return PointMap::identity(working_depth);
        case Kind::Pair:
            throw std::logic_error("family: pair has no single point map");
    }
    throw std::logic_error("family: bad kind");
}

PairMap HomFamily::materialize_pair(uint32_t k) const {
    if (!is_pair()) throw std::logic_error("family: not a pair");
    return PairMap(components[0].materialize(k), components[1].materialize(k));
}

PairMap HomFamily::limit_pair() const {
    if (!is_pair()) throw std::logic_error("family: not a pair");
    return PairMap(components[0].limit(), components[1].limit());
}

uint32_t HomFamily::faithful_count() const {
    switch (kind) {
        case Kind::PointEval:
        case Kind::Flip:
        case Kind::Restriction:
            return uint32_t(working_depth);
        case Kind::AgreeFlip:
            return (uint32_t(1) << working_depth) - 1;
        case Kind::Constant:
            return std::numeric_limits<uint32_t>::max();
        case Kind::Pair:
            return std::max(components[0].faithful_count(), components[1].faithful_count());
    }
    throw std::logic_error("family: bad kind");
}

std::string HomFamily::kind_name() const {
    switch (kind) {
        case Kind::PointEval: return "point_eval";
        case Kind::AgreeFlip: return "agree_flip";
        case Kind::Flip: return "flip";
        case Kind::Restriction: return "restriction";
        case Kind::Pair: return "pair";
        case Kind::Constant: return "constant";
    }
    throw std::logic_error("family: bad kind");
}

nlohmann::ordered_json HomFamily::descriptor() const {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    if (is_pair()) {
        params["first"] = components[0].descriptor();
        params["second"] = components[1].descriptor();
    }
    return {{"kind", kind_name()}, {"params", params}, {"workingDepth", working_depth}};
}

HomFamily HomFamily::from_descriptor(const nlohmann::ordered_json& j) {
    std::string kind = j.at("kind").get<std::string>();
    int depth = j.at("workingDepth").get<int>();
    if (kind == "point_eval") return point_eval(depth);
    if (kind == "agree_flip") return agree_flip(depth);
    if (kind == "flip") return flip(depth);
    if (kind == "restriction") return restriction(depth);
    if (kind == "constant") return constant(depth);
    if (kind == "pair") {
        const auto& params = j.at("params");
        HomFamily f = pair(from_descriptor(params.at("first")),
                           from_descriptor(params.at("second")));
        f.working_depth = depth;
        return f;
    }
    throw std::invalid_argument("family: unknown kind '" + kind + "'");
}

}  // namespace boolconv
