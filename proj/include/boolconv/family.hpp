#ifndef BOOLCONV_FAMILY_HPP
#define BOOLCONV_FAMILY_HPP

#include "boolconv/point_map.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace boolconv {

// k-th finite binary word in length-lexicographic order: the empty word,
// then "0","1", then "00","10","01","11", ... (bit j of `word` = symbol j).
struct LengthLexWord {
    uint32_t word = 0;
    int len = 0;
};
LengthLexWord length_lex_word(uint32_t k);

// One of the counterexample families of homomorphism sequences, at a fixed
// working depth. materialize(k) is the k-th member as a point map; limit() is
// the map the sequence is tested against.
//
//   point_eval   evaluation at x_k = 0^k 1 0..., limit at x = 000...
//   agree_flip   flip bit 0 on the agreement cylinder of s_k (length-lex
//                enumeration), limit identity
//   flip         flip coordinate k, limit identity
//   restriction  the flip maps probed on clopen sets only
//   pair         component-wise pair of two sub-families
//   constant     identity at every index
//
// Beyond faithful_count() the depth-d table of a member collapses to the
// limit map; materialize still answers there (with the collapsed map), but
// convergence verdicts only trust the faithful range.
struct HomFamily {
    enum class Kind { PointEval, AgreeFlip, Flip, Pair, Restriction, Constant };

    Kind kind = Kind::Constant;
    int working_depth = 0;
    std::vector<HomFamily> components;  // Pair only, exactly two

    static HomFamily point_eval(int depth);
    static HomFamily agree_flip(int depth);
    static HomFamily flip(int depth);
    static HomFamily restriction(int depth);
    static HomFamily pair(HomFamily first, HomFamily second);
    static HomFamily constant(int depth);

    bool is_pair() const { return kind == Kind::Pair; }

    PointMap materialize(uint32_t k) const;  // non-pair kinds
    PointMap limit() const;
    PairMap materialize_pair(uint32_t k) const;
    PairMap limit_pair() const;

    // Indices where the depth-truncated member still differs from the limit.
    uint32_t faithful_count() const;

    std::string kind_name() const;
    nlohmann::ordered_json descriptor() const;
    static HomFamily from_descriptor(const nlohmann::ordered_json& j);
};

}  // namespace boolconv

#endif
