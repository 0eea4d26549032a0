#ifndef BOOLCONV_BADSET_HPP
#define BOOLCONV_BADSET_HPP

#include "boolconv/clopen.hpp"
#include "boolconv/rational.hpp"

#include <cstdint>
#include <vector>

namespace boolconv {

// Staged construction of a closed set B of measure > t every point of which
// is flipped out of B by some coordinate inside each constructed stage.
//
// Stage data: depths d_0 < d_1 < ... and excluded-word sets C_n over
// {0,1}^{d_n}, satisfying
//   (1) C_n lives at depth d_n
//   (2) |C_n| < (1-t) * 2^{d_n}
//   (3) extensions of C_n words stay in C_{n+1}
//   (4) every word outside C_{n+1} flips into C_{n+1} at some coordinate
//       m in [d_n, d_{n+1})
// B_n is the complement of the C_n cylinders.
struct BadSetConstruction {
    struct Stage {
        int depth = 0;
        ClopenSet code;  // atoms = words of C_n (same index convention)
    };

    Rational target;  // t
    std::vector<Stage> stages;
    int depth_cap = ClopenSet::kDepthCap;
    int requested_stages = 0;
    bool capped = false;  // stopped early because the next stage would exceed the cap

    int last_depth() const { return stages.back().depth; }
    ClopenSet bad_set(size_t n) const { return stages.at(n).code.complement(); }
    ClopenSet bad_set() const { return bad_set(stages.size() - 1); }
    Dyadic bad_measure(size_t n) const { return bad_set(n).measure(); }
};

// Seed: the smallest perfect-code length with density below 1-t (for t = 1/2
// that is d_0 = 3 with the two constant words). Each step picks the smallest
// perfect-code length k = 2^m - 1 with 1/(k+1) < alpha, where
// alpha = ((1-t)*2^d - |C|) / (2^d - |C|). Stops at the depth cap with
// however many stages fit.
BadSetConstruction build_stages(const Rational& target, int num_stages,
                                int depth_cap = ClopenSet::kDepthCap);

struct ConditionReport {
    bool cond2 = true;  // density bound; (1) is structural in this encoding
    bool cond3 = true;  // extension closure
    bool cond4 = true;  // flip escape
    bool all() const { return cond2 && cond3 && cond4; }
    int64_t witness_stage = -1;
    int64_t witness_word = -1;
};

ConditionReport verify_conditions(const BadSetConstruction& c);

struct StageEscape {
    bool ok = false;
    // witness[s] = escaping flip coordinate for excluded words; -1 on
    // C-members, -2 where no coordinate works (condition failure)
    std::vector<int8_t> witness;
};

// Condition (4) between stages n and n+1, with the full witness map.
StageEscape stage_escape(const BadSetConstruction& c, size_t n);

// flip_coord applied to a set: image (= preimage) of the coordinate flip.
ClopenSet flip_image(const ClopenSet& a, int coord);

// Exact measure of the meet of flip_m[B] over m in [from, to) at B's depth.
Dyadic flip_meet_measure(const ClopenSet& b, int from, int to);

// Meet over m in [d_j, d_last) for the last bad set. Zero whenever the range
// strictly contains a full stage (d_{j+1} < d_last); a range equal to exactly
// one stage keeps the fresh codeword block, and the value is reported as is.
Dyadic window_flip_intersection(const BadSetConstruction& c, size_t from_stage);

}  // namespace boolconv

#endif
