#ifndef BOOLCONV_CLOPEN_HPP
#define BOOLCONV_CLOPEN_HPP

#include "boolconv/dyadic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace boolconv {

// Depth-n clopen subset of Cantor space as a bit-vector over the 2^n cylinders
// of length n.
//
// Atom indexing convention (flip maps depend on it):
//   - atoms are integers 0 .. 2^depth - 1
//   - coordinate j of an atom is bit j of its index (LSB is coordinate 0)
//   - XOR by (1 << j) flips coordinate j
//
// Refining to a deeper level splits every atom into 2^(d'-d) atoms; in this
// indexing that is just tiling the bit pattern, so measures are preserved
// exactly. Measure of a set is popcount / 2^depth, always a canonical dyadic.
class ClopenSet {
  public:
    static constexpr int kDepthCap = 24;

    ClopenSet() : depth_(0), words_(1, 0) {}
    explicit ClopenSet(int depth);  // empty set at given depth

    static ClopenSet empty_set(int depth) { return ClopenSet(depth); }
    static ClopenSet full_set(int depth);
    // Single length-`depth` cylinder.
    static ClopenSet atom(uint32_t index, int depth);
    // Cylinder [s] for the length-`len` word s (bit j of `prefix` = symbol j),
    // represented at `depth` >= len.
    static ClopenSet cylinder(uint32_t prefix, int len, int depth);
    // Half-space {x : x(coord) = bit}.
    static ClopenSet coordinate_half(int coord, int bit, int depth);

    int depth() const { return depth_; }
    uint64_t atom_count() const { return uint64_t(1) << depth_; }
    bool test(uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(uint64_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(uint64_t i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    uint64_t popcount() const;
    Dyadic measure() const { return Dyadic(popcount(), uint32_t(depth_)); }
    bool is_empty() const { return popcount() == 0; }

    ClopenSet refine(int new_depth) const;  // throws "cannot coarsen" if shallower

    ClopenSet complement() const;

    bool operator==(const ClopenSet& o) const;
    bool operator!=(const ClopenSet& o) const { return !(*this == o); }

    std::string atoms_hex() const;  // big-endian hex of the bit-vector
    static ClopenSet from_hex(const std::string& hex, int depth);

    const std::vector<uint64_t>& words() const { return words_; }

  private:
    int depth_;
    std::vector<uint64_t> words_;  // bit i = atom i; tail bits above 2^depth are 0

    void clear_tail();
    friend ClopenSet zip_apply(const ClopenSet&, const ClopenSet&, int op);
};

// Binary operations refine both sides to the common (deeper) depth first.
ClopenSet meet(const ClopenSet& a, const ClopenSet& b);
ClopenSet join(const ClopenSet& a, const ClopenSet& b);
ClopenSet symdiff(const ClopenSet& a, const ClopenSet& b);
ClopenSet setminus(const ClopenSet& a, const ClopenSet& b);
bool subset_of(const ClopenSet& a, const ClopenSet& b);

Dyadic measure(const ClopenSet& a);

// Frechet-Nikodym distance: measure of the symmetric difference.
Dyadic fn_distance(const ClopenSet& a, const ClopenSet& b);

}  // namespace boolconv

#endif
