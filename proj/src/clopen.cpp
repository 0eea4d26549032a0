#include "boolconv/clopen.hpp"

#include <bit>
#include <stdexcept>

namespace boolconv {

namespace {

int check_depth(int depth) {
    if (depth < 0 || depth > ClopenSet::kDepthCap)
        throw std::invalid_argument("clopen: depth out of range [0, 24]");
    return depth;
}

size_t word_count(int depth) {
    uint64_t bits = uint64_t(1) << depth;
    return size_t((bits + 63) / 64);
}

}  // namespace

ClopenSet::ClopenSet(int depth) : depth_(check_depth(depth)), words_(word_count(depth), 0) {}

ClopenSet ClopenSet::full_set(int depth) {
    ClopenSet s(depth);
    for (auto& w : s.words_) w = ~uint64_t(0);
    s.clear_tail();
    return s;
}

ClopenSet ClopenSet::atom(uint32_t index, int depth) {
    ClopenSet s(depth);
    if (index >= s.atom_count()) throw std::invalid_argument("clopen: atom index out of range");
    s.set(index);
    return s;
}

ClopenSet ClopenSet::cylinder(uint32_t prefix, int len, int depth) {
    if (len < 0 || len > depth) throw std::invalid_argument("clopen: cylinder longer than depth");
    return atom(prefix, len).refine(depth);
}

ClopenSet ClopenSet::coordinate_half(int coord, int bit, int depth) {
    if (coord < 0 || coord >= depth)
        throw std::invalid_argument("clopen: coordinate out of range");
    ClopenSet s(depth);
    uint64_t n = s.atom_count();
    for (uint64_t i = 0; i < n; ++i)
        if (int((i >> coord) & 1) == bit) s.set(i);
    return s;
}

void ClopenSet::clear_tail() {
    if (depth_ < 6) words_[0] &= (uint64_t(1) << (uint64_t(1) << depth_)) - 1;
}

uint64_t ClopenSet::popcount() const {
    uint64_t total = 0;
    for (uint64_t w : words_) total += uint64_t(std::popcount(w));
    return total;
}

ClopenSet ClopenSet::refine(int new_depth) const {
    if (new_depth < depth_) throw std::invalid_argument("cannot coarsen");
    check_depth(new_depth);
    if (new_depth == depth_) return *this;
    // Atom i at depth d becomes atoms i + (t << d): tile the bit pattern.
    ClopenSet out(new_depth);
    if (depth_ < 6) {
        uint64_t block = words_[0];
        int bits = 1 << depth_;
        uint64_t tiled = 0;
        for (int off = 0; off < 64; off += bits) tiled |= block << off;
        for (auto& w : out.words_) w = tiled;
        out.clear_tail();
    } else {
        size_t src = words_.size();
        for (size_t i = 0; i < out.words_.size(); ++i) out.words_[i] = words_[i % src];
    }
    return out;
}

ClopenSet ClopenSet::complement() const {
    ClopenSet out(depth_);
    for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    out.clear_tail();
    return out;
}

bool ClopenSet::operator==(const ClopenSet& o) const {
    if (depth_ != o.depth_) {
        int d = std::max(depth_, o.depth_);
        return refine(d) == o.refine(d);
    }
    return words_ == o.words_;
}

ClopenSet zip_apply(const ClopenSet& a, const ClopenSet& b, int op) {
    int d = std::max(a.depth(), b.depth());
    ClopenSet x = a.refine(d), y = b.refine(d);
    ClopenSet out(d);
    for (size_t i = 0; i < out.words_.size(); ++i) {
        switch (op) {
            case 0: out.words_[i] = x.words_[i] & y.words_[i]; break;
            case 1: out.words_[i] = x.words_[i] | y.words_[i]; break;
            case 2: out.words_[i] = x.words_[i] ^ y.words_[i]; break;
            default: out.words_[i] = x.words_[i] & ~y.words_[i]; break;
        }
    }
    return out;
}

ClopenSet meet(const ClopenSet& a, const ClopenSet& b) { return zip_apply(a, b, 0); }
ClopenSet join(const ClopenSet& a, const ClopenSet& b) { return zip_apply(a, b, 1); }
ClopenSet symdiff(const ClopenSet& a, const ClopenSet& b) { return zip_apply(a, b, 2); }
ClopenSet setminus(const ClopenSet& a, const ClopenSet& b) { return zip_apply(a, b, 3); }

bool subset_of(const ClopenSet& a, const ClopenSet& b) { return setminus(a, b).is_empty(); }

Dyadic measure(const ClopenSet& a) { return a.measure(); }

Dyadic fn_distance(const ClopenSet& a, const ClopenSet& b) { return symdiff(a, b).measure(); }

std::string ClopenSet::atoms_hex() const {
    uint64_t bits = atom_count();
    size_t digits = size_t((bits + 3) / 4);
    std::string out(digits, '0');
    static const char* hex = "0123456789abcdef";
    for (size_t d = 0; d < digits; ++d) {
        // big-endian: first digit holds the highest-numbered atoms
        size_t nibble = digits - 1 - d;
        unsigned v = unsigned(words_[nibble >> 4] >> ((nibble & 15) * 4)) & 0xF;
        out[d] = hex[v];
    }
    return out;
}

ClopenSet ClopenSet::from_hex(const std::string& hex, int depth) {
    ClopenSet s(depth);
    uint64_t bits = s.atom_count();
    size_t digits = size_t((bits + 3) / 4);
    if (hex.size() != digits)
        throw std::invalid_argument("clopen: hex length does not match depth");
    for (size_t d = 0; d < digits; ++d) {
        char c = hex[d];
        unsigned v;
        if (c >= '0' && c <= '9') v = unsigned(c - '0');
        else if (c >= 'a' && c <= 'f') v = unsigned(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') v = unsigned(c - 'A' + 10);
        else throw std::invalid_argument("clopen: bad hex digit");
        size_t nibble = digits - 1 - d;
        s.words_[nibble >> 4] |= uint64_t(v) << ((nibble & 15) * 4);
    }
    s.clear_tail();
    return s;
}

}  // namespace boolconv
