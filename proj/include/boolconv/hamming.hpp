#ifndef BOOLCONV_HAMMING_HPP
#define BOOLCONV_HAMMING_HPP

#include "boolconv/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace boolconv {

// Words are unsigned integers, bit j = coordinate j (same convention as the
// clopen atom indexing), word length n <= 63.

int hamming_weight(uint64_t w);
int hamming_dist(uint64_t a, uint64_t b);

// Parity-check matrix of the [2^m-1, 2^m-1-m] Hamming code: all nonzero
// vectors of F_2^m as columns, the m unit vectors placed last so that the
// leading n-m positions carry data bits.
struct ParityCheck {
    int m = 0;
    int n = 0;                      // 2^m - 1
    std::vector<uint32_t> columns;  // column values as m-bit integers

    static ParityCheck standard(int m);

    uint32_t syndrome(uint64_t word) const;
    bool columns_distinct_nonzero() const;
};

// A set of length-n words; "code" means every word of {0,1}^n is within
// Hamming distance 1 of the set. Perfect codes pack the balls disjointly.
// Large kernels (m = 5, 2^26 words) are carried by the parity check alone.
struct Code {
    int n = 0;
    std::vector<uint64_t> words;  // sorted; empty when only the kernel is kept
    std::optional<ParityCheck> kernel;

    uint64_t size() const;
    bool has_words() const { return !words.empty() || n == 0; }
};

struct PerfectReport {
    bool disjoint = false;
    bool covering = false;
    bool exhaustive = false;  // scanned all 2^n words vs structural argument
};

// Kernel of the standard parity check; words materialized for m <= 4,
// kernel-only for m == 5. Throws for m < 2 or m > 5.
Code perfect_code(int m);

// Exhaustive for n <= 15 (each word must be covered by exactly one ball);
// structural otherwise (pairwise distance >= 3 plus the counting identity,
// or the kernel route when no words are stored).
PerfectReport verify_perfect(const Code& c);
bool is_code(const Code& c);  // covering only, exhaustive, n <= 24

// {x^0 : x in C} u {x^1 : x in C}; doubles the size, keeps the code property.
Code extend_code(const Code& c);

struct MinimalCodeResult {
    uint64_t size = 0;
    Code example;
};

// Smallest covering code in {0,1}^n by exhaustive search, n <= 4.
MinimalCodeResult minimal_code(int n);

struct CodeRatioRow {
    int n = 0;
    Rational bound;        // upper bound on a_n = c_n / 2^n
    bool perfect = false;  // n = 2^m - 1 row, bound 1/(n+1)
};

// Upper bounds on a_n for n = 3 .. 2^maxM - 1: 1/(n+1) at perfect lengths,
// carried forward in between (a_n is non-increasing via extension).
std::vector<CodeRatioRow> code_ratio_table(int max_m);

}  // namespace boolconv

#endif
