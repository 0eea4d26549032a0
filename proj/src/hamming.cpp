#include "boolconv/hamming.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace boolconv {

int hamming_weight(uint64_t w) { return std::popcount(w); }
int hamming_dist(uint64_t a, uint64_t b) { return std::popcount(a ^ b); }

ParityCheck ParityCheck::standard(int m) {
    if (m < 1 || m > 6) throw std::invalid_argument("parity check: m out of range");
    ParityCheck h;
    h.m = m;
    h.n = (1 << m) - 1;
    for (uint32_t v = 1; v <= uint32_t(h.n); ++v)
        if ((v & (v - 1)) != 0) h.columns.push_back(v);  // non-units first
    for (int k = 0; k < m; ++k) h.columns.push_back(uint32_t(1) << k);
    return h;
}

uint32_t ParityCheck::syndrome(uint64_t word) const {
    uint32_t s = 0;
    for (int j = 0; j < n; ++j)
        if ((word >> j) & 1) s ^= columns[size_t(j)];
    return s;
}

bool ParityCheck::columns_distinct_nonzero() const {
    for (size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == 0) return false;
        for (size_t j = i + 1; j < columns.size(); ++j)
            if (columns[i] == columns[j]) return false;
    }
    return int(columns.size()) == n;
}

uint64_t Code::size() const {
    if (!words.empty()) return words.size();
    if (kernel) return uint64_t(1) << (kernel->n - kernel->m);
    return 0;
}

Code perfect_code(int m) {
    if (m < 2) throw std::invalid_argument("perfect code: m must be at least 2");
    if (m > 5) throw std::invalid_argument("perfect code: m capped at 5");
    Code c;
    c.kernel = ParityCheck::standard(m);
    c.n = c.kernel->n;
    if (m <= 4) {
        // Data bits occupy the leading n-m positions; the unit columns at the
        // back make each data word extend uniquely into the kernel.
        int data_bits = c.n - m;
        for (uint64_t data = 0; data < (uint64_t(1) << data_bits); ++data) {
            uint32_t parity = 0;
            for (int j = 0; j < data_bits; ++j)
                if ((data >> j) & 1) parity ^= c.kernel->columns[size_t(j)];
            uint64_t word = data;
            for (int k = 0; k < m; ++k)
                if ((parity >> k) & 1) word |= uint64_t(1) << (data_bits + k);
            c.words.push_back(word);
        }
        std::sort(c.words.begin(), c.words.end());
    }
    return c;
}

bool is_code(const Code& c) {
    if (c.n > 24) throw std::invalid_argument("is_code: exhaustive check capped at n = 24");
    if (!c.has_words()) throw std::invalid_argument("is_code: no words stored");
    for (uint64_t x = 0; x < (uint64_t(1) << c.n); ++x) {
        bool covered = false;
        for (uint64_t w : c.words)
            if (hamming_dist(x, w) <= 1) { covered = true; break; }
        if (!covered) return false;
    }
    return true;
}

PerfectReport verify_perfect(const Code& c) {
    PerfectReport r;
    if (!c.has_words()) {
        // Kernel route: distinct nonzero columns give linear min distance >= 3,
        // and (n+1) * 2^(n-m) = 2^n closes the counting argument.
        if (!c.kernel) throw std::invalid_argument("verify: empty code");
        r.exhaustive = false;
        r.disjoint = c.kernel->columns_distinct_nonzero();
        r.covering = r.disjoint &&
                     (BigInt(c.n + 1) << (c.kernel->n - c.kernel->m)) == (BigInt(1) << c.n);
        return r;
    }
    if (c.n <= 15) {
        r.exhaustive = true;
        r.disjoint = true;
        r.covering = true;
        for (uint64_t x = 0; x < (uint64_t(1) << c.n); ++x) {
            int hits = 0;
            for (uint64_t w : c.words)
                if (hamming_dist(x, w) <= 1) ++hits;
            if (hits == 0) r.covering = false;
            if (hits > 1) r.disjoint = false;
        }
        return r;
    }
    r.exhaustive = false;
    r.disjoint = true;
    for (size_t i = 0; i < c.words.size() && r.disjoint; ++i)
        for (size_t j = i + 1; j < c.words.size(); ++j)
            if (hamming_dist(c.words[i], c.words[j]) < 3) { r.disjoint = false; break; }
    r.covering = r.disjoint &&
                 BigInt(c.n + 1) * BigInt(c.words.size()) == (BigInt(1) << c.n);
    return r;
}

Code extend_code(const Code& c) {
    if (!c.has_words()) throw std::invalid_argument("extend: no words stored");
    Code out;
    out.n = c.n + 1;
    out.words.reserve(c.words.size() * 2);
    for (uint64_t w : c.words) {
        out.words.push_back(w);
        out.words.push_back(w | (uint64_t(1) << c.n));
    }
    std::sort(out.words.begin(), out.words.end());
    return out;
}

MinimalCodeResult minimal_code(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("minimal code: n capped at 4");
    uint32_t space = uint32_t(1) << n;
    // Subsets of {0,1}^n as bitmasks over at most 16 points, smallest first.
    std::vector<uint32_t> ball(space);
    for (uint32_t x = 0; x < space; ++x) {
        uint32_t b = uint32_t(1) << x;
        for (int j = 0; j < n; ++j) b |= uint32_t(1) << (x ^ (uint32_t(1) << j));
        ball[x] = b;
    }
    uint32_t all = (uint32_t(1) << space) - 1;  // space <= 16 here
    for (uint64_t k = 1; k <= space; ++k) {
        for (uint32_t mask = 0; mask < (uint32_t(1) << space); ++mask) {
            if (uint64_t(std::popcount(mask)) != k) continue;
            uint32_t covered = 0;
            for (uint32_t x = 0; x < space; ++x)
                if ((mask >> x) & 1) covered |= ball[x];
            if (covered == all) {
                MinimalCodeResult res;
                res.size = k;
                res.example.n = n;
                for (uint32_t x = 0; x < space; ++x)
                    if ((mask >> x) & 1) res.example.words.push_back(x);
                return res;
            }
        }
    }
    throw std::logic_error("minimal code: search fell through");
}

std::vector<CodeRatioRow> code_ratio_table(int max_m) {
    if (max_m < 2 || max_m > 5) throw std::invalid_argument("ratio table: maxM in [2, 5]");
    std::vector<CodeRatioRow> rows;
    Rational bound(1);
    for (int n = 3; n <= (1 << max_m) - 1; ++n) {
        bool perfect = (uint64_t(n) & uint64_t(n + 1)) == 0;  // n = 2^m - 1
        if (perfect) bound = Rational(1, n + 1);
        rows.push_back({n, bound, perfect});
    }
    return rows;
}

}  // namespace boolconv
