#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace plic {

using Count = boost::multiprecision::cpp_int;
using Rational = boost::rational<boost::multiprecision::cpp_int>;

/// Pattern vertex subsets as bitmasks; patterns are capped at 20 vertices.
using Mask = std::uint32_t;

constexpr int kMaxPatternVerts = 20;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline int lowbit_index(Mask m) { return __builtin_ctz(m); }

inline std::vector<int> mask_to_list(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(lowbit_index(m));
        m &= m - 1;
    }
    return out;
}

inline Mask list_to_mask(const std::vector<int>& xs) {
    Mask m = 0;
    for (int x : xs) m |= Mask(1) << x;
    return m;
}

/// Deterministic splitmix-based RNG. Same seed, same stream, everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n).
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below(0)");
        // rejection sampling keeps the stream reproducible and unbiased
        std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do { v = next(); } while (v >= lim);
        return v % n;
    }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(std::uint64_t(hi - lo + 1)));
    }

    bool coin() { return next() & 1; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

  private:
    std::uint64_t state_;
};

inline void hash_mix(std::size_t& h, std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
}

/// Sorted-vector set helpers used for host-vertex sets throughout.
using VList = std::vector<int>;

inline VList vset_sorted(VList v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline bool vset_contains(const VList& a, int x) {
    return std::binary_search(a.begin(), a.end(), x);
}

inline VList vset_union(const VList& a, const VList& b) {
    VList out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VList vset_intersect(const VList& a, const VList& b) {
    VList out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VList vset_minus(const VList& a, const VList& b) {
    VList out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool vset_subset(const VList& a, const VList& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace plic
