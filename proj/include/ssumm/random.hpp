#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace ssumm {

/// Deterministic random source. Wraps std::mt19937_64 (whose output sequence is
/// fixed by the standard) and derives bounded draws and shuffles by hand, so the
/// same seed produces the same decisions on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform draw from [0, n). Unbiased via rejection sampling. n must be > 0.
    std::uint64_t bounded(std::uint64_t n) {
        std::uint64_t x, r;
        do {
            x = eng_();
            r = x % n;
        } while (x - r > std::uint64_t(0) - n);
        return r;
    }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[bounded(i)]);
        }
    }

    /// Random bijection onto {1, ..., n}, as a vector indexed by 0..n-1.
    std::vector<std::uint32_t> permutation(std::uint32_t n) {
        std::vector<std::uint32_t> p(n);
        for (std::uint32_t i = 0; i < n; ++i) p[i] = i + 1;
        shuffle(p);
        return p;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace ssumm
