#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace spg {

// Seedable generator with platform-independent derived draws. All sampling
// goes through next_u64/next_double so output bytes do not depend on the
// standard library's distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0,1), 53 random bits
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [0, bound)
    int next_int(int bound) {
        return static_cast<int>(next_double() * bound);
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<size_t>(next_int(static_cast<int>(i)))]);
    }

    std::vector<int> permutation(int m) {
        std::vector<int> p(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) p[static_cast<size_t>(i)] = i + 1;
        shuffle(p);
        return p;
    }

    // splitmix64 step; derives independent per-stream seeds from a master seed
    static std::uint64_t derive(std::uint64_t master, std::uint64_t stream) {
        std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace spg
