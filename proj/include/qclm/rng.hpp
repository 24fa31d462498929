#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qclm {

// xoshiro256** seeded through splitmix64.  Substreams are derived from
// (seed, stream) so that work split across threads by stream index gives
// the same draws as a serial run.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : s_) word = splitmix(x);
    }

    static Rng substream(std::uint64_t seed, std::uint64_t stream) {
        Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
        r.jump_ahead(stream);
        return r;
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0, bound), rejection sampled
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    bool bit() { return next() >> 63; }

    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

    // k distinct values from [0, n), partial Fisher-Yates
    std::vector<std::uint32_t> distinct(std::uint32_t k, std::uint32_t n) {
        if (k > n) throw std::invalid_argument("distinct: more draws than values");
        std::vector<std::uint32_t> pool(n);
        for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
        std::vector<std::uint32_t> out(k);
        for (std::uint32_t i = 0; i < k; ++i) {
            const std::uint64_t j = i + below(n - i);
            std::swap(pool[i], pool[j]);
            out[i] = pool[i];
        }
        return out;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    static std::uint64_t splitmix(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    void jump_ahead(std::uint64_t n) {
        // decorrelate nearby substreams a little further
        for (std::uint64_t i = 0; i < (n & 7); ++i) next();
    }

    std::uint64_t s_[4];
};

}  // namespace qclm
