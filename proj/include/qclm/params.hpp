#pragma once

#include <cstdint>

namespace qclm {

// Code/(crypto)system shape: n0 circulant blocks of size p, column weight dv,
// error-spread weight m, intentional error weight t_prime.
struct SystemParams {
    std::uint32_t n0 = 0;
    std::uint32_t dv = 0;
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t t_prime = 0;

    std::uint32_t k0() const { return n0 - 1; }
    std::uint64_t n() const { return std::uint64_t(n0) * p; }
    std::uint64_t k() const { return std::uint64_t(k0()) * p; }
    std::uint32_t dc() const { return n0 * dv; }
    std::uint32_t t() const { return t_prime * m; }
    double rate() const { return double(k0()) / double(n0); }

    void validate() const;

    static SystemParams preset(int which);  // 1, 2, 3
    static SystemParams toy();              // attack-demo scale
};

}  // namespace qclm
