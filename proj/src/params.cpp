#include "qclm/params.hpp"

#include <stdexcept>
#include <string>

namespace qclm {

void SystemParams::validate() const {
    if (n0 < 2) throw std::invalid_argument("n0 must be at least 2");
    if (p == 0 || dv == 0) throw std::invalid_argument("p and dv must be positive");
    if (dv >= p) throw std::invalid_argument("column weight must be below p");
    // room for all n0*dv*(dv-1) pairwise differences among p-1 nonzero residues
    if (std::uint64_t(n0) * dv * (dv - 1) >= p)
        throw std::invalid_argument("difference-family preconditions need n0*dv*(dv-1) < p");
    if (std::uint64_t(dc()) * m >= p)
        throw std::invalid_argument("need p > dc*m");
    if (t() > n()) throw std::invalid_argument("error weight exceeds code length");
}

SystemParams SystemParams::preset(int which) {
    switch (which) {
        case 1: return {4, 13, 4096, 7, 27};
        case 2: return {3, 13, 8192, 11, 40};
        case 3: return {3, 15, 16384, 13, 60};
        default: throw std::invalid_argument("unknown preset " + std::to_string(which));
    }
}

SystemParams SystemParams::toy() { return {4, 3, 64, 3, 2}; }

}  // namespace qclm
