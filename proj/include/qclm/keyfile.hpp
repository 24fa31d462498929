#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qclm/mceliece.hpp"

namespace qclm {

struct KeyFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// On-disk layout, little-endian integers, LSB-first bit packing:
//   "QCLM" | version=1 | kind (0 pub / 1 priv) | variant | n0 | dv | m |
//   t' (2 bytes) | p (4 bytes) | payload
// Payload is the circulant first rows, ceil(p/8) bytes each (bit j of byte i
// is coefficient 8i+j), blocks in row-major grid order:
//   public: G' (k0 x n0); private: H (1 x n0), then S (k0 x k0), then Q (n0 x n0).
inline constexpr std::size_t kKeyHeaderBytes = 16;

std::vector<std::uint8_t> serialize_public(const PublicKey& pk);
std::vector<std::uint8_t> serialize_private(const PrivateKey& sk);

// throw KeyFileError on malformed input
PublicKey parse_public(const std::vector<std::uint8_t>& bytes);
PrivateKey parse_private(const std::vector<std::uint8_t>& bytes);

std::size_t public_payload_bytes(const SystemParams& params);

// bit-packed vectors for message/ciphertext files (same bit order)
std::vector<std::uint8_t> pack_bits(const BitVec& v);
BitVec unpack_bits(const std::vector<std::uint8_t>& bytes, std::size_t nbits);

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> read_file(const std::string& path);

}  // namespace qclm
