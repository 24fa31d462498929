#include "qclm/keyfile.hpp"

#include <bit>
#include <fstream>
#include <stdexcept>

namespace qclm {

namespace {

constexpr std::uint8_t kVersion = 1;

void append_poly(std::vector<std::uint8_t>& out, const RingPoly& poly) {
    const std::uint32_t p = poly.modulus();
    const std::size_t nbytes = (p + 7) / 8;
    const std::size_t base = out.size();
    out.resize(base + nbytes, 0);
    for (auto e : poly.support()) out[base + e / 8] |= std::uint8_t(1u << (e % 8));
}

void append_blocks(std::vector<std::uint8_t>& out, const QcBlockMatrix& m) {
    for (std::size_t i = 0; i < m.block_rows(); ++i)
        for (std::size_t j = 0; j < m.block_cols(); ++j) append_poly(out, m.at(i, j));
}

std::vector<std::uint8_t> header(std::uint8_t kind, KeyVariant variant,
                                 const SystemParams& params) {
    std::vector<std::uint8_t> out;
    out.reserve(kKeyHeaderBytes);
    for (char c : {'Q', 'C', 'L', 'M'}) out.push_back(std::uint8_t(c));
    out.push_back(kVersion);
    out.push_back(kind);
    out.push_back(std::uint8_t(variant));
    out.push_back(std::uint8_t(params.n0));
    out.push_back(std::uint8_t(params.dv));
    out.push_back(std::uint8_t(params.m));
    out.push_back(std::uint8_t(params.t_prime & 0xff));
    out.push_back(std::uint8_t(params.t_prime >> 8));
    for (int b = 0; b < 4; ++b) out.push_back(std::uint8_t((params.p >> (8 * b)) & 0xff));
    return out;
}

struct Header {
    std::uint8_t kind;
    KeyVariant variant;
    SystemParams params;
};

Header parse_header(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < kKeyHeaderBytes) throw KeyFileError("key file truncated");
    if (bytes[0] != 'Q' || bytes[1] != 'C' || bytes[2] != 'L' || bytes[3] != 'M')
        throw KeyFileError("bad key file magic");
    if (bytes[4] != kVersion) throw KeyFileError("unsupported key file version");
    Header h;
    h.kind = bytes[5];
    if (bytes[6] > 2) throw KeyFileError("bad key variant byte");
    h.variant = KeyVariant(bytes[6]);
    h.params.n0 = bytes[7];
    h.params.dv = bytes[8];
    h.params.m = bytes[9];
    h.params.t_prime = std::uint32_t(bytes[10]) | (std::uint32_t(bytes[11]) << 8);
    h.params.p = 0;
    for (int b = 3; b >= 0; --b) h.params.p = (h.params.p << 8) | bytes[12 + b];
    if (h.params.n0 < 2 || h.params.p == 0) throw KeyFileError("bad key parameters");
    return h;
}

QcBlockMatrix read_blocks(const std::vector<std::uint8_t>& bytes, std::size_t& at,
                          std::uint32_t p, std::size_t rows, std::size_t cols) {
    const std::size_t nbytes = (p + 7) / 8;
    QcBlockMatrix m(p, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (at + nbytes > bytes.size()) throw KeyFileError("key file truncated");
            RingPoly poly(p);
            for (std::size_t b = 0; b < nbytes; ++b) {
                std::uint8_t byte = bytes[at + b];
                while (byte) {
                    const int bit = std::countr_zero(byte);
                    const std::size_t coeff = b * 8 + std::size_t(bit);
                    if (coeff >= p) throw KeyFileError("stray bits beyond p");
                    poly.set_coeff(std::uint32_t(coeff), true);
                    byte &= std::uint8_t(byte - 1);
                }
            }
            m.at(i, j) = poly;
            at += nbytes;
        }
    return m;
}

}  // namespace

std::size_t public_payload_bytes(const SystemParams& params) {
    return std::size_t(params.k0()) * params.n0 * ((params.p + 7) / 8);
}

std::vector<std::uint8_t> serialize_public(const PublicKey& pk) {
    auto out = header(0, pk.variant, pk.params);
    append_blocks(out, pk.g_pub);
    return out;
}

std::vector<std::uint8_t> serialize_private(const PrivateKey& sk) {
    auto out = header(1, sk.variant, sk.params);
    append_blocks(out, sk.h);
    append_blocks(out, sk.s);
    append_blocks(out, sk.q);
    return out;
}

PublicKey parse_public(const std::vector<std::uint8_t>& bytes) {
    const Header h = parse_header(bytes);
    if (h.kind != 0) throw KeyFileError("not a public key file");
    std::size_t at = kKeyHeaderBytes;
    PublicKey pk;
    pk.params = h.params;
    pk.variant = h.variant;
    pk.g_pub = read_blocks(bytes, at, h.params.p, h.params.k0(), h.params.n0);
    if (at != bytes.size()) throw KeyFileError("trailing bytes in key file");
    return pk;
}

PrivateKey parse_private(const std::vector<std::uint8_t>& bytes) {
    const Header h = parse_header(bytes);
    if (h.kind != 1) throw KeyFileError("not a private key file");
    std::size_t at = kKeyHeaderBytes;
    PrivateKey sk;
    sk.params = h.params;
    sk.variant = h.variant;
    sk.h = read_blocks(bytes, at, h.params.p, 1, h.params.n0);
    sk.s = read_blocks(bytes, at, h.params.p, h.params.k0(), h.params.k0());
    sk.q = read_blocks(bytes, at, h.params.p, h.params.n0, h.params.n0);
    if (at != bytes.size()) throw KeyFileError("trailing bytes in key file");
    auto g = derive_generator(sk.h);
    if (!g) throw KeyFileError("private key parity block not invertible");
    sk.g = std::move(*g);
    return sk;
}

std::vector<std::uint8_t> pack_bits(const BitVec& v) {
    std::vector<std::uint8_t> out((v.size() + 7) / 8, 0);
    for (auto i : v.support()) out[i / 8] |= std::uint8_t(1u << (i % 8));
    return out;
}

BitVec unpack_bits(const std::vector<std::uint8_t>& bytes, std::size_t nbits) {
    if (bytes.size() != (nbits + 7) / 8)
        throw KeyFileError("message file has wrong length");
    BitVec v(nbits);
    for (std::size_t i = 0; i < nbits; ++i)
        if ((bytes[i / 8] >> (i % 8)) & 1) v.set(i, true);
    return v;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw KeyFileError("cannot open " + path + " for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!f) throw KeyFileError("write failed: " + path);
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw KeyFileError("cannot open " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace qclm
