#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace auctionlab {

using Digest = std::array<std::uint8_t, 32>;
using Nonce = std::array<std::uint8_t, 16>;

Digest sha256(std::span<const std::uint8_t> data);

// Commitment digest: SHA-256 over (bid as unsigned 64-bit big-endian || nonce).
// The encoding is part of the wire format and must not change.
Digest commit_digest(std::uint64_t bid, const Nonce& nonce);

std::string to_hex(std::span<const std::uint8_t> bytes);
bool from_hex(std::string_view hex, std::span<std::uint8_t> out);

}  // namespace auctionlab
