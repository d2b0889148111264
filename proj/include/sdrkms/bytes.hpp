/*
   Copyright 2026 The sdrkms authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#ifndef SDRKMS_BYTES_HPP
#define SDRKMS_BYTES_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sdrkms {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// 32-byte seed used by every deterministic/probabilistic operation.
using Seed = std::array<std::uint8_t, 32>;

inline ByteView as_bytes(std::string_view s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

std::string hex_encode(ByteView data);
Bytes hex_decode_or_empty(std::string_view hex);

/// Seed from a small integer, for tests and CLI convenience.
Seed seed_from_u64(std::uint64_t v);

/// Seed from arbitrary text (hashed); empty text gives the all-zero seed.
Seed seed_from_text(std::string_view text);

/// Best-effort overwrite of key material before release.
void wipe(Bytes& b);

bool starts_with(ByteView data, ByteView prefix);

/// True if `needle` occurs as a contiguous substring of `haystack`.
bool contains_subsequence(ByteView haystack, ByteView needle);

} // namespace sdrkms

#endif
