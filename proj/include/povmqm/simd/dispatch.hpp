#pragma once

#include <string_view>

namespace povmqm::simd {

enum class Backend { scalar, avx2, neon };

/// Backend selected at first use: highest instruction set the CPU supports,
/// overridable with POVMQM_SIMD=scalar|avx2|neon.
Backend active_backend();

std::string_view backend_name(Backend b);

/// Re-point the dispatch tables (tests only; throws ValidationError if the
/// CPU does not support the requested backend).  Not thread-safe against
/// concurrent kernel calls.
void force_backend(Backend b);

bool backend_supported(Backend b);

}  // namespace povmqm::simd
