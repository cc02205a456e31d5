#pragma once

#include <cstddef>
#include <cstdint>

namespace unitfrac {

// Default resource limits. Each is overridable per call; the CLI also maps
// them onto flags/env/config. Term counts are deliberately small: the
// sequences here grow doubly exponentially, so term 20 of the Sylvester
// sequence already has on the order of 10^5 digits.
inline constexpr std::size_t kDefaultTermCap = 20;
inline constexpr std::size_t kDefaultClaimCap = 10;
inline constexpr unsigned kDefaultDigits = 30;
inline constexpr unsigned kMaxDigits = 1000;
inline constexpr std::uint64_t kDefaultNodeCap = 10'000'000;

}  // namespace unitfrac
