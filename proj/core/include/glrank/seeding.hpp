#pragma once

#include <cstdint>
#include <initializer_list>

namespace glrank {

/// splitmix64 finaliser.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Child seed for a (master, key...) tuple. Independent of evaluation order, so parallel
/// trials stay reproducible.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> keys) noexcept;

}  // namespace glrank
