#pragma once

#include <cstdint>

namespace xmodcat {

/// Selects between the serial reference implementation of a kernel and its
/// OpenMP version. Both must produce identical results.
enum class Exec { Serial, Parallel };

/// Default cap on exhaustive search spaces (2^32 candidates).
inline constexpr std::uint64_t kDefaultGuard = std::uint64_t{1} << 32;

/// Sets the OpenMP thread count used by Exec::Parallel kernels (no-op when n <= 0).
void set_thread_count(int n);
int thread_count();

}  // namespace xmodcat
