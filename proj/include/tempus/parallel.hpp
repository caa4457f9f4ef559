#pragma once

#include <cstddef>
#include <functional>

namespace tempus {

/// Worker count used when a caller passes 0: the TEMPUS_THREADS environment
/// variable if set to a positive integer, otherwise the hardware concurrency.
std::size_t default_workers();

/// Runs body(i) for i in [0, count) on up to `workers` threads (0 selects
/// default_workers()). Indices are handed out in contiguous blocks; every
/// body call must write only to its own slot, so results do not depend on
/// the worker count.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace tempus
