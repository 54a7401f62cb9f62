#pragma once

#include <cstddef>
#include <functional>

namespace loewner_lab {

/// Worker count: LOEWNER_LAB_THREADS when set to a positive integer,
/// otherwise the hardware concurrency (0 or unset means auto).
unsigned worker_count();

/// Runs body(i) for i in [0, count) across worker_count() threads. If any
/// call throws, the exception from the lowest index is rethrown after all
/// workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace loewner_lab
