#pragma once

#include <cstdint>
#include <functional>

namespace sympow {

// Runs fn(i) for i in [0, n) on up to `workers` threads. workers <= 1 runs
// inline. The first exception thrown by any fn is rethrown in the caller.
// Work is handed out through a shared counter, so the set of calls (though
// not their interleaving) is independent of the worker count.
void parallel_for(std::int64_t n, int workers,
                  const std::function<void(std::int64_t)>& fn);

int default_workers();

}  // namespace sympow
