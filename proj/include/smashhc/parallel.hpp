// Minimal worker pool: parallel_for over an index range with deterministic
// result placement. Workers default to 1 (fully sequential) unless raised via
// set_default_workers (the CLI --workers flag).

#ifndef SMASHHC_PARALLEL_HPP
#define SMASHHC_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace smashhc {

int default_workers();
void set_default_workers(int n);

// Calls fn(i) for i in [0, n); fn must only write to slot i of its output.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  int workers = 0);

}  // namespace smashhc

#endif
