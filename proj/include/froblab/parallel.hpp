#pragma once

#include <cstddef>
#include <functional>

namespace froblab {

/// Worker cap for internal enumeration loops. 1 (the default) runs inline.
int worker_threads();
void set_worker_threads(int k);

/// Runs fn(i) for i in [0, n). With more than one worker the index range is
/// split into contiguous chunks; results written by index are therefore
/// identical to a sequential run.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace froblab
