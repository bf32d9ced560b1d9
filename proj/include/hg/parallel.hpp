#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace hg {

int thread_count();
void set_thread_count(int k);

/// Runs fn(i) for i in [0, n). Work is claimed through an atomic counter;
/// results must be written into index-addressed slots so that reductions can
/// stay in index order and output is independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace hg
