#pragma once

#include <functional>

namespace plflow {

// Worker budget for internal parallelism: PLFLOW_THREADS when set to a
// positive integer, otherwise the hardware concurrency (at least 1).
int thread_budget();

// Runs fn(0..n-1) on up to thread_budget() workers.  Iterations must be
// independent; results written to caller-owned slots stay deterministic.
// Nested calls from inside a worker run serially.  The first exception
// thrown by any iteration is rethrown on the calling thread.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace plflow
