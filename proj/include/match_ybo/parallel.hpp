#pragma once

#include <cstddef>
#include <functional>

namespace match_ybo {

// Worker count used by parallel_for; 0 means hardware concurrency.
void set_jobs(unsigned jobs);
unsigned jobs();

// Runs body(i) for i in [0, count) on up to jobs() threads. The first
// exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace match_ybo
