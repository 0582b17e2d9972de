#pragma once

#include <cstddef>
#include <functional>

namespace dynatomic {

/// Worker count used by the evaluation pipelines; 1 runs inline.
void set_jobs(unsigned jobs);
unsigned jobs();

/// Runs body(i) for i in [0, count) on up to jobs() threads. Each index is
/// run exactly once; results must be written to per-index slots so output
/// does not depend on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace dynatomic
