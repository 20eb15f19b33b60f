#ifndef LGL_PARALLEL_HPP
#define LGL_PARALLEL_HPP

namespace lgl {

/// Execution policy for the sweep kernels. Every kernel that accepts a
/// run_mode has a plain serial implementation and an OpenMP one; both must
/// produce the same report (checked by the test suite).
enum class run_mode { serial, parallel };

/// Thread cap for the oracle sweep runner: value of LGL_SWEEP_THREADS if set
/// and positive, otherwise the OpenMP default team size.
int sweep_thread_cap();

} // namespace lgl

#endif
