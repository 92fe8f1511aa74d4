#pragma once

namespace screening {

// Worker count for path simulation and sweeps: MENUSOLVE_WORKERS when set,
// otherwise the hardware concurrency (at least 1).
int worker_count();

}  // namespace screening
