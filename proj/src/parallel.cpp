#include "screening/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace screening {

int worker_count() {
    if (const char* env = std::getenv("MENUSOLVE_WORKERS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) return n;
        } catch (...) {
            // fall through to the hardware default
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace screening
