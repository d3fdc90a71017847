#include "zeta4/parallel.hpp"

#include <cstdlib>
#include <string>

namespace zeta4 {

unsigned default_jobs() {
    if (const char* env = std::getenv("ZETA4_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace zeta4
