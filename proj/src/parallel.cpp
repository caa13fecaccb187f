#include "bethe/parallel.hpp"

#include <cstdlib>
#include <string>

namespace bethe {

unsigned worker_count() {
    if (const char* env = std::getenv("BETHE_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (...) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

}  // namespace bethe
