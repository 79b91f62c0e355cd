#include "hcb/limits.hpp"

#include <cstdlib>

namespace hcb {

long max_dim() {
    static long cap = [] {
        const char* env = std::getenv("HCB_MAX_DIM");
        if (!env) return 512L;
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || v <= 0) return 512L;
        return v;
    }();
    return cap;
}

void guard_dim(long n, const std::string& what) {
    if (n > max_dim())
        throw DimLimitError(what + ": dimension " + std::to_string(n) +
                            " exceeds HCB_MAX_DIM=" + std::to_string(max_dim()));
}

}  // namespace hcb
