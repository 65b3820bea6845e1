#include <dynbc/diagnostics.hpp>

#include <cstdlib>
#include <iostream>

namespace dynbc::diag {

int level() {
    static const int cached = [] {
        const char *env = std::getenv("DYNBC_LOG");
        if (!env)
            return 0;
        return std::atoi(env);
    }();
    return cached;
}

void log(int minLevel, const std::string &line) {
    if (level() >= minLevel)
        std::cerr << "dynbc: " << line << '\n';
}

} // namespace dynbc::diag
