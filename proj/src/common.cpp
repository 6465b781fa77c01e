#include "hofa/common.hpp"

namespace hofa {

std::int64_t checked_pow(std::int64_t base, int exponent, std::int64_t budget,
                         const std::string& context) {
    if (base < 1 || exponent < 0) throw std::invalid_argument(context + ": bad power");
    std::int64_t out = 1;
    for (int i = 0; i < exponent; ++i) {
        if (out > budget / base)
            throw BudgetExceeded(context + ": " + std::to_string(base) + "^" +
                                 std::to_string(exponent) + " exceeds budget " +
                                 std::to_string(budget));
        out *= base;
    }
    if (out > budget)
        throw BudgetExceeded(context + ": " + std::to_string(out) + " exceeds budget " +
                             std::to_string(budget));
    return out;
}

namespace {
std::atomic<unsigned> g_max_threads{0};
}

void set_max_threads(unsigned n) { g_max_threads.store(n); }

unsigned max_threads() {
    unsigned n = g_max_threads.load();
    if (n == 0) {
        n = std::thread::hardware_concurrency();
        if (n == 0) n = 1;
    }
    return n;
}

}  // namespace hofa
