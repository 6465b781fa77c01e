#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hofa {

/// Budgets are maximum term counts, never wall time.
inline constexpr std::int64_t kDefaultBudget = std::int64_t{1} << 26;

/// Thrown when an exact routine would exceed its term budget. Exact
/// routines refuse rather than silently sample.
class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Checks base^exponent <= budget without overflowing; throws BudgetExceeded
/// otherwise. Returns base^exponent, which then fits in int64.
std::int64_t checked_pow(std::int64_t base, int exponent, std::int64_t budget,
                         const std::string& context);

/// Caps the number of worker threads used by parallel reductions.
/// 0 restores the default (hardware concurrency).
void set_max_threads(unsigned n);
unsigned max_threads();

/// Splits [0, n) into fixed-size blocks, maps each block with `block_fn`
/// (signature R(int64 begin, int64 end)) and combines the block results in
/// block order with `combine` (signature void(R&, R&&)). Block boundaries
/// depend only on n and block_size, so the result is identical for every
/// thread count.
template <typename R, typename BlockFn, typename Combine>
R parallel_map_reduce(std::int64_t n, std::int64_t block_size, R init, BlockFn&& block_fn,
                      Combine&& combine) {
    if (n <= 0) return init;
    if (block_size < 1) block_size = 1;
    const std::int64_t n_blocks = (n + block_size - 1) / block_size;
    unsigned workers = max_threads();
    if (n_blocks == 1 || workers <= 1) {
        for (std::int64_t b = 0; b < n_blocks; ++b) {
            std::int64_t lo = b * block_size;
            std::int64_t hi = std::min(n, lo + block_size);
            combine(init, block_fn(lo, hi));
        }
        return init;
    }
    std::vector<R> partial(static_cast<std::size_t>(n_blocks), init);
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::int64_t b = next.fetch_add(1);
            if (b >= n_blocks) return;
            std::int64_t lo = b * block_size;
            std::int64_t hi = std::min(n, lo + block_size);
            partial[static_cast<std::size_t>(b)] = block_fn(lo, hi);
        }
    };
    std::vector<std::thread> pool;
    unsigned launch = std::min<unsigned>(workers, static_cast<unsigned>(n_blocks));
    pool.reserve(launch);
    for (unsigned i = 0; i < launch; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (std::int64_t b = 0; b < n_blocks; ++b) combine(init, std::move(partial[static_cast<std::size_t>(b)]));
    return init;
}

}  // namespace hofa
