#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace hindman::detail {

/// Deterministic work splitting: shards [0, count) run in fixed-width waves.
/// Every shard of a processed wave runs to completion no matter how many
/// workers execute it, and the stop decision between waves sees only
/// completed-wave results. Outputs and step accounting therefore do not
/// depend on the worker count or on scheduling.
inline void run_waves(std::size_t count, unsigned workers, std::size_t wave_width,
                      const std::function<void(std::size_t)>& shard_fn,
                      const std::function<bool(std::size_t processed_end)>& stop_after_wave) {
    if (wave_width == 0) wave_width = 1;
    for (std::size_t wave_start = 0; wave_start < count; wave_start += wave_width) {
        std::size_t wave_end = std::min(count, wave_start + wave_width);
        std::size_t wave_size = wave_end - wave_start;
        unsigned threads = workers == 0 ? 1u : workers;
        if (threads <= 1 || wave_size == 1) {
            for (std::size_t i = wave_start; i < wave_end; ++i) shard_fn(i);
        } else {
            std::atomic<std::size_t> next{wave_start};
            std::vector<std::thread> pool;
            unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(threads, wave_size));
            pool.reserve(spawn);
            for (unsigned t = 0; t < spawn; ++t) {
                pool.emplace_back([&] {
                    for (;;) {
                        std::size_t i = next.fetch_add(1);
                        if (i >= wave_end) return;
                        shard_fn(i);
                    }
                });
            }
            for (auto& th : pool) th.join();
        }
        if (stop_after_wave(wave_end)) return;
    }
}

}  // namespace hindman::detail
