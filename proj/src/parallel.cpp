#include "linkhel/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace linkhel {

namespace {

std::atomic<int> g_override{0};

int env_threads() {
    const char* raw = std::getenv("LINKHEL_THREADS");
    if (raw == nullptr) return 0;
    try {
        return std::max(0, std::stoi(raw));
    } catch (const std::exception&) {
        return 0;
    }
}

}  // namespace

int thread_count() {
    if (const int forced = g_override.load(); forced > 0) return forced;
    if (const int env = env_threads(); env > 0) return env;
    return std::max(1u, std::thread::hardware_concurrency());
}

void set_thread_count(int n) { g_override.store(std::max(0, n)); }

void parallel_for(int begin, int end, const std::function<void(int, int)>& body) {
    const int total = end - begin;
    if (total <= 0) return;
    const int workers = std::min(thread_count(), total);
    if (workers <= 1) {
        body(begin, end);
        return;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    const int chunk = (total + workers - 1) / workers;
    {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers - 1));
        for (int w = 1; w < workers; ++w) {
            const int lo = begin + w * chunk;
            const int hi = std::min(end, lo + chunk);
            if (lo >= hi) continue;
            pool.emplace_back([&body, &errors, w, lo, hi] {
                try {
                    body(lo, hi);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
        try {
            body(begin, std::min(end, begin + chunk));
        } catch (...) {
            errors[0] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 32) {
        double acc = 0.0;
        for (double v : values) acc += v;
        return acc;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace linkhel
