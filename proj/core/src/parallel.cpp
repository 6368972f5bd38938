#include "vad/parallel.hpp"

#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>
#include <vector>

namespace vad {

namespace {

std::atomic<int> g_thread_cap{0};

int effective_threads() {
    const int cap = g_thread_cap.load(std::memory_order_relaxed);
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    return cap > 0 ? std::min(cap, 256) : hw;
}

// Lazy pool of detached workers fed through a shared job slot. Jobs are
// range-chunk callbacks; the submitting thread participates as chunk 0.
class Pool {
  public:
    static Pool& instance() {
        static Pool pool;
        return pool;
    }

    void run(int chunks, const std::function<void(int)>& chunk_fn) {
        std::unique_lock<std::mutex> submit_lock(submit_mutex_);
        ensure_workers(chunks - 1);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            job_ = &chunk_fn;
            next_chunk_.store(1, std::memory_order_relaxed);
            pending_.store(chunks - 1, std::memory_order_relaxed);
            total_chunks_ = chunks;
            ++generation_;
        }
        cv_.notify_all();
        chunk_fn(0);
        std::unique_lock<std::mutex> lock(mutex_);
        done_cv_.wait(lock, [&] { return pending_.load(std::memory_order_acquire) == 0; });
        job_ = nullptr;
    }

  private:
    void ensure_workers(int needed) {
        std::lock_guard<std::mutex> lock(mutex_);
        while (static_cast<int>(workers_.size()) < needed) {
            workers_.emplace_back([this] { worker_loop(); });
        }
    }

    void worker_loop() {
        std::uint64_t seen = 0;
        for (;;) {
            const std::function<void(int)>* job = nullptr;
            int chunk = -1;
            {
                std::unique_lock<std::mutex> lock(mutex_);
                cv_.wait(lock, [&] { return generation_ != seen && job_ != nullptr; });
                const int c = next_chunk_.fetch_add(1, std::memory_order_relaxed);
                if (c >= total_chunks_) {
                    seen = generation_;
                    continue;
                }
                chunk = c;
                job = job_;
            }
            (*job)(chunk);
            if (pending_.fetch_sub(1, std::memory_order_acq_rel) == 1) {
                std::lock_guard<std::mutex> lock(mutex_);
                done_cv_.notify_all();
            }
        }
    }

    std::mutex submit_mutex_;
    std::mutex mutex_;
    std::condition_variable cv_;
    std::condition_variable done_cv_;
    std::vector<std::thread> workers_;
    const std::function<void(int)>* job_ = nullptr;
    std::atomic<int> next_chunk_{0};
    std::atomic<int> pending_{0};
    int total_chunks_ = 0;
    std::uint64_t generation_ = 0;

    Pool() = default;
    ~Pool() = default; // workers are leaked at process exit by design of a static pool
};

} // namespace

void set_thread_count(int n) { g_thread_cap.store(n, std::memory_order_relaxed); }

int thread_count() { return effective_threads(); }

namespace {
thread_local bool t_inside_parallel = false;
}

void parallel_ranges(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    if (t_inside_parallel) { // no nested pool jobs
        fn(0, n);
        return;
    }
    const int workers = effective_threads();
    const std::size_t min_grain = 1024;
    int chunks = workers;
    if (n < min_grain * static_cast<std::size_t>(workers)) {
        chunks = static_cast<int>((n + min_grain - 1) / min_grain);
    }
    if (chunks <= 1) {
        fn(0, n);
        return;
    }
    auto chunk_fn = [&](int c) {
        t_inside_parallel = true;
        const std::size_t begin = n * static_cast<std::size_t>(c) / static_cast<std::size_t>(chunks);
        const std::size_t end = n * static_cast<std::size_t>(c + 1) / static_cast<std::size_t>(chunks);
        if (begin < end) fn(begin, end);
        t_inside_parallel = false;
    };
    Pool::instance().run(chunks, chunk_fn);
}

double ordered_sum(const std::vector<double>& items) {
    double total = 0.0;
    for (double v : items) total += v;
    return total;
}

} // namespace vad
