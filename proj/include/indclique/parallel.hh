#ifndef INDCLIQUE_PARALLEL_HH
#define INDCLIQUE_PARALLEL_HH

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace indclique
{
    /// Runs f(0) .. f(count-1) on up to `workers` threads. If any calls throw,
    /// the exception from the smallest index is rethrown after all workers
    /// finish, so failures do not depend on scheduling.
    template <typename F_>
    void parallel_for(unsigned count, unsigned workers, F_ && f)
    {
        if (workers <= 1 || count <= 1) {
            for (unsigned i = 0 ; i < count ; ++i)
                f(i);
            return;
        }

        std::vector<std::exception_ptr> failures(count);
        std::atomic<unsigned> next{0};
        auto body = [&] {
            for (unsigned i ; (i = next.fetch_add(1, std::memory_order_relaxed)) < count ; ) {
                try {
                    f(i);
                }
                catch (...) {
                    failures[i] = std::current_exception();
                }
            }
        };

        std::vector<std::thread> threads;
        for (unsigned t = 0 ; t < std::min(workers, count) ; ++t)
            threads.emplace_back(body);
        for (auto & t : threads)
            t.join();

        for (auto & e : failures)
            if (e)
                std::rethrow_exception(e);
    }
}

#endif
