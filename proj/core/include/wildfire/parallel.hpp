#ifndef WILDFIRE_PARALLEL_HPP_
#define WILDFIRE_PARALLEL_HPP_

#include <cstddef>
#include <memory>

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

namespace wildfire {

// Fixed-size worker pool. All parallel loops in the library go through
// for_each_range; callers must make every index write to disjoint memory so
// that results do not depend on the worker count or the chunking.
class executor {
public:
    explicit executor(int workers = 1)
    : workers_{workers < 1 ? 1 : workers}
    , arena_{std::make_unique<tbb::task_arena>(workers_)} { }

    int workers() const noexcept { return workers_; }

    template <typename Body>
    void for_each_range(std::size_t begin, std::size_t end, Body&& body) const {
        if (begin >= end) {
            return;
        }
        if (workers_ == 1) {
            body(begin, end);
            return;
        }
        arena_->execute([&] {
            tbb::parallel_for(tbb::blocked_range<std::size_t>{begin, end},
                              [&](const tbb::blocked_range<std::size_t>& r) { body(r.begin(), r.end()); });
        });
    }

    template <typename Body>
    void for_each(std::size_t begin, std::size_t end, Body&& body) const {
        for_each_range(begin, end, [&](std::size_t b, std::size_t e) {
            for (auto i = b; i < e; ++i) {
                body(i);
            }
        });
    }

private:
    int workers_;
    std::unique_ptr<tbb::task_arena> arena_;
};

inline const executor& serial_executor() {
    static const executor serial{1};
    return serial;
}

}  // namespace wildfire

#endif  // WILDFIRE_PARALLEL_HPP_
