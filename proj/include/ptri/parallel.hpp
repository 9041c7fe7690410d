/*
   Copyright 2026 The ptri Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PTRI_PARALLEL_HPP
#define PTRI_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace ptri {

/// 0 means "use available parallelism".
inline unsigned resolve_workers(unsigned requested) noexcept {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(begin_i, end_i, worker_index) over a contiguous partition of
/// [begin, end). Exceptions from any worker are rethrown on the caller.
template <class Body>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, unsigned workers, Body&& body) {
    workers = resolve_workers(workers);
    const std::uint64_t total = end > begin ? end - begin : 0;
    if (workers <= 1 || total < 2) {
        body(begin, end, 0u);
        return;
    }
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = begin + total * w / workers;
        const std::uint64_t hi = begin + total * (w + 1) / workers;
        threads.emplace_back([&, lo, hi, w] {
            try {
                body(lo, hi, w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

/// Sum of term(i) over [begin, end); the result does not depend on workers.
template <class Term>
std::uint64_t parallel_sum(std::uint64_t begin, std::uint64_t end, unsigned workers, Term&& term) {
    const unsigned w = resolve_workers(workers);
    std::vector<std::uint64_t> partial(w, 0);
    parallel_chunks(begin, end, w, [&](std::uint64_t lo, std::uint64_t hi, unsigned idx) {
        std::uint64_t s = 0;
        for (std::uint64_t i = lo; i < hi; ++i) s += term(i);
        partial[idx] = s;
    });
    std::uint64_t total = 0;
    for (std::uint64_t s : partial) total += s;
    return total;
}

}  // namespace ptri

#endif  // PTRI_PARALLEL_HPP
