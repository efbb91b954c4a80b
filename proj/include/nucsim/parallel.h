// Copyright 2026 The nucsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace nucsim {

/// Fixed set of worker threads that split an index range [0, n) into
/// contiguous blocks, one per thread, and join before returning. The caller
/// thread takes block 0.
class WorkerPool {
   public:
    explicit WorkerPool(size_t num_threads);
    ~WorkerPool();
    WorkerPool(const WorkerPool &) = delete;
    WorkerPool &operator=(const WorkerPool &) = delete;

    size_t num_threads() const { return workers_.size() + 1; }

    /// Invokes body(begin, end) over disjoint blocks covering [0, n).
    void parallel_for(size_t n, const std::function<void(size_t, size_t)> &body);

   private:
    void worker_loop(size_t worker_index);

    std::vector<std::thread> workers_;
    std::mutex mu_;
    std::condition_variable start_cv_;
    std::condition_variable done_cv_;
    const std::function<void(size_t, size_t)> *body_ = nullptr;
    size_t range_ = 0;
    size_t generation_ = 0;
    size_t pending_ = 0;
    bool stop_ = false;
};

/// Sum of `values` by a fixed-shape pairwise tree: the result depends only
/// on the input, never on how the values were produced in parallel.
double pairwise_sum(std::vector<double> values);

}  // namespace nucsim
