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

#include "nucsim/parallel.h"

#include <algorithm>
#include <stdexcept>

namespace nucsim {

namespace {

std::pair<size_t, size_t> block(size_t n, size_t parts, size_t k) {
    size_t base = n / parts;
    size_t extra = n % parts;
    size_t begin = k * base + std::min(k, extra);
    size_t end = begin + base + (k < extra ? 1 : 0);
    return {begin, end};
}

}  // namespace

WorkerPool::WorkerPool(size_t num_threads) {
    if (num_threads == 0) {
        throw std::invalid_argument("WorkerPool needs at least one thread.");
    }
    for (size_t k = 1; k < num_threads; k++) {
        workers_.emplace_back([this, k] { worker_loop(k); });
    }
}

WorkerPool::~WorkerPool() {
    {
        std::lock_guard<std::mutex> lock(mu_);
        stop_ = true;
    }
    start_cv_.notify_all();
    for (auto &t : workers_) {
        t.join();
    }
}

void WorkerPool::parallel_for(size_t n, const std::function<void(size_t, size_t)> &body) {
    if (workers_.empty() || n < 2) {
        body(0, n);
        return;
    }
    {
        std::lock_guard<std::mutex> lock(mu_);
        body_ = &body;
        range_ = n;
        pending_ = workers_.size();
        generation_++;
    }
    start_cv_.notify_all();
    auto [b, e] = block(n, num_threads(), 0);
    body(b, e);
    std::unique_lock<std::mutex> lock(mu_);
    done_cv_.wait(lock, [this] { return pending_ == 0; });
    body_ = nullptr;
}

void WorkerPool::worker_loop(size_t worker_index) {
    size_t seen = 0;
    for (;;) {
        const std::function<void(size_t, size_t)> *body;
        size_t n;
        {
            std::unique_lock<std::mutex> lock(mu_);
            start_cv_.wait(lock, [&] { return stop_ || generation_ != seen; });
            if (stop_) {
                return;
            }
            seen = generation_;
            body = body_;
            n = range_;
        }
        auto [b, e] = block(n, num_threads(), worker_index);
        if (b < e) {
            (*body)(b, e);
        }
        {
            std::lock_guard<std::mutex> lock(mu_);
            pending_--;
        }
        done_cv_.notify_one();
    }
}

double pairwise_sum(std::vector<double> values) {
    if (values.empty()) {
        return 0.0;
    }
    size_t n = values.size();
    while (n > 1) {
        size_t half = (n + 1) / 2;
        for (size_t k = 0; k < n / 2; k++) {
            values[k] = values[2 * k] + values[2 * k + 1];
        }
        if (n % 2 == 1) {
            values[n / 2] = values[n - 1];
        }
        n = half;
    }
    return values[0];
}

}  // namespace nucsim
