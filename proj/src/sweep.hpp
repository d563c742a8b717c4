// Copyright 2026 The hdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Least-index search over [0, n) shared by the valuation sweeps.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace hdec::detail {

// Returns the least i with probe(i) engaged. A probe that throws counts as a
// hit at its index, so with any thread count the caller sees exactly what a
// sequential left-to-right scan would have produced.
template <class R, class Probe>
std::optional<std::pair<std::uint64_t, R>> first_hit(std::uint64_t n, unsigned threads,
                                                     Probe&& probe) {
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{n};
  std::mutex mu;
  std::optional<std::pair<std::uint64_t, R>> result;
  std::exception_ptr error;

  auto worker = [&] {
    while (true) {
      std::uint64_t i = next.fetch_add(1);
      if (i >= n || i >= best.load()) return;
      try {
        std::optional<R> r = probe(i);
        if (!r) continue;
        std::lock_guard lock(mu);
        if (i < best.load()) {
          best = i;
          result.emplace(i, std::move(*r));
          error = nullptr;
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (i < best.load()) {
          best = i;
          result.reset();
          error = std::current_exception();
        }
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1 || n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    unsigned extra = static_cast<unsigned>(std::min<std::uint64_t>(threads, n)) - 1;
    for (unsigned t = 0; t < extra; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return result;
}

}  // namespace hdec::detail
