// Copyright 2026 The ringpoa Authors
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

#ifndef RINGPOA_PARALLEL_H_
#define RINGPOA_PARALLEL_H_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace ringpoa {

// Runs fn(block, begin, end) over `jobs` contiguous blocks of [0, count).
// Block b always covers the same range for a given (count, jobs), so callers
// that merge per-block results in block order get schedule-independent
// output. The first exception thrown by any block is rethrown.
template <typename Fn>
void ForEachBlock(std::uint64_t count, int jobs, Fn&& fn) {
  const int blocks = static_cast<int>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(
                                     count, static_cast<std::uint64_t>(
                                                std::max(1, jobs)))));
  auto range = [&](int b) {
    const std::uint64_t begin = count * b / blocks;
    const std::uint64_t end = count * (b + 1) / blocks;
    return std::pair{begin, end};
  };
  if (blocks == 1) {
    fn(0, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(blocks);
  std::vector<std::thread> workers;
  workers.reserve(blocks);
  for (int b = 0; b < blocks; ++b) {
    workers.emplace_back([&, b] {
      try {
        auto [begin, end] = range(b);
        fn(b, begin, end);
      } catch (...) {
        errors[b] = std::current_exception();
      }
    });
  }
  for (std::thread& w : workers) w.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace ringpoa

#endif  // RINGPOA_PARALLEL_H_
