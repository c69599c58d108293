// Copyright 2026 The Volterra Lab Authors
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

#ifndef VOLTERRA_PARALLEL_HPP_
#define VOLTERRA_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace volterra {

inline std::size_t default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, count) into `workers` contiguous ranges and runs
// fn(begin, end, slot) for each, slot being the range number. Callers reduce
// the per-slot results in slot order, which keeps results independent of the
// worker count whenever the reduction is order-insensitive or tie-broken by
// index. The first exception thrown by any range is rethrown.
template <typename Fn>
void parallel_ranges(std::uint64_t count, std::size_t workers, Fn&& fn) {
  workers = std::max<std::size_t>(1, std::min<std::uint64_t>(workers, std::max<std::uint64_t>(count, 1)));
  if (workers == 1) {
    fn(std::uint64_t{0}, count, std::size_t{0});
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    std::uint64_t begin = count * w / workers;
    std::uint64_t end = count * (w + 1) / workers;
    threads.emplace_back([&, begin, end, w] {
      try {
        fn(begin, end, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace volterra

#endif  // VOLTERRA_PARALLEL_HPP_
