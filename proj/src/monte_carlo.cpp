// Copyright 2026 The admlab Authors.
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

#include "admlab/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

namespace admlab {

unsigned thread_budget(unsigned requested) {
  unsigned budget = requested;
  if (budget == 0) budget = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ADMLAB_THREADS"); env != nullptr && *env != '\0') {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) budget = std::min(budget, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      // Ignored: an unparsable cap leaves the default in place.
    }
  }
  return budget;
}

void for_each_shard(unsigned shards, unsigned threads, const std::function<void(unsigned)>& fn) {
  const unsigned workers = std::min(thread_budget(threads), shards);
  if (workers <= 1) {
    for (unsigned s = 0; s < shards; ++s) fn(s);
    return;
  }
  std::atomic<unsigned> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const unsigned s = next.fetch_add(1);
        if (s >= shards || failed.load()) return;
        try {
          fn(s);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace admlab
