// Copyright 2026 The trianneal Authors
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

#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "trianneal/parallel.hpp"

using namespace trianneal;

TEST_CASE("every index runs once") {
  for (unsigned workers : {1u, 2u, 5u}) {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; }, workers);
    for (int h : hits) CHECK(h == 1);
  }
  parallel_for(0, [](std::size_t) { FAIL("no work expected"); });
}

TEST_CASE("exceptions propagate to the caller") {
  CHECK_THROWS_AS(parallel_for(
                      50, [](std::size_t i) {
                        if (i == 37) throw std::runtime_error("boom");
                      },
                      4),
                  std::runtime_error);
}

TEST_CASE("nested loops complete") {
  std::atomic<int> total{0};
  parallel_for(4, [&](std::size_t) { parallel_for(5, [&](std::size_t) { total++; }, 3); }, 2);
  CHECK(total == 20);
}

TEST_CASE("worker count from the environment") {
  setenv("TRIANNEAL_WORKERS", "3", 1);
  CHECK(default_workers() == 3);
  setenv("TRIANNEAL_WORKERS", "0", 1);
  CHECK(default_workers() >= 1);
  unsetenv("TRIANNEAL_WORKERS");
  CHECK(default_workers() >= 1);
}
