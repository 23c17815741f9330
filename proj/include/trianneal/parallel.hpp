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

#pragma once

#include <cstddef>
#include <functional>

namespace trianneal {

/// Worker count from TRIANNEAL_WORKERS, else hardware concurrency (>= 1).
unsigned default_workers();

/// Runs body(i) for i in [0, count) on up to `workers` threads. Indices are
/// statically chunked so results written by index are deterministic. The
/// first exception thrown by any body is rethrown on the calling thread.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& body,
                  unsigned workers = 0);

}  // namespace trianneal
