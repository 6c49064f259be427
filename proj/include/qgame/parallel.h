// Copyright 2026 The qgame Authors.
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

#ifndef QGAME_PARALLEL_H_
#define QGAME_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace qgame {

// Worker count: `requested` when positive, otherwise the QGAME_THREADS
// environment variable when set, otherwise the hardware concurrency. The
// environment variable also caps an explicit request.
int ResolveThreadCount(int requested);

// Calls body(i) for i in [0, n) on up to `threads` workers. Indices are
// handed out in contiguous chunks; body must only write to per-index state.
void ParallelFor(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

}  // namespace qgame

#endif  // QGAME_PARALLEL_H_
