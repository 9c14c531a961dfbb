// Copyright 2026 The ringnet Authors
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

#include <stdexcept>
#include <string>

namespace ringnet {

/// Thrown when a post-selection has no support: the quantum projection onto
/// the one-particle-per-station subspace is the zero vector, or both cyclic
/// routing products of a classical network vanish. Distinct from input
/// validation failures (std::invalid_argument) so callers can map the two to
/// different exit codes.
class PostselectionError : public std::runtime_error {
 public:
  explicit PostselectionError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace ringnet
