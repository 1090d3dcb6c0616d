// Copyright 2026 The eon-spectra Authors
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

#ifndef EON_RANDOM_H_
#define EON_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace eon {

// Every stochastic operation draws from an explicitly passed stream.
using Rng = std::mt19937_64;

// SplitMix64 finalizer.
std::uint64_t SplitMix64(std::uint64_t x);

// Folds the parts left to right: h = SplitMix64(h ^ SplitMix64(part)),
// starting from h = 0. Order-sensitive.
std::uint64_t MixSeed(std::initializer_list<std::uint64_t> parts);

// FNV-1a, used to turn scenario names into stable seed components.
std::uint64_t StableHash(std::string_view text);

// Independent sub-streams of one replication.
enum class StreamTag : std::uint64_t {
  kTraffic = 1,
  kRouting = 2,
};

Rng MakeStream(std::uint64_t replication_seed, StreamTag tag);

}  // namespace eon

#endif  // EON_RANDOM_H_
