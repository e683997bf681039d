//
// Copyright 2026 The roleaug Authors
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
//

#ifndef ROLEAUG_RNG_H_
#define ROLEAUG_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace roleaug {

// Per-sample seed from (master seed, document id, operation, copy). Only
// integer mixing is involved, so the value is identical on every platform.
std::uint64_t DeriveSeed(std::uint64_t master_seed, std::string_view source_id,
                         std::string_view op, std::uint64_t copy_index);

// mt19937_64 is fully specified by the standard; the standard distributions
// are not, so sampling is done here on the raw 64-bit stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform over [0, n); n must be positive.
  std::size_t UniformIndex(std::size_t n);
  // Uniform over [0, 1) with 53 random bits.
  double UniformReal();
  bool Bernoulli(double p) { return UniformReal() < p; }

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[UniformIndex(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace roleaug

#endif  // ROLEAUG_RNG_H_
