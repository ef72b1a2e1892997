// Copyright 2026 The qddsim Authors
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

#include "qddsim/numerics/complex_table.hpp"

#include <cmath>
#include <stdexcept>

namespace qddsim {

const detail::ComplexEntry Amplitude::kZeroEntry{0.0, 0.0, 0};
const detail::ComplexEntry Amplitude::kOneEntry{1.0, 0.0, 1};

ComplexTable::ComplexTable(double tolerance) : tol_(tolerance) {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw std::invalid_argument("tolerance must be a positive finite number");
  }
}

Amplitude ComplexTable::intern(double re, double im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw std::domain_error("non-finite amplitude");
  }
  // ZERO and ONE are the two oldest entries, so they win whenever they match.
  if (std::abs(im) <= tol_) {
    if (std::abs(re) <= tol_) return Amplitude::zero();
    if (std::abs(re - 1.0) <= tol_) return Amplitude::one();
  }
  const Key home{std::round(re / tol_), std::round(im / tol_)};
  const detail::ComplexEntry* best = nullptr;
  for (int dx = -1; dx <= 1; ++dx) {
    for (int dy = -1; dy <= 1; ++dy) {
      auto it = buckets_.find(Key{home.x + dx, home.y + dy});
      if (it == buckets_.end()) continue;
      for (const auto* e = it->second.head; e != nullptr; e = e->next) {
        if (best != nullptr && e->seq >= best->seq) break;  // chains are in insertion order
        if (std::abs(e->re - re) <= tol_ && std::abs(e->im - im) <= tol_) {
          best = e;
          break;
        }
      }
    }
  }
  if (best != nullptr) return Amplitude(best);
  auto& fresh = entries_.emplace_back(detail::ComplexEntry{re, im, entries_.size() + 2});
  Bucket& b = buckets_[home];
  (b.tail != nullptr ? b.tail->next : b.head) = &fresh;
  b.tail = &fresh;
  return Amplitude(&fresh);
}

Amplitude ComplexTable::mul(Amplitude a, Amplitude b) {
  if (a.is_zero() || b.is_zero()) return Amplitude::zero();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return intern(a.value() * b.value());
}

Amplitude ComplexTable::add(Amplitude a, Amplitude b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return intern(a.value() + b.value());
}

Amplitude ComplexTable::div(Amplitude a, Amplitude b) {
  if (b.is_zero()) throw std::domain_error("division by zero amplitude");
  if (a.is_zero()) return Amplitude::zero();
  if (b.is_one()) return a;
  if (a == b) return Amplitude::one();
  return intern(a.value() / b.value());
}

}  // namespace qddsim
