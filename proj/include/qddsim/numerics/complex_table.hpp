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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <utility>

#include "absl/container/flat_hash_map.h"

namespace qddsim {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-13;

namespace detail {
struct ComplexEntry {
  double re;
  double im;
  std::uint64_t seq;  // insertion order; the oldest match wins a lookup
  ComplexEntry* next = nullptr;  // next entry in the same bucket, newer
};
}  // namespace detail

/// Handle to an interned complex value. Two handles from the same table are
/// equal iff they name the same entry. ZERO and ONE are shared by every table.
class Amplitude {
 public:
  Amplitude() : entry_(&kZeroEntry) {}

  static Amplitude zero() { return Amplitude(&kZeroEntry); }
  static Amplitude one() { return Amplitude(&kOneEntry); }

  double re() const { return entry_->re; }
  double im() const { return entry_->im; }
  Complex value() const { return {entry_->re, entry_->im}; }
  double mag2() const { return entry_->re * entry_->re + entry_->im * entry_->im; }

  bool is_zero() const { return entry_ == &kZeroEntry; }
  bool is_one() const { return entry_ == &kOneEntry; }

  const void* id() const { return entry_; }

  friend bool operator==(Amplitude a, Amplitude b) { return a.entry_ == b.entry_; }
  friend bool operator!=(Amplitude a, Amplitude b) { return a.entry_ != b.entry_; }

 private:
  friend class ComplexTable;
  explicit Amplitude(const detail::ComplexEntry* e) : entry_(e) {}

  static const detail::ComplexEntry kZeroEntry;
  static const detail::ComplexEntry kOneEntry;

  const detail::ComplexEntry* entry_;
};

/// Tolerance-based interning table for complex numbers.
///
/// Values are bucketed on (round(re/tol), round(im/tol)); a lookup probes the
/// home bucket and its eight neighbours and returns the oldest entry that
/// agrees with the query within tol in both components. Because a value is
/// only inserted when no entry matches it, interning the same value twice
/// always yields the same handle. Entries are never mutated or removed while
/// the table lives.
class ComplexTable {
 public:
  explicit ComplexTable(double tolerance = kDefaultTolerance);

  ComplexTable(const ComplexTable&) = delete;
  ComplexTable& operator=(const ComplexTable&) = delete;

  double tolerance() const { return tol_; }

  /// Throws std::domain_error("non-finite amplitude") for NaN/inf input.
  Amplitude intern(double re, double im);
  Amplitude intern(Complex c) { return intern(c.real(), c.imag()); }

  Amplitude mul(Amplitude a, Amplitude b);
  Amplitude add(Amplitude a, Amplitude b);
  /// Throws std::domain_error when b is ZERO.
  Amplitude div(Amplitude a, Amplitude b);

  /// Number of interned values, including ZERO and ONE.
  std::size_t size() const { return entries_.size() + 2; }

 private:
  struct Key {
    double x;
    double y;
    bool operator==(const Key&) const = default;
    template <class H>
    friend H AbslHashValue(H h, const Key& k) {
      return H::combine(std::move(h), k.x, k.y);
    }
  };
  struct Bucket {
    detail::ComplexEntry* head = nullptr;
    detail::ComplexEntry* tail = nullptr;
  };

  double tol_;
  std::deque<detail::ComplexEntry> entries_;
  absl::flat_hash_map<Key, Bucket> buckets_;
};

}  // namespace qddsim
