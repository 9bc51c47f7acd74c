// Copyright 2026 The ScanForge Authors
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

#ifndef SCANFORGE_STORE_H
#define SCANFORGE_STORE_H

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scanforge {

/// An indexable sequence the scan kernels operate on in place.
///
/// Indices are 1-based: valid indices are 1..length(). The length is fixed
/// for the lifetime of a scan. `get` may return a handle or placeholder
/// rather than data (see trace::TraceStore, exec::FutureStore), and `put`
/// accepts whatever the operator returns, which need not be the type `get`
/// returns.
template <typename S>
concept ScanStore = requires(S &s, const S &cs, std::size_t i) {
    { cs.length() } -> std::convertible_to<std::size_t>;
    s.get(i);
};

template <typename S>
using element_t = decltype(std::declval<S &>().get(std::size_t{1}));

inline void check_index(std::size_t i, std::size_t length) {
    if (i < 1 || i > length) {
        throw std::out_of_range(
            "index " + std::to_string(i) + " outside 1.." + std::to_string(length));
    }
}

/// Plain in-memory store.
template <typename T>
class VectorStore {
   public:
    VectorStore() = default;
    explicit VectorStore(std::vector<T> values) : values_(std::move(values)) {
    }

    std::size_t length() const {
        return values_.size();
    }

    T get(std::size_t i) const {
        check_index(i, values_.size());
        return values_[i - 1];
    }

    void put(std::size_t i, T v) {
        check_index(i, values_.size());
        values_[i - 1] = std::move(v);
    }

    const std::vector<T> &values() const {
        return values_;
    }
    std::vector<T> take() && {
        return std::move(values_);
    }

   private:
    std::vector<T> values_;
};

}  // namespace scanforge

#endif
