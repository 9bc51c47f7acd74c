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

#ifndef SCANFORGE_KERNELS_H
#define SCANFORGE_KERNELS_H

#include <algorithm>
#include <bit>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "scanforge/store.h"

namespace scanforge {

/// Exact ceil(log2(l)); 0 for l <= 1.
constexpr std::size_t ceil_log2(std::size_t l) {
    return l <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(l - 1));
}

/// Exact floor(log2(l)) for l >= 1.
constexpr std::size_t floor_log2(std::size_t l) {
    return static_cast<std::size_t>(std::bit_width(l)) - 1;
}

namespace detail {

// y[dst] = y[src] + y[dst]. The two reads are sequenced left then right so
// instrumented stores observe them in that order.
template <ScanStore S, typename Op>
void combine_into(S &y, Op &op, std::size_t src, std::size_t dst) {
    auto left = y.get(src);
    auto right = y.get(dst);
    y.put(dst, op(std::move(left), std::move(right)));
}

}  // namespace detail

template <ScanStore S, typename Op>
S &scan_serial(S &y, Op &&op) {
    for (std::size_t i = 2; i <= y.length(); ++i) {
        detail::combine_into(y, op, i - 1, i);
    }
    return y;
}

/// Fixed-width Brent-Kung network for exactly eight elements.
template <ScanStore S, typename Op>
S &scan_brent_kung_8(S &y, Op &&op) {
    if (y.length() != 8) {
        throw std::invalid_argument("length 8 only");
    }
    for (std::size_t i : {2, 4, 6, 8}) detail::combine_into(y, op, i - 1, i);
    for (std::size_t i : {4, 8}) detail::combine_into(y, op, i - 2, i);
    for (std::size_t i : {8}) detail::combine_into(y, op, i - 4, i);
    for (std::size_t i : {6}) detail::combine_into(y, op, i - 2, i);
    for (std::size_t i : {3, 5, 7}) detail::combine_into(y, op, i - 1, i);
    return y;
}

/// Brent-Kung scan for any length: a reduce tree followed by a broadcast
/// tree. Non-power-of-two lengths are handled by clipping every row at
/// min(l, 2^k); no padding.
template <ScanStore S, typename Op>
S &scan_brent_kung(S &y, Op &&op) {
    const std::size_t l = y.length();
    const std::size_t k = ceil_log2(l);
    const std::size_t bound = std::min(l, std::size_t{1} << k);
    // The "reduce" tree
    for (std::size_t j = 1; j <= k; ++j) {
        const std::size_t step = std::size_t{1} << j;
        for (std::size_t i = step; i <= bound; i += step) {
            detail::combine_into(y, op, i - step / 2, i);
        }
    }
    // The "broadcast" tree
    for (std::size_t j = k > 0 ? k - 1 : 0; j >= 1; --j) {
        const std::size_t step = std::size_t{1} << j;
        for (std::size_t i = 3 * (step / 2); i <= bound; i += step) {
            detail::combine_into(y, op, i - step / 2, i);
        }
    }
    return y;
}

namespace detail {

// A contiguous window [offset+1, offset+len] of another store.
template <ScanStore S>
class SubrangeStore {
   public:
    SubrangeStore(S &base, std::size_t offset, std::size_t len) : base_(base), offset_(offset), len_(len) {
    }
    std::size_t length() const {
        return len_;
    }
    auto get(std::size_t i) {
        check_index(i, len_);
        return base_.get(offset_ + i);
    }
    template <typename V>
    void put(std::size_t i, V &&v) {
        check_index(i, len_);
        base_.put(offset_ + i, std::forward<V>(v));
    }

   private:
    S &base_;
    std::size_t offset_;
    std::size_t len_;
};

// 1-based inclusive index range of a chunk in the underlying store.
struct ChunkRef {
    std::size_t lo;
    std::size_t hi;
    std::size_t size() const {
        return hi - lo + 1;
    }
};

struct ChunkOffset {
    ChunkRef left;
    ChunkRef right;
};

// Views a store as a sequence of chunks. Reading a chunk yields a reference;
// combining two references defers the work until `put`, which then applies
// `left[end] + right[i]` element by element against the underlying store.
// This is chunk_combine evaluated in place, so every element update is still
// a single two-read transaction.
template <ScanStore S, typename Op>
class ChunkSequence {
   public:
    ChunkSequence(S &base, Op &op, std::size_t chunk_size)
        : base_(base), op_(op), chunk_size_(chunk_size),
          count_(base.length() == 0 ? 0 : (base.length() + chunk_size - 1) / chunk_size) {
    }

    std::size_t length() const {
        return count_;
    }

    ChunkRef get(std::size_t c) const {
        check_index(c, count_);
        return ref(c);
    }

    void put(std::size_t c, const ChunkOffset &v) {
        check_index(c, count_);
        ChunkRef target = ref(c);
        if (target.size() != v.right.size()) {
            throw std::logic_error("chunk offset applied to a chunk of different size");
        }
        for (std::size_t p = 0; p < target.size(); ++p) {
            auto left = base_.get(v.left.hi);
            auto right = base_.get(v.right.lo + p);
            base_.put(target.lo + p, op_(std::move(left), std::move(right)));
        }
    }

   private:
    ChunkRef ref(std::size_t c) const {
        std::size_t lo = (c - 1) * chunk_size_ + 1;
        return {lo, std::min(lo + chunk_size_ - 1, base_.length())};
    }

    S &base_;
    Op &op_;
    std::size_t chunk_size_;
    std::size_t count_;
};

}  // namespace detail

/// Scan-then-fan: split into ceil(n/chunks)-sized chunks, scan each chunk
/// serially, then run the Brent-Kung network over the chunks with the chunk
/// offset operator (`a[end] .+ b`).
template <ScanStore S, typename Op>
S &scan_then_fan(S &y, Op &&op, std::size_t chunks) {
    if (chunks < 1) {
        throw std::invalid_argument("scan_then_fan needs chunks >= 1");
    }
    const std::size_t n = y.length();
    if (n == 0) {
        return y;
    }
    const std::size_t chunk_size = (n + chunks - 1) / chunks;
    for (std::size_t lo = 0; lo < n; lo += chunk_size) {
        detail::SubrangeStore<S> chunk(y, lo, std::min(chunk_size, n - lo));
        scan_serial(chunk, op);
    }
    detail::ChunkSequence<S, std::remove_reference_t<Op>> sequence(y, op, chunk_size);
    scan_brent_kung(sequence, [](detail::ChunkRef a, detail::ChunkRef b) { return detail::ChunkOffset{a, b}; });
    return y;
}

// Kernel function objects. Each is generic over store and operator so one
// instance can be driven with values, traces, intervals or futures.

struct SerialKernel {
    std::string name() const {
        return "serial";
    }
    template <ScanStore S, typename Op>
    S &operator()(S &y, Op &&op) const {
        return scan_serial(y, std::forward<Op>(op));
    }
};

struct BrentKungKernel {
    std::string name() const {
        return "brent-kung";
    }
    template <ScanStore S, typename Op>
    S &operator()(S &y, Op &&op) const {
        return scan_brent_kung(y, std::forward<Op>(op));
    }
};

struct BrentKung8Kernel {
    std::string name() const {
        return "brent-kung-8";
    }
    template <ScanStore S, typename Op>
    S &operator()(S &y, Op &&op) const {
        return scan_brent_kung_8(y, std::forward<Op>(op));
    }
};

struct ScanThenFanKernel {
    std::size_t chunks = 2;
    std::string name() const {
        return "scan-then-fan";
    }
    template <ScanStore S, typename Op>
    S &operator()(S &y, Op &&op) const {
        return scan_then_fan(y, std::forward<Op>(op), chunks);
    }
};

using Kernel = std::variant<SerialKernel, BrentKungKernel, BrentKung8Kernel, ScanThenFanKernel>;

inline const std::vector<std::string> &kernel_names() {
    static const std::vector<std::string> names{"serial", "brent-kung", "brent-kung-8", "scan-then-fan"};
    return names;
}

/// Throws std::invalid_argument for unknown names.
Kernel kernel_by_name(std::string_view name, std::size_t chunks = 2);

inline std::string kernel_name(const Kernel &k) {
    return std::visit([](const auto &kernel) { return kernel.name(); }, k);
}

/// True for kernels that only accept one length (brent-kung-8).
inline bool is_fixed_width(const Kernel &k) {
    return std::holds_alternative<BrentKung8Kernel>(k);
}

template <ScanStore S, typename Op>
S &apply_kernel(const Kernel &k, S &y, Op &&op) {
    return std::visit([&](const auto &kernel) -> S & { return kernel(y, op); }, k);
}

}  // namespace scanforge

#endif
