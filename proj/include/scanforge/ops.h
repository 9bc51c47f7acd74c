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

#ifndef SCANFORGE_OPS_H
#define SCANFORGE_OPS_H

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scanforge/interval.h"
#include "scanforge/matrix.h"

namespace scanforge {

/// A named binary operator that callers promise is associative. It is a
/// plain value passed into kernels; `combine` must be a pure function so it
/// can run concurrently on distinct operands.
template <typename T>
struct AssocOp {
    using value_type = T;

    std::string name;
    std::function<T(const T &, const T &)> combine;
    std::optional<T> identity;

    T operator()(const T &a, const T &b) const {
        return combine(a, b);
    }
};

AssocOp<std::int64_t> add_op();
AssocOp<std::int64_t> max_op();
AssocOp<double> float_add_op();
AssocOp<Matrix> matmul_op(std::size_t dim = 2);
AssocOp<std::string> concat_op();
AssocOp<verify::Interval> interval_op();

using AnyOp = std::variant<AssocOp<std::int64_t>, AssocOp<double>, AssocOp<Matrix>, AssocOp<std::string>,
                           AssocOp<verify::Interval>>;

/// All built-in operators, in a stable order. Names: add, max, fadd, matmul2,
/// matmul3, concat, interval.
const std::vector<AnyOp> &builtin_ops();

std::vector<std::string> op_names();

/// Throws std::invalid_argument listing the catalog when `name` is unknown.
const AnyOp &find_op(std::string_view name);

inline const std::string &op_name(const AnyOp &op) {
    return std::visit([](const auto &o) -> const std::string & { return o.name; }, op);
}

template <typename T>
using Triple = std::array<T, 3>;

template <typename T>
struct AssociativityReport {
    bool ok = true;
    std::optional<Triple<T>> first_violation;
};

/// Compares (a+b)+c against a+(b+c) on every sampled triple.
template <typename T, typename Op>
AssociativityReport<T> check_associative(const Op &op, std::span<const Triple<T>> samples) {
    if (samples.empty()) {
        throw std::invalid_argument("check_associative needs at least one sample");
    }
    AssociativityReport<T> report;
    for (const auto &[a, b, c] : samples) {
        if (!(op(op(a, b), c) == op(a, op(b, c)))) {
            report.ok = false;
            report.first_violation = Triple<T>{a, b, c};
            break;
        }
    }
    return report;
}

template <typename T>
AssociativityReport<T> check_associative(const AssocOp<T> &op, const std::vector<Triple<T>> &samples) {
    return check_associative<T>(op, std::span<const Triple<T>>(samples));
}

template <typename T>
using Chunk = std::vector<T>;

/// Lifts `op` to chunks: combine(A, B)[i] = op(A[last], B[i]). The result has
/// B's length. Throws std::invalid_argument when A is empty.
template <typename T>
AssocOp<Chunk<T>> chunk_combine(AssocOp<T> op) {
    AssocOp<Chunk<T>> lifted;
    lifted.name = "chunk(" + op.name + ")";
    lifted.combine = [op = std::move(op)](const Chunk<T> &a, const Chunk<T> &b) {
        if (a.empty()) {
            throw std::invalid_argument("chunk_combine: left chunk is empty");
        }
        Chunk<T> out;
        out.reserve(b.size());
        for (const auto &x : b) {
            out.push_back(op(a.back(), x));
        }
        return out;
    };
    return lifted;
}

}  // namespace scanforge

#endif
