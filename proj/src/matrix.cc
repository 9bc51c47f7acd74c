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

#include "scanforge/matrix.h"

#include <ostream>
#include <stdexcept>

namespace scanforge {

Matrix::Matrix(std::size_t dim, std::vector<std::int64_t> entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw std::invalid_argument(
            "matrix of dimension " + std::to_string(dim_) + " needs " + std::to_string(dim_ * dim_) + " entries, got " +
            std::to_string(entries_.size()));
    }
}

Matrix Matrix::identity(std::size_t dim) {
    std::vector<std::int64_t> e(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        e[i * dim + i] = 1;
    }
    return Matrix(dim, std::move(e));
}

std::string Matrix::str() const {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(entries_[i]);
    }
    return s;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.dim_ != b.dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    const std::size_t n = a.dim_;
    std::vector<std::int64_t> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                acc += static_cast<std::uint64_t>(a.at(i, k)) * static_cast<std::uint64_t>(b.at(k, j));
            }
            out[i * n + j] = static_cast<std::int64_t>(acc);
        }
    }
    return Matrix(n, std::move(out));
}

std::ostream &operator<<(std::ostream &out, const Matrix &m) {
    return out << '[' << m.str() << ']';
}

}  // namespace scanforge
