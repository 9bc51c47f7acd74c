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

#ifndef SCANFORGE_MATRIX_H
#define SCANFORGE_MATRIX_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace scanforge {

/// Small dense square matrix over the integers mod 2^64 (two's-complement
/// wrapping), which keeps the product exactly associative for any inputs.
class Matrix {
   public:
    Matrix() = default;
    /// Row-major entries; throws std::invalid_argument if entries.size() != dim*dim.
    Matrix(std::size_t dim, std::vector<std::int64_t> entries);

    static Matrix identity(std::size_t dim);

    std::size_t dim() const {
        return dim_;
    }
    std::int64_t at(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    const std::vector<std::int64_t> &entries() const {
        return entries_;
    }

    /// Entries separated by single spaces, row-major.
    std::string str() const;

    friend Matrix operator*(const Matrix &a, const Matrix &b);
    bool operator==(const Matrix &) const = default;

   private:
    std::size_t dim_ = 0;
    std::vector<std::int64_t> entries_;
};

std::ostream &operator<<(std::ostream &out, const Matrix &m);

}  // namespace scanforge

#endif
