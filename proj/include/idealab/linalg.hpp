/*
   Copyright 2026 The idealab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef IDEALAB_LINALG_HPP
#define IDEALAB_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "idealab/rings.hpp"

namespace idealab {

/// Dense row-major matrix of canonical domain values.
class Matrix {
   public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

   private:
    std::size_t rows_, cols_;
    std::vector<mpq_class> data_;
};

/// Exact solution of A x = b over Q or F_p, or nullopt when inconsistent.
///
/// Over Q the system is brought to echelon form by fraction-free (Bareiss)
/// elimination on integer rows; over F_p by modular Gauss-Jordan. Free
/// variables are set to zero, so the answer is the first consistent solution
/// in column order.
std::optional<std::vector<mpq_class>> solve(const Domain& field, const Matrix& a, std::span<const mpq_class> b);

/// Basis of {x : A x = 0}, one vector per non-pivot column of the reduced row
/// echelon form, with a 1 in that column.
std::vector<std::vector<mpq_class>> nullspace_basis(const Domain& field, const Matrix& a);

std::size_t rank(const Domain& field, const Matrix& a);

}  // namespace idealab

#endif
