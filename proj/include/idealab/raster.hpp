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

#ifndef IDEALAB_RASTER_HPP
#define IDEALAB_RASTER_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idealab/poly.hpp"

namespace idealab {

struct Window {
    mpq_class xmin, xmax, ymin, ymax;

    /// "xmin:xmax,ymin:ymax" with integer or fraction bounds, e.g. "-2:2,-1/2:3".
    static Window parse(std::string_view text);
};

/// Marked cells of a plane curve f(x, y) = 0. Row 0 is the top (ymax) row.
class RasterGrid {
   public:
    RasterGrid(Window window, std::size_t cols, std::size_t rows)
        : window_(std::move(window)), cols_(cols), rows_(rows), cells_(rows, std::vector<bool>(cols, false)) {}

    const Window& window() const noexcept { return window_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t rows() const noexcept { return rows_; }
    bool marked(std::size_t row, std::size_t col) const { return cells_.at(row).at(col); }
    void mark(std::size_t row, std::size_t col, bool on = true) { cells_.at(row).at(col) = on; }
    std::size_t marked_count() const;

    /// Every cell whose closed rectangle contains (x, y); up to four cells
    /// when the point sits on a grid corner.
    std::vector<std::pair<std::size_t, std::size_t>> cells_containing(const mpq_class& x, const mpq_class& y) const;

    /// '#' for marked cells, '.' otherwise, one string per row from ymax down.
    std::vector<std::string> ascii_rows() const;
    std::string ascii() const;
    /// One unit square per marked cell.
    std::string svg() const;

   private:
    Window window_;
    std::size_t cols_, rows_;
    std::vector<std::vector<bool>> cells_;
};

/// Evaluates f exactly on the (cols + 1) x (rows + 1) cell corners and marks
/// a cell unless its four corner values are all > 0 or all < 0.
///
/// Curves that touch a cell without a corner sign change are missed.
RasterGrid raster_plane_curve(const Polynomial& f, const Window& window, std::size_t cols, std::size_t rows);

}  // namespace idealab

#endif
