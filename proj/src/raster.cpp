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

#include "idealab/raster.hpp"

#include <cctype>

#include <sstream>

namespace idealab {

namespace {
mpq_class parse_bound(std::string_view s) {
    try {
        std::string text;
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c))) text += c;
        if (text.empty() || text.find_first_not_of("-+0123456789/") != std::string::npos) throw std::invalid_argument(text);
        if (text.front() == '+') text.erase(0, 1);
        mpq_class v(text);
        if (v.get_den() == 0) throw std::invalid_argument(text);
        v.canonicalize();
        return v;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::DegenerateWindow, "bad window bound '" + std::string(s) + "'");
    }
}

std::pair<mpq_class, mpq_class> parse_range(std::string_view s) {
    const auto colon = s.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorKind::DegenerateWindow, "range '" + std::string(s) + "' needs lo:hi");
    return {parse_bound(s.substr(0, colon)), parse_bound(s.substr(colon + 1))};
}
}  // namespace

Window Window::parse(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw Error(ErrorKind::DegenerateWindow, "window '" + std::string(text) + "' needs xmin:xmax,ymin:ymax");
    auto [x0, x1] = parse_range(text.substr(0, comma));
    auto [y0, y1] = parse_range(text.substr(comma + 1));
    if (x0 >= x1 || y0 >= y1) throw Error(ErrorKind::DegenerateWindow, "window '" + std::string(text) + "' has empty interior");
    return {x0, x1, y0, y1};
}

std::size_t RasterGrid::marked_count() const {
    std::size_t n = 0;
    for (const auto& row : cells_)
        for (bool b : row) n += b;
    return n;
}

std::vector<std::pair<std::size_t, std::size_t>> RasterGrid::cells_containing(const mpq_class& x, const mpq_class& y) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const mpq_class dx = (window_.xmax - window_.xmin) / cols_;
    const mpq_class dy = (window_.ymax - window_.ymin) / rows_;
    for (std::size_t r = 0; r < rows_; ++r) {
        const mpq_class top = window_.ymax - dy * r;
        const mpq_class bottom = top - dy;
        if (y < bottom || y > top) continue;
        for (std::size_t c = 0; c < cols_; ++c) {
            const mpq_class left = window_.xmin + dx * c;
            if (x >= left && x <= left + dx) out.emplace_back(r, c);
        }
    }
    return out;
}

std::vector<std::string> RasterGrid::ascii_rows() const {
    std::vector<std::string> out;
    for (const auto& row : cells_) {
        std::string line;
        for (bool b : row) line += b ? '#' : '.';
        out.push_back(std::move(line));
    }
    return out;
}

std::string RasterGrid::ascii() const {
    std::string out;
    for (const auto& line : ascii_rows()) out += line + "\n";
    return out;
}

std::string RasterGrid::svg() const {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << cols_ << ' ' << rows_ << "\" width=\""
       << cols_ * 8 << "\" height=\"" << rows_ * 8 << "\">\n";
    os << "<rect width=\"" << cols_ << "\" height=\"" << rows_ << "\" fill=\"white\"/>\n";
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (cells_[r][c]) os << "<rect x=\"" << c << "\" y=\"" << r << "\" width=\"1\" height=\"1\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

RasterGrid raster_plane_curve(const Polynomial& f, const Window& w, std::size_t cols, std::size_t rows) {
    if (f.ring()->arity() != 2) throw Error(ErrorKind::NotBivariate, "plane curves need exactly two variables");
    const DomainKind k = f.domain().kind();
    if (k != DomainKind::Rationals && k != DomainKind::Integers)
        throw Error(ErrorKind::UnsupportedDomain, "plotting needs rational coefficients, got " + f.domain().name());
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial vanishes everywhere");
    if (cols < 2 || rows < 2) throw Error(ErrorKind::DegenerateWindow, "resolution must be at least 2x2");
    if (w.xmin >= w.xmax || w.ymin >= w.ymax) throw Error(ErrorKind::DegenerateWindow, "window has empty interior");

    const Domain q = Domain::rationals();
    const mpq_class dx = (w.xmax - w.xmin) / cols;
    const mpq_class dy = (w.ymax - w.ymin) / rows;

    // sign[j][i] at corner (xmin + i*dx, ymax - j*dy).
    std::vector<std::vector<int>> sign(rows + 1, std::vector<int>(cols + 1));
    std::vector<RingElement> pt{RingElement::zero(q), RingElement::zero(q)};
    for (std::size_t j = 0; j <= rows; ++j) {
        pt[1] = RingElement(q, w.ymax - dy * j);
        for (std::size_t i = 0; i <= cols; ++i) {
            pt[0] = RingElement(q, w.xmin + dx * i);
            sign[j][i] = sgn(evaluate(f, pt).value());
        }
    }

    RasterGrid grid(w, cols, rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const int s[4] = {sign[r][c], sign[r][c + 1], sign[r + 1][c], sign[r + 1][c + 1]};
            const bool all_pos = s[0] > 0 && s[1] > 0 && s[2] > 0 && s[3] > 0;
            const bool all_neg = s[0] < 0 && s[1] < 0 && s[2] < 0 && s[3] < 0;
            grid.mark(r, c, !all_pos && !all_neg);
        }
    }
    return grid;
}

}  // namespace idealab
