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

#include "idealab/linalg.hpp"

#include <cstdint>
#include <utility>

namespace idealab {

namespace {

void require_field(const Domain& d) {
    if (!d.is_field()) throw Error(ErrorKind::UnsupportedDomain, "linear algebra needs a field, got " + d.name());
    if (d.kind() == DomainKind::PrimeField && !d.modulus().fits_ulong_p())
        throw Error(ErrorKind::UnsupportedDomain, "prime " + d.modulus().get_str() + " exceeds 64 bits");
}

// Reduced row echelon form over F_p, p < 2^64.
class ModularRref {
   public:
    ModularRref(std::uint64_t p, std::size_t cols) : p_(p), cols_(cols) {}

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (p_ - b); }
    std::uint64_t inv(std::uint64_t a) const {
        std::uint64_t result = 1, base = a, e = p_ - 2;
        while (e) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    // Reduces `m` (rows x cols_) in place, considering only the first
    // `eliminate_cols` columns for pivots. Returns pivot columns.
    std::vector<std::size_t> reduce(std::vector<std::vector<std::uint64_t>>& m, std::size_t eliminate_cols) const {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < eliminate_cols && r < m.size(); ++c) {
            std::size_t sel = r;
            while (sel < m.size() && m[sel][c] == 0) ++sel;
            if (sel == m.size()) continue;
            std::swap(m[sel], m[r]);
            const std::uint64_t pinv = inv(m[r][c]);
            for (std::size_t j = c; j < cols_; ++j) m[r][j] = mul(m[r][j], pinv);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (i == r || m[i][c] == 0) continue;
                const std::uint64_t f = m[i][c];
                for (std::size_t j = c; j < cols_; ++j)
                    if (m[r][j]) m[i][j] = sub(m[i][j], mul(f, m[r][j]));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

   private:
    std::uint64_t p_;
    std::size_t cols_;
};

std::vector<std::vector<std::uint64_t>> to_modular(const Matrix& a, std::span<const mpq_class> extra_col, std::uint64_t p) {
    auto residue = [p](const mpq_class& v) { return mpz_fdiv_ui(v.get_num_mpz_t(), p); };
    std::vector<std::vector<std::uint64_t>> m(a.rows(), std::vector<std::uint64_t>(a.cols() + (extra_col.empty() ? 0 : 1)));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = residue(a(i, j));
        if (!extra_col.empty()) m[i][a.cols()] = residue(extra_col[i]);
    }
    return m;
}

// Reduced row echelon form over Q with rational arithmetic; used for
// nullspaces and ranks.
std::vector<std::size_t> rational_rref(std::vector<std::vector<mpq_class>>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t sel = r;
        while (sel < m.size() && sgn(m[sel][c]) == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[r]);
        const mpq_class piv = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= piv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            const mpq_class f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::optional<std::vector<mpq_class>> solve_bareiss(const Matrix& a, std::span<const mpq_class> b) {
    const std::size_t rows = a.rows(), cols = a.cols();
    // Integer augmented matrix: each row scaled by the lcm of its denominators.
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = b[i].get_den();
        for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
        m[i][cols] = b[i].get_num() * (l / b[i].get_den());
    }

    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j <= cols; ++j) {
                m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt;

    std::vector<mpq_class> x(cols);
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t c = pivots[k];
        mpq_class acc(m[k][cols]);
        for (std::size_t j = c + 1; j < cols; ++j)
            if (m[k][j] != 0 && sgn(x[j]) != 0) acc -= mpq_class(m[k][j]) * x[j];
        x[c] = acc / mpq_class(m[k][c]);
    }
    return x;
}

}  // namespace

std::optional<std::vector<mpq_class>> solve(const Domain& field, const Matrix& a, std::span<const mpq_class> b) {
    require_field(field);
    if (b.size() != a.rows()) throw Error(ErrorKind::OutOfRange, "right-hand side length does not match matrix rows");
    if (field.kind() == DomainKind::Rationals) return solve_bareiss(a, b);

    const std::uint64_t p = field.modulus().get_ui();
    ModularRref rref(p, a.cols() + 1);
    auto m = to_modular(a, b, p);
    if (m.empty()) return std::vector<mpq_class>(a.cols());
    auto pivots = rref.reduce(m, a.cols());
    for (std::size_t i = pivots.size(); i < m.size(); ++i)
        if (m[i][a.cols()] != 0) return std::nullopt;
    std::vector<mpq_class> x(a.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = mpq_class(mpz_class(m[k][a.cols()]));
    return x;
}

std::vector<std::vector<mpq_class>> nullspace_basis(const Domain& field, const Matrix& a) {
    require_field(field);
    const std::size_t cols = a.cols();
    std::vector<std::vector<mpq_class>> basis;
    std::vector<std::size_t> pivots;
    std::vector<std::vector<mpq_class>> reduced;

    if (field.kind() == DomainKind::Rationals) {
        reduced.assign(a.rows(), std::vector<mpq_class>(cols));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) reduced[i][j] = a(i, j);
        pivots = rational_rref(reduced, cols);
    } else {
        ModularRref rref(field.modulus().get_ui(), cols);
        auto m = to_modular(a, {}, field.modulus().get_ui());
        pivots = rref.reduce(m, cols);
        reduced.assign(pivots.size(), std::vector<mpq_class>(cols));
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) reduced[i][j] = mpq_class(mpz_class(m[i][j]));
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpq_class> v(cols);
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = field.neg(field.reduce(reduced[k][f]));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const Domain& field, const Matrix& a) {
    require_field(field);
    if (field.kind() == DomainKind::Rationals) {
        std::vector<std::vector<mpq_class>> m(a.rows(), std::vector<mpq_class>(a.cols()));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
        return rational_rref(m, a.cols()).size();
    }
    ModularRref rref(field.modulus().get_ui(), a.cols());
    auto m = to_modular(a, {}, field.modulus().get_ui());
    return rref.reduce(m, a.cols()).size();
}

}  // namespace idealab
