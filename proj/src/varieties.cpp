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

#include "idealab/varieties.hpp"

#include <algorithm>

#include "idealab/linalg.hpp"

namespace idealab {

namespace {
constexpr std::uint64_t kMaxSpace = 1'000'000;
constexpr std::uint64_t kMaxEvaluationEntries = 50'000'000;

Point decode(std::uint64_t code, std::uint64_t p, std::size_t n) {
    Point x(n);
    for (std::size_t i = n; i-- > 0;) {
        x[i] = code % p;
        code /= p;
    }
    return x;
}

std::uint64_t require_prime_field(const PolyRingPtr& ring) {
    const Domain& d = ring->domain();
    if (d.kind() != DomainKind::PrimeField)
        throw Error(ErrorKind::UnsupportedDomain, "varieties are computed over F_p, got " + d.name());
    if (d.modulus() > kMaxSpace) throw Error(ErrorKind::TooLarge, "prime " + d.modulus().get_str() + " too large");
    return d.modulus().get_ui();
}

void require_matching_ring(const PointSet& x, const PolyRingPtr& ring) {
    if (require_prime_field(ring) != x.prime() || ring->arity() != x.dimension())
        throw Error(ErrorKind::DomainMismatch, "ring " + ring->domain().name() + " with " + std::to_string(ring->arity()) +
                                                   " variables does not match the point set");
}
}  // namespace

std::uint64_t space_size(std::uint64_t p, std::size_t n) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > kMaxSpace / p) throw Error(ErrorKind::TooLarge, "F_" + std::to_string(p) + "^" + std::to_string(n) + " has more than 10^6 points");
        total *= p;
    }
    return total;
}

PointSet::PointSet(std::uint64_t p, std::size_t n, std::vector<Point> points) : p_(p), n_(n), points_(std::move(points)) {
    if (!is_prime_number(mpz_class(static_cast<unsigned long>(p))))
        throw Error(ErrorKind::InvalidDomain, std::to_string(p) + " is not prime");
    if (n == 0) throw Error(ErrorKind::OutOfRange, "dimension must be positive");
    for (const auto& x : points_) {
        if (x.size() != n) throw Error(ErrorKind::OutOfRange, "point has wrong dimension");
        for (auto c : x)
            if (c >= p) throw Error(ErrorKind::OutOfRange, "coordinate " + std::to_string(c) + " outside [0, p)");
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

PointSet PointSet::all(std::uint64_t p, std::size_t n) {
    const std::uint64_t total = space_size(p, n);
    std::vector<Point> pts;
    pts.reserve(total);
    for (std::uint64_t c = 0; c < total; ++c) pts.push_back(decode(c, p, n));
    return PointSet(p, n, std::move(pts));
}

bool PointSet::contains(const Point& x) const { return std::binary_search(points_.begin(), points_.end(), x); }

bool PointSet::subset_of(const PointSet& other) const {
    return std::includes(other.points_.begin(), other.points_.end(), points_.begin(), points_.end());
}

PointSet PointSet::unite(const PointSet& other) const {
    std::vector<Point> out;
    std::set_union(points_.begin(), points_.end(), other.points_.begin(), other.points_.end(), std::back_inserter(out));
    return PointSet(p_, n_, std::move(out));
}

PointSet PointSet::intersect(const PointSet& other) const {
    std::vector<Point> out;
    std::set_intersection(points_.begin(), points_.end(), other.points_.begin(), other.points_.end(),
                          std::back_inserter(out));
    return PointSet(p_, n_, std::move(out));
}

PolyRingPtr point_ring(std::uint64_t p, std::size_t n) {
    std::vector<std::string> vars;
    if (n <= 3) {
        vars.assign({"x", "y", "z"});
        vars.resize(n);
    } else {
        for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    }
    return make_ring(Domain::prime_field(static_cast<unsigned long>(p)), std::move(vars));
}

PointSet variety(const IdealPresentation& s) {
    const std::uint64_t p = require_prime_field(s.ring());
    const std::size_t n = s.ring()->arity();
    const std::uint64_t total = space_size(p, n);
    std::vector<Point> pts;
    for (std::uint64_t c = 0; c < total; ++c) {
        Point x = decode(c, p, n);
        const bool zero = std::all_of(s.generators().begin(), s.generators().end(),
                                      [&](const Polynomial& g) { return evaluate_residues(g, x) == 0; });
        if (zero) pts.push_back(std::move(x));
    }
    return PointSet(p, n, std::move(pts));
}

bool vanishes_on(const Polynomial& f, const PointSet& x) {
    return std::all_of(x.points().begin(), x.points().end(), [&](const Point& pt) { return evaluate_residues(f, pt) == 0; });
}

IdealPresentation VanishingIdealResult::presentation(const PolyRingPtr& ring) const {
    std::vector<Polynomial> all = generators;
    all.insert(all.end(), field_equations.begin(), field_equations.end());
    return IdealPresentation(ring, std::move(all));
}

VanishingIdealResult vanishing_ideal(const PointSet& x, const PolyRingPtr& ring) {
    require_matching_ring(x, ring);
    const std::uint64_t p = x.prime();
    const std::size_t n = x.dimension();
    const std::uint64_t total = space_size(p, n);
    if (x.size() > 0 && total > kMaxEvaluationEntries / x.size())
        throw Error(ErrorKind::TooLarge, "evaluation matrix too large");

    // Reduced monomials in ascending graded-lex order, so pivots land on the
    // small monomials and each generator is a free monomial plus lower terms.
    std::vector<Monomial> monos;
    monos.reserve(total);
    for (std::uint64_t c = 0; c < total; ++c) {
        Point e = decode(c, p, n);
        monos.emplace_back(e.begin(), e.end());
    }
    std::sort(monos.begin(), monos.end(),
              [](const Monomial& a, const Monomial& b) { return compare(a, b, MonomialOrder::GradedLexicographic) < 0; });

    Matrix m(x.size(), monos.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Point& pt = x.points()[i];
        for (std::size_t j = 0; j < monos.size(); ++j) {
            std::uint64_t v = 1;
            for (std::size_t k = 0; k < n; ++k)
                for (std::uint32_t e = 0; e < monos[j][k]; ++e) v = v * pt[k] % p;
            m(i, j) = mpq_class(static_cast<unsigned long>(v));
        }
    }

    VanishingIdealResult out;
    for (auto& v : nullspace_basis(ring->domain(), m)) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (sgn(v[j]) != 0) terms.push_back({monos[j], std::move(v[j])});
        out.generators.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    for (std::size_t i = 0; i < n; ++i) {
        Monomial e(n, 0);
        e[i] = static_cast<std::uint32_t>(p);
        out.field_equations.push_back(Polynomial::monomial(ring, e) - Polynomial::variable(ring, i));
    }
    return out;
}

VanishingIdealResult vanishing_ideal(const PointSet& x) { return vanishing_ideal(x, point_ring(x.prime(), x.dimension())); }

bool verify_vanishing_ideal(const PointSet& x, const VanishingIdealResult& ideal, const PolyRingPtr& ring) {
    for (const auto& g : ideal.generators)
        if (!vanishes_on(g, x)) return false;
    for (const auto& g : ideal.field_equations)
        if (!vanishes_on(g, x)) return false;
    return variety(ideal.presentation(ring)) == x;
}

VivResult viv_closure(const IdealPresentation& s) {
    const PointSet x = variety(s);
    VivResult out{vanishing_ideal(x, s.ring()), {}};
    const IdealPresentation closure = out.ideal.presentation(s.ring());
    const std::uint64_t p = x.prime();
    for (const auto& g : s.generators()) {
        const std::uint64_t bound = total_degree(g).value() * (p - 1) * x.dimension();
        out.inclusion.push_back(membership_bounded(g, closure, bound));
    }
    return out;
}

bool is_irreducible(const PointSet& x) { return x.size() == 1; }

std::vector<PointSet> decompose(const PointSet& x) {
    std::vector<PointSet> parts;
    for (const auto& pt : x.points()) parts.emplace_back(x.prime(), x.dimension(), std::vector<Point>{pt});
    return parts;
}

Polynomial indicator(const PolyRingPtr& ring, const Point& a) {
    const std::uint64_t p = require_prime_field(ring);
    if (a.size() != ring->arity()) throw Error(ErrorKind::DomainMismatch, "point arity mismatch");
    const Polynomial one = Polynomial::constant(ring, 1);
    Polynomial out = one;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Polynomial shifted = Polynomial::variable(ring, i) - Polynomial::constant(ring, mpz_class(static_cast<unsigned long>(a[i])));
        out *= one - pow(shifted, p - 1);
    }
    return out;
}

PrimeCheck is_prime_vanishing_ideal(const PointSet& x, const PolyRingPtr& ring) {
    require_matching_ring(x, ring);
    if (x.size() == 0) return {false, std::nullopt};
    if (x.size() == 1) return {true, std::nullopt};
    Polynomial f = indicator(ring, x.points()[0]);
    Polynomial g = Polynomial::constant(ring, 1) - f;
    return {false, std::make_pair(std::move(f), std::move(g))};
}

PrimeCheck is_prime_vanishing_ideal(const PointSet& x) {
    return is_prime_vanishing_ideal(x, point_ring(x.prime(), x.dimension()));
}

}  // namespace idealab
