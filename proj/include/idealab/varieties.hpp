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

#ifndef IDEALAB_VARIETIES_HPP
#define IDEALAB_VARIETIES_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "idealab/poly.hpp"
#include "idealab/poly_ideals.hpp"

namespace idealab {

/// Point of F_p^n as residues in [0, p).
using Point = std::vector<std::uint64_t>;

/// A finite subset of F_p^n, sorted lexicographically without duplicates.
class PointSet {
   public:
    /// Sorts and deduplicates; throws InvalidDomain for non-prime p and
    /// OutOfRange for bad coordinates.
    PointSet(std::uint64_t p, std::size_t n, std::vector<Point> points);

    static PointSet empty(std::uint64_t p, std::size_t n) { return PointSet(p, n, {}); }
    /// Every point of F_p^n. Throws TooLarge beyond 10^6 points.
    static PointSet all(std::uint64_t p, std::size_t n);

    std::uint64_t prime() const noexcept { return p_; }
    std::size_t dimension() const noexcept { return n_; }
    const std::vector<Point>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool is_empty() const noexcept { return points_.empty(); }

    bool contains(const Point& x) const;
    bool subset_of(const PointSet& other) const;
    PointSet unite(const PointSet& other) const;
    PointSet intersect(const PointSet& other) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

   private:
    std::uint64_t p_;
    std::size_t n_;
    std::vector<Point> points_;
};

/// p^n, or TooLarge when it exceeds 10^6.
std::uint64_t space_size(std::uint64_t p, std::size_t n);

/// Default ring F_p[x, y, z] (or F_p[x1, ..., xn] for n > 3).
PolyRingPtr point_ring(std::uint64_t p, std::size_t n);

/// V(S): common zeros of the generators by exhaustive scan of F_p^n.
/// An empty generator list gives all of F_p^n.
PointSet variety(const IdealPresentation& s);

bool vanishes_on(const Polynomial& f, const PointSet& x);

struct VanishingIdealResult {
    /// Nullspace basis of the evaluation matrix on reduced monomials
    /// (every exponent < p), one generator per free monomial.
    std::vector<Polynomial> generators;
    /// x_i^p - x_i for each variable.
    std::vector<Polynomial> field_equations;

    IdealPresentation presentation(const PolyRingPtr& ring) const;
};

/// I(X) over F_p. `ring` must be F_p with X's dimension as arity.
VanishingIdealResult vanishing_ideal(const PointSet& x, const PolyRingPtr& ring);
VanishingIdealResult vanishing_ideal(const PointSet& x);

/// V(generators + field equations) == X, and every polynomial vanishes on X.
bool verify_vanishing_ideal(const PointSet& x, const VanishingIdealResult& ideal, const PolyRingPtr& ring);

struct VivResult {
    VanishingIdealResult ideal;
    /// One membership certificate per generator of S, at bound deg * (p - 1) * n.
    std::vector<MembershipCertificate> inclusion;
};

/// I(V(S)), plus certificates that S ⊆ I(V(S)).
VivResult viv_closure(const IdealPresentation& s);

/// Over a finite field every subset is algebraic, so X is irreducible iff it
/// is a single point. The empty set is not irreducible.
bool is_irreducible(const PointSet& x);

/// Irreducible components, pairwise incomparable, whose union is X: the
/// singletons of X.
std::vector<PointSet> decompose(const PointSet& x);

/// The reduced polynomial that is 1 at `a` and 0 elsewhere on F_p^n.
Polynomial indicator(const PolyRingPtr& ring, const Point& a);

struct PrimeCheck {
    bool prime;
    /// For |X| >= 2: f, g with f*g vanishing on X but neither f nor g.
    std::optional<std::pair<Polynomial, Polynomial>> witnesses;
};

PrimeCheck is_prime_vanishing_ideal(const PointSet& x, const PolyRingPtr& ring);
PrimeCheck is_prime_vanishing_ideal(const PointSet& x);

}  // namespace idealab

#endif
