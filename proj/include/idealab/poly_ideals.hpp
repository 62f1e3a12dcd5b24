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

#ifndef IDEALAB_POLY_IDEALS_HPP
#define IDEALAB_POLY_IDEALS_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "idealab/poly.hpp"

namespace idealab {

/// A finitely generated ideal (g_1, ..., g_k) of a polynomial ring. Zero
/// generators are dropped; an empty list presents the zero ideal.
class IdealPresentation {
   public:
    IdealPresentation(PolyRingPtr ring, std::vector<Polynomial> generators);

    const PolyRingPtr& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }

   private:
    PolyRingPtr ring_;
    std::vector<Polynomial> generators_;
};

/// f = sum cofactors[i] * generators[i].
struct Member {
    std::vector<Polynomial> cofactors;
};

/// Every generator vanishes at `witness`, f does not.
struct NonMember {
    std::vector<RingElement> witness;
};

/// No certificate with cofactor total degree <= bound.
struct Unknown {
    std::uint64_t bound;
};

struct MembershipCertificate {
    std::variant<Member, NonMember, Unknown> verdict;

    bool is_member() const noexcept { return std::holds_alternative<Member>(verdict); }
    bool is_non_member() const noexcept { return std::holds_alternative<NonMember>(verdict); }
    bool is_unknown() const noexcept { return std::holds_alternative<Unknown>(verdict); }
};

/// Re-checks a certificate against f and I with independent arithmetic.
/// Unknown verdicts verify trivially.
bool verify(const MembershipCertificate& cert, const Polynomial& f, const IdealPresentation& ideal);

/// Decides whether f = sum h_i g_i with every h_i of total degree <= bound by
/// solving the exact linear system on the cofactor coefficients. Failing
/// that, looks for a point where the generators vanish and f does not: all
/// of F_p^n over F_p, the integer grid [-5, 5]^n over Q.
///
/// Requires field coefficients (UnsupportedDomain otherwise).
MembershipCertificate membership_bounded(const Polynomial& f, const IdealPresentation& ideal, std::uint64_t bound);

enum class Comparison { EqualWithinBound, LeftNotInRight, RightNotInLeft, Unknown };

struct IdealComparison {
    Comparison outcome;
    /// The generator that failed membership, for the two inequality outcomes.
    std::optional<Polynomial> separating;
    std::vector<RingElement> witness;
};

/// Mutual bounded membership of generators. A non-membership certificate in
/// either direction is decisive; otherwise any Unknown makes the result Unknown.
IdealComparison ideal_equal_bounded(const IdealPresentation& left, const IdealPresentation& right, std::uint64_t bound);

/// Monic squarefree part f / gcd(f, f') of a univariate polynomial over Q or
/// F_p. Over F_p throws InseparableCase when f' = 0 or when the squarefree
/// part misses a factor of f (a multiplicity divisible by p).
Polynomial radical_univariate(const Polynomial& f);

struct ChainStep {
    std::vector<Polynomial> generators;  // X_1, ..., X_i
    Polynomial candidate;                // X_{i+1}
    std::vector<RingElement> witness;    // X_{i+1} -> 1, everything else -> 0
    bool verified;
};

/// Certifies (X_1) ⊊ (X_1, X_2) ⊊ ... ⊊ (X_1, ..., X_{k+1}) in a ring with at
/// least k + 1 variables, one evaluation witness per step.
std::vector<ChainStep> strict_chain_demo(std::size_t k, const PolyRingPtr& ring);

struct LeadingCoefficientLevel {
    std::uint64_t degree;
    /// Leading coefficients of members of degree <= `degree` form the zero
    /// ideal (otherwise the whole field).
    bool zero;
};

struct HbtExtraction {
    std::vector<LeadingCoefficientLevel> j_profile;
    Polynomial extracted;
    IdealComparison check;
};

/// Univariate ideal over a field: extracts the single generator gcd(g_1, ...)
/// and reports the leading-coefficient ideals per degree. Throws ZeroIdeal.
HbtExtraction hbt_extract_univariate(const IdealPresentation& ideal);

}  // namespace idealab

#endif
