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

#ifndef IDEALAB_INT_IDEALS_HPP
#define IDEALAB_INT_IDEALS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "idealab/rings.hpp"

namespace idealab {

/// An ideal of Z in principal form (g), g >= 0. (0) is the zero ideal and
/// (1) is Z itself.
class IntIdeal {
   public:
    explicit IntIdeal(const mpz_class& generator) : generator_(abs(generator)) {}

    /// (S) = (gcd S); the empty set generates (0).
    static IntIdeal from_generators(std::span<const mpz_class> gens);

    const mpz_class& generator() const noexcept { return generator_; }
    bool contains(const mpz_class& z) const;
    /// Prime iff the generator is 0 or a prime number. (1) is never prime.
    bool is_prime() const;
    bool is_whole_ring() const noexcept { return generator_ == 1; }
    /// I is a subset of J.
    bool subset_of(const IntIdeal& other) const { return other.contains(generator_); }

    std::string to_string() const { return "(" + generator_.get_str() + ")"; }

    friend bool operator==(const IntIdeal& a, const IntIdeal& b) noexcept { return a.generator_ == b.generator_; }

   private:
    mpz_class generator_;
};

/// For a proper non-prime ideal (n) with n composite, a factorisation n = a*b
/// with neither factor in (n). Empty for prime ideals and for (1).
std::optional<std::pair<mpz_class, mpz_class>> non_prime_witness(const IntIdeal& ideal);

/// An ideal of Z/n given by its sorted residues.
class ZnIdeal {
   public:
    /// Validates closure under addition and under multiplication by every
    /// residue; throws InvalidIdeal otherwise.
    ZnIdeal(std::uint64_t modulus, std::vector<std::uint64_t> elements);

    /// The residues of (d) in Z/n.
    static ZnIdeal generated_by(std::uint64_t modulus, std::uint64_t generator);

    std::uint64_t modulus() const noexcept { return modulus_; }
    const std::vector<std::uint64_t>& elements() const noexcept { return elements_; }
    bool contains(std::uint64_t r) const;
    bool is_whole_ring() const noexcept { return elements_.size() == modulus_; }
    bool subset_of(const ZnIdeal& other) const;

    friend bool operator==(const ZnIdeal&, const ZnIdeal&) = default;

   private:
    struct Trusted {};
    ZnIdeal(std::uint64_t modulus, std::vector<std::uint64_t> sorted, Trusted)
        : modulus_(modulus), elements_(std::move(sorted)) {}

    std::uint64_t modulus_;
    std::vector<std::uint64_t> elements_;
};

/// Whether a subset of Z/n (any order, duplicates allowed) is an ideal.
bool is_ideal_of_zn(std::uint64_t modulus, std::span<const std::uint64_t> subset);

/// Every ideal of Z/n, one per divisor d of n in increasing order of d.
/// Requires 1 <= n <= 10^4.
std::vector<ZnIdeal> enumerate_ideals_mod_n(std::uint64_t n);

struct PrimeVerdicts {
    /// Proper, and ab in J implies a in J or b in J (exhaustive).
    bool def_direct;
    /// The quotient (Z/n)/J is not the one-element ring and has no zero-divisors.
    bool def_quotient;
};

PrimeVerdicts prime_defs_agree(std::uint64_t n, const ZnIdeal& ideal);

/// Index of a member contained in no other member of the collection.
/// Requires a nonempty collection.
std::size_t maximal_member(std::span<const ZnIdeal> collection);

/// For a chain I_0 ⊆ I_1 ⊆ ... (each given by generators), the first index l
/// with I_l = I_{l+1}, or the last index when no two consecutive ideals agree.
/// Throws NotAChain if some I_k is not contained in I_{k+1}.
std::size_t ascending_chain_stabilizes(std::span<const std::vector<mpz_class>> chain);

}  // namespace idealab

#endif
