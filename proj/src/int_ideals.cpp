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

#include "idealab/int_ideals.hpp"

#include <algorithm>

namespace idealab {

IntIdeal IntIdeal::from_generators(std::span<const mpz_class> gens) {
    mpz_class g = 0;
    for (const auto& x : gens) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return IntIdeal(g);
}

bool IntIdeal::contains(const mpz_class& z) const {
    if (generator_ == 0) return z == 0;
    return mpz_divisible_p(z.get_mpz_t(), generator_.get_mpz_t()) != 0;
}

bool IntIdeal::is_prime() const { return generator_ == 0 || is_prime_number(generator_); }

std::optional<std::pair<mpz_class, mpz_class>> non_prime_witness(const IntIdeal& ideal) {
    const mpz_class& n = ideal.generator();
    if (n <= 1 || is_prime_number(n)) return std::nullopt;
    for (mpz_class d = 2; d * d <= n; ++d)
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return std::make_pair(d, mpz_class(n / d));
    return std::nullopt;
}

bool is_ideal_of_zn(std::uint64_t n, std::span<const std::uint64_t> subset) {
    if (n == 0) return false;
    std::vector<bool> in(n, false);
    std::vector<std::uint64_t> members;
    for (auto r : subset) {
        if (r >= n) return false;
        if (!in[r]) members.push_back(r);
        in[r] = true;
    }
    if (!in[0]) return false;
    for (auto a : members) {
        for (auto b : members)
            if (!in[(a + b) % n]) return false;
        for (std::uint64_t r = 0; r < n; ++r)
            if (!in[(a * r) % n]) return false;
    }
    return true;
}

ZnIdeal::ZnIdeal(std::uint64_t modulus, std::vector<std::uint64_t> elements) : modulus_(modulus), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (!is_ideal_of_zn(modulus_, elements_))
        throw Error(ErrorKind::InvalidIdeal, "subset is not an ideal of Z/" + std::to_string(modulus));
}

ZnIdeal ZnIdeal::generated_by(std::uint64_t modulus, std::uint64_t generator) {
    std::vector<std::uint64_t> elems;
    std::uint64_t r = 0;
    do {
        elems.push_back(r);
        r = (r + generator) % modulus;
    } while (r != 0);
    std::sort(elems.begin(), elems.end());
    return ZnIdeal(modulus, std::move(elems), Trusted{});
}

bool ZnIdeal::contains(std::uint64_t r) const { return std::binary_search(elements_.begin(), elements_.end(), r % modulus_); }

bool ZnIdeal::subset_of(const ZnIdeal& other) const {
    return modulus_ == other.modulus_ &&
           std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

std::vector<ZnIdeal> enumerate_ideals_mod_n(std::uint64_t n) {
    if (n < 1 || n > 10000) throw Error(ErrorKind::OutOfRange, "n must lie in [1, 10000], got " + std::to_string(n));
    std::vector<ZnIdeal> ideals;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) ideals.push_back(ZnIdeal::generated_by(n, d % n));
    return ideals;
}

PrimeVerdicts prime_defs_agree(std::uint64_t n, const ZnIdeal& ideal) {
    if (ideal.modulus() != n) throw Error(ErrorKind::InvalidIdeal, "ideal does not live in Z/" + std::to_string(n));

    bool direct = !ideal.is_whole_ring();
    for (std::uint64_t a = 0; a < n && direct; ++a)
        for (std::uint64_t b = 0; b < n && direct; ++b)
            if (ideal.contains(a * b % n) && !ideal.contains(a) && !ideal.contains(b)) direct = false;

    // Quotient by cosets: class(r) is the least member of r + J.
    std::vector<std::uint64_t> cls(n);
    for (std::uint64_t r = 0; r < n; ++r) {
        std::uint64_t best = r;
        for (auto j : ideal.elements()) best = std::min(best, (r + j) % n);
        cls[r] = best;
    }
    std::vector<std::uint64_t> reps(cls.begin(), cls.end());
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

    const std::uint64_t zero = cls[0];
    bool quotient = reps.size() > 1;
    for (auto s : reps) {
        if (s == zero) continue;
        for (auto t : reps) {
            if (t != zero && cls[s * t % n] == zero) quotient = false;
        }
    }
    return {direct, quotient};
}

std::size_t maximal_member(std::span<const ZnIdeal> collection) {
    if (collection.empty()) throw Error(ErrorKind::OutOfRange, "empty collection has no maximal member");
    for (std::size_t i = 0; i < collection.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < collection.size() && maximal; ++j)
            if (!(collection[j] == collection[i]) && collection[i].subset_of(collection[j])) maximal = false;
        if (maximal) return i;
    }
    // Unreachable for a finite poset.
    throw Error(ErrorKind::InvalidIdeal, "no maximal member");
}

std::size_t ascending_chain_stabilizes(std::span<const std::vector<mpz_class>> chain) {
    if (chain.empty()) throw Error(ErrorKind::NotAChain, "empty chain");
    std::vector<IntIdeal> ideals;
    for (const auto& gens : chain) ideals.push_back(IntIdeal::from_generators(gens));
    for (std::size_t i = 0; i + 1 < ideals.size(); ++i)
        if (!ideals[i].subset_of(ideals[i + 1]))
            throw Error(ErrorKind::NotAChain, ideals[i].to_string() + " at position " + std::to_string(i) +
                                                  " is not contained in " + ideals[i + 1].to_string());
    for (std::size_t i = 0; i + 1 < ideals.size(); ++i)
        if (ideals[i] == ideals[i + 1]) return i;
    return ideals.size() - 1;
}

}  // namespace idealab
