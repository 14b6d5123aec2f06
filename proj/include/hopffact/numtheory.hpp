#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hopffact/common.hpp"

namespace hopffact {

/// Prime decomposition N = p_1^{a_1} ... p_r^{a_r} with strictly increasing
/// primes. factorize(1) has an empty factor list.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<std::pair<std::uint64_t, unsigned>> factors;
};

bool is_prime(std::uint64_t n);

/// Exact factorization by trial division (inputs are desk-scale).
Factorization factorize(std::uint64_t n);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Euler's totient.
std::uint64_t totient(std::uint64_t n);

/// Extended Euclid: returns g = gcd(a,b) and (x,y) with a*x + b*y = g.
struct ExtGcd {
    std::int64_t g, x, y;
};
ExtGcd ext_gcd(std::int64_t a, std::int64_t b);

/// a^e mod p with 128-bit intermediates.
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

/// Dense integer polynomial, little-endian coefficients, no trailing zeros
/// (except the zero polynomial, which is the empty vector).
using IntPoly = std::vector<BigInt>;

/// The M-th cyclotomic polynomial, computed by exact recursive division of
/// x^M - 1 by the product of Phi_d over proper divisors d of M.
IntPoly cyclotomic_polynomial(std::uint64_t m);

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

/// Exact division; throws Error if the remainder is nonzero.
IntPoly poly_div_exact(const IntPoly& num, const IntPoly& den);

/// x^n - 1.
IntPoly poly_xn_minus_1(std::uint64_t n);

std::string poly_to_string(const IntPoly& p);

}  // namespace hopffact
