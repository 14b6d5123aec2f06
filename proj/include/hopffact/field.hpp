#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hopffact/common.hpp"
#include "hopffact/numtheory.hpp"

namespace hopffact {

class Field;

/// Which exact field backs a computation: GF(p) for a prime p, or the
/// rationals with a fixed primitive M-th root of unity adjoined.
/// Text syntax: "gf:<p>" and "cyc:<M>".
struct FieldSpec {
    enum class Kind { Prime, Cyclotomic };

    Kind kind = Kind::Prime;
    std::uint64_t p = 0;  // Prime case
    std::uint64_t m = 0;  // Cyclotomic case: conductor M

    static FieldSpec gf(std::uint64_t p) { return {Kind::Prime, p, 0}; }
    static FieldSpec cyc(std::uint64_t m) { return {Kind::Cyclotomic, 0, m}; }
    static FieldSpec parse(std::string_view text);

    std::string str() const;
    bool operator==(const FieldSpec&) const = default;
};

/// Exact scalar. GF(p) elements are residues in {0,...,p-1}; cyclotomic
/// elements are kept reduced mod Phi_M as an integer coefficient vector over
/// a common positive denominator, fully normalized, so equality is
/// componentwise. Elements are immutable values bound to the Field that
/// created them; the Field must outlive its elements.
class FieldElem {
  public:
    FieldElem() = default;

    const Field& field() const { return *fld_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    /// Multiplicative inverse; throws Error on zero.
    FieldElem inverse() const;

    /// Integer power, negative exponents via the inverse.
    FieldElem pow(std::int64_t e) const;

    /// Multiplicative order; throws Error on zero or when no bound is known.
    std::uint64_t multiplicative_order() const;

    /// GF(p): residue as decimal. Cyclotomic: "[a0/b0,a1/b1,...]" with each
    /// coefficient fully reduced, little-endian degree order.
    std::string str() const;

    /// GF(p) residue (valid only for prime fields).
    std::uint64_t residue() const { return res_; }
    /// Cyclotomic coefficients as reduced rationals, little-endian.
    std::vector<BigRat> rational_coeffs() const;

  private:
    friend class Field;

    const Field* fld_ = nullptr;
    std::uint64_t res_ = 0;       // Prime case
    std::vector<BigInt> num_;     // Cyclotomic case: size = degree
    BigInt den_ = 1;              // > 0, gcd(content(num_), den_) = 1
};

/// Arithmetic context for one FieldSpec. Immutable after construction and
/// freely shareable across threads. Not copyable: elements hold a pointer
/// back to their field.
class Field {
  public:
    explicit Field(const FieldSpec& spec);
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    const FieldSpec& spec() const { return spec_; }
    bool is_prime_field() const { return spec_.kind == FieldSpec::Kind::Prime; }
    std::uint64_t characteristic() const { return is_prime_field() ? spec_.p : 0; }

    /// Degree over the prime field / the rationals (deg Phi_M for cyclotomic).
    std::size_t degree() const { return is_prime_field() ? 1 : deg_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(std::int64_t v) const;
    FieldElem from_rational(const BigRat& v) const;
    /// Cyclotomic only: element from rational coefficients (little-endian,
    /// length <= degree).
    FieldElem from_coeffs(const std::vector<BigRat>& coeffs) const;
    /// Cyclotomic only: the fixed primitive M-th root of unity.
    FieldElem zeta() const;

    /// Parses the str() format of FieldElem.
    FieldElem parse(std::string_view text) const;

    const IntPoly& modulus_polynomial() const { return phi_; }

  private:
    friend class FieldElem;

    FieldElem make_cyc(std::vector<BigInt> num, BigInt den) const;
    void reduce_and_normalize(std::vector<BigInt>& num, BigInt& den) const;

    FieldSpec spec_;
    // Cyclotomic data
    IntPoly phi_;                             // monic, degree deg_
    std::size_t deg_ = 1;
    std::vector<std::vector<BigInt>> red_;    // x^{deg+r} mod Phi, r in [0, deg)
    bool red64_ok_ = false;
    std::vector<std::vector<std::int64_t>> red64_;
};

/// Factory enforcing the FieldSpec invariants (primality of p, M >= 1).
/// Throws NotPrimeError for composite p.
Field make_field(const FieldSpec& spec);

/// U_n(K) = { x in K | x^n = 1 }, its order nu(n), and a fixed generator xi
/// of multiplicative order exactly nu. elements = { xi^k : 0 <= k < nu }.
struct RootsOfUnity {
    std::uint64_t n = 1;
    std::uint64_t nu = 1;
    std::vector<FieldElem> elements;
    FieldElem generator;
};

RootsOfUnity roots_of_unity(const Field& field, std::uint64_t n);

/// nu(n) = |U_n(K)| without materializing the element list.
std::uint64_t nu_of(const Field& field, std::uint64_t n);

/// Element of multiplicative order exactly m, deterministically chosen:
/// smallest residue for GF(p); zeta^{M/m} for Q(zeta_M) when m | M, else the
/// canonical power of -zeta when m | 2M and M is odd.
/// Throws NoPrimitiveRootError when nu(m) < m.
FieldElem primitive_root_of_unity(const Field& field, std::uint64_t m);

}  // namespace hopffact
