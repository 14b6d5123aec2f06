#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopffact/linalg.hpp"

namespace hopffact {

/// Sparse linear combination of basis elements: (index, coefficient) pairs,
/// sorted by index, zero coefficients pruned.
using SparseVec = std::vector<std::pair<int, FieldElem>>;

SparseVec sv_canonicalize(SparseVec v);
SparseVec sv_from_dense(const Vec& v);
Vec sv_to_dense(const Field& field, int dim, const SparseVec& v);
bool sv_equal(const SparseVec& a, const SparseVec& b);
/// dst += c * src, as raw appended terms; canonicalize when done adding.
void sv_add(SparseVec& dst, const FieldElem& c, const SparseVec& src);

/// One term of a comultiplication row: coeff * (e_j tensor e_k).
struct CoTerm {
    int j, k;
    FieldElem c;
};

/// Finite-dimensional Hopf algebra as structure constants over an exact
/// field. mult[i*dim+j] expands e_i * e_j over the basis; comult[i] expands
/// Delta(e_i) over basis tensor pairs; antipode column i is S(e_i).
/// pointed_monomial_basis promises that every group-like element is a basis
/// monomial (true for every constructor in this library).
struct HopfAlgebra {
    const Field* field = nullptr;
    int dim = 0;
    std::vector<std::string> basis_labels;
    std::vector<SparseVec> mult;
    Vec unit;
    std::vector<std::vector<CoTerm>> comult;
    Vec counit;
    Matrix antipode;
    bool pointed_monomial_basis = false;

    const SparseVec& mul(int i, int j) const { return mult[static_cast<std::size_t>(i) * dim + j]; }
    SparseVec& mul(int i, int j) { return mult[static_cast<std::size_t>(i) * dim + j]; }

    /// Product of two sparse combinations via the multiplication tensor.
    SparseVec product(const SparseVec& a, const SparseVec& b) const;
    /// Antipode column i as a sparse vector.
    SparseVec antipode_of(int i) const;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::string witness;  // first failing index tuple and the unequal scalars
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool pass() const;
    const AxiomCheck* first_failure() const;
    std::string summary() const;
};

/// Exhaustive exact verification of all Hopf axioms on the basis:
/// associativity, unit, coassociativity, counit, the bialgebra compatibility
/// (Delta and epsilon are algebra maps, Delta(1) = 1 tensor 1, epsilon(1) = 1),
/// and both antipode convolution identities. Failures are reported with
/// witnesses, never thrown.
AxiomReport verify_hopf(const HopfAlgebra& h);

/// All v with Delta(v) = v tensor v and epsilon(v) = 1. Guaranteed complete
/// under the pointed-monomial promise, or by brute force over GF(p) when
/// p^dim <= budget; otherwise throws BudgetExceededError. Every returned
/// vector is re-verified by direct substitution.
std::vector<Vec> group_likes(const HopfAlgebra& h, std::uint64_t budget = 2'000'000);

/// Basis of P_{a,b}(H) = { c | Delta(c) = c tensor a + b tensor c } for
/// verified group-likes a, b (exact linear solve).
std::vector<Vec> skew_primitives(const HopfAlgebra& h, const Vec& a, const Vec& b);

/// Is v group-like (direct substitution into the tensors)?
bool is_group_like(const HopfAlgebra& h, const Vec& v);
/// Is c an (a,b)-skew-primitive (direct substitution)?
bool is_skew_primitive(const HopfAlgebra& h, const Vec& c, const Vec& a, const Vec& b);

/// Standard tensor-product Hopf structure on the product basis
/// (index = i_A * dim_B + i_B, labels joined with a space).
HopfAlgebra tensor_product_hopf(const HopfAlgebra& a, const HopfAlgebra& b);

/// Linear map between Hopf algebras; matrix is target_dim x source_dim with
/// column j the image of e_j.
struct LinearMap {
    HopfPtr source;
    HopfPtr target;
    Matrix matrix;

    Vec image_of(int j) const { return matrix.col(j); }
};

/// Checks f(ab) = f(a)f(b), f(1) = 1, (f tensor f) Delta = Delta f and
/// epsilon f = epsilon on all basis elements.
AxiomReport is_hopf_morphism(const LinearMap& f);

/// rank == dim via exact elimination (square matrices only).
bool is_bijective(const LinearMap& f);

/// Entrywise equality of all structure tensors (labels ignored).
bool structure_equal(const HopfAlgebra& a, const HopfAlgebra& b);

/// Canonical text serialization; byte-stable for identical inputs.
std::string to_text(const HopfAlgebra& h);

}  // namespace hopffact
