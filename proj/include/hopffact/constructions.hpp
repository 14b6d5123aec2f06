#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hopffact/hopf.hpp"

namespace hopffact {

/// Gaussian binomial table: g[j][c] = [j choose c]_q for 0 <= c <= j < m,
/// via the q-Pascal recurrence (no division by q-integers).
std::vector<std::vector<FieldElem>> gaussian_binomials(const Field& f, int m,
                                                       const FieldElem& q);

/// Taft algebra T_{m^2}(q): generated by a group-like h and an (h,1)-primitive
/// x with h^m = 1, x^m = 0, xh = q h x, for q of multiplicative order exactly
/// m. Basis h^i x^j (0 <= i,j < m), index i*m + j.
/// Throws BadRootError unless q has order exactly m.
HopfAlgebra taft(const Field& field, int m, const FieldElem& q);

/// Group Hopf algebra K[C_n] on basis g^i, index i.
HopfAlgebra group_algebra(const Field& field, int n);

/// A matched pair (A, H, left, right): action tensors indexed by
/// (H basis, A basis); left lands in A (the symbol "H acts on A"), right
/// lands in H.
struct MatchedPair {
    HopfPtr A;
    HopfPtr H;
    std::vector<SparseVec> left;   // size dim_H * dim_A, combos over A
    std::vector<SparseVec> right;  // size dim_H * dim_A, combos over H
    std::optional<FieldElem> omega;  // set by the standard family
    std::string provenance;

    const SparseVec& lact(int y, int a) const {
        return left[static_cast<std::size_t>(y) * A->dim + a];
    }
    const SparseVec& ract(int y, int a) const {
        return right[static_cast<std::size_t>(y) * A->dim + a];
    }
    /// Bilinear extensions of the actions to sparse combinations.
    SparseVec act_left(const SparseVec& y, const SparseVec& a) const;
    SparseVec act_right(const SparseVec& y, const SparseVec& a) const;
    bool right_action_trivial() const;
};

bool actions_equal(const MatchedPair& a, const MatchedPair& b);

/// The matched pair between T_{m^2}(q) and K[C_n] attached to an n-th root of
/// unity omega: g^i |> h^j x^k = omega^{ik} h^j x^k, g^i <| h^j x^k =
/// eps(x^k) g^i. Throws NotARootError unless omega^n = 1.
MatchedPair standard_matched_pair(const Field& field, int m, const FieldElem& q,
                                  int n, const FieldElem& omega);

/// Exhaustive exact check: both actions are coalgebra maps, the module
/// axioms, and the compatibilities (mp1)-(mp4).
AxiomReport verify_matched_pair(const MatchedPair& mp);

struct MatchedPairSearchResult {
    std::vector<MatchedPair> pairs;   // survivors, enumeration order
    std::uint64_t candidates = 0;     // generator-data tuples examined
    std::uint64_t unextendable = 0;   // tuples whose action tables do not close
};

/// Finite re-run of the matched-pair classification over a small prime
/// field: enumerates every generator-image candidate allowed by the
/// group-like/skew-primitive transport lemma, extends each to full action
/// tensors via the module and (mp2)/(mp3) recursions, and keeps the tuples
/// passing verify_matched_pair. Intended for desk scale (p <= 7, m <= 3,
/// n <= 3); throws BudgetExceededError when the candidate grid is larger
/// than budget or the field is not GF(p).
MatchedPairSearchResult matched_pair_search(const Field& field, int m,
                                            const FieldElem& q, int n,
                                            std::uint64_t budget = 1'000'000);

/// Bicrossed product A |><| H on the tensor coalgebra A tensor B with
/// (a |><| y)(b |><| z) = a (y1 |> b1) |><| (y2 <| b2) z. Requires
/// verify_matched_pair to pass; throws InvalidMatchedPairError otherwise.
HopfAlgebra bicrossed_product(const MatchedPair& mp);

/// Smash product A # H for a left action making A a left H-module algebra
/// and coalgebra, with the symmetry y1 tensor (y2 |> a) = y2 tensor (y1 |> a).
/// Throws NotModuleAlgebraError / SymmetryFailsError with witnesses.
HopfAlgebra smash_product(const HopfAlgebra& a, const HopfAlgebra& h,
                          const std::vector<SparseVec>& left_action);

/// The quantum group T^omega_{n m^2}(q): generators g, h, x with g^n = h^m
/// = 1, x^m = 0, xh = qhx, hg = gh, gx = omega xg. Basis h^j x^k g^i in
/// lexicographic (j, k, i) order. Structure constants are built from the
/// closed normal form and cross-checked entrywise against the smash product
/// of the standard matched pair.
HopfAlgebra t_quantum_group(const Field& field, int m, const FieldElem& q,
                            int n, const FieldElem& omega);

/// Morphism data (u, p, r, v) between smash products: u: A -> A and
/// r: H -> A unitary coalgebra maps, p: A -> H and v: H -> H Hopf maps.
struct Quadruple {
    LinearMap u, p, r, v;
    // Parameters of the standard family (gamma, l, s); c is the exponent of
    // p(h), forced to 0 by compatibility (C1) and retained for search and
    // counterexample variants.
    FieldElem gamma;
    int l = 0, s = 0, c = 0;
};

/// u(h^i x^j) = gamma^j h^i x^j, r(g^k) = h^{kl}, v(g^k) = g^{ks},
/// p(h^i x^j) = delta_{j,0} g^{ic} (trivial when c = 0).
Quadruple standard_quadruple(const HopfAlgebra& taft_alg,
                             const HopfAlgebra& group_alg,
                             const FieldElem& gamma, int l, int s, int c = 0);

/// Evaluates psi(a # t) = u(a1) (p(a2) |>' r(t1)) #' p(a3) v(t2) between the
/// smash products of two matched pairs (right actions must be trivial) and
/// reports: the declared coalgebra/Hopf properties of u, p, r, v, the
/// compatibilities (C1)-(C6), and whether psi is a Hopf algebra morphism.
std::pair<LinearMap, AxiomReport> quadruple_morphism(const Quadruple& quad,
                                                     const MatchedPair& src,
                                                     const MatchedPair& dst);

}  // namespace hopffact
