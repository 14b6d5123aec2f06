#pragma once

#include <optional>

#include "hopffact/constructions.hpp"

namespace hopffact {

struct IsoSolution {
    int l = 0;
    int s = 0;
};

/// Decides T^{xi^t} ~ T^{xi^t'} by finite scan: the lexicographically least
/// (s, l) with s in {0,...,n-1}, gcd(s,n) = 1, l in {0,...,m-1} and
/// xi^{s t' - t} = q^l, or nothing. Exponents are reduced mod nu(n).
/// Throws NoPrimitiveRootError when the field has no primitive m-th root.
std::optional<IsoSolution> iso_criterion(std::int64_t t, std::int64_t t2, int m,
                                         int n, const Field& field);

/// gcd(t, nu(n)/d) with d = gcd(m, nu(n)) and gcd(0, k) = k: the divisor
/// exponent whose quantum group is isomorphic to T^{xi^t}.
std::uint64_t canonical_representative(std::int64_t t, int m, int n,
                                       const Field& field);

/// Integer certificate behind an isomorphism witness: s tau + n mu = 1,
/// tau = alpha n + tau1, l tau = beta m + tau2.
struct BezoutData {
    std::int64_t tau = 0, mu = 0;
    int tau1 = 0, tau2 = 0;
    std::int64_t alpha = 0, beta = 0;
};

struct IsoWitness {
    int l = 0, s = 0;
    FieldElem gamma;
    LinearMap forward;
    LinearMap inverse;
    BezoutData bezout;
};

/// Builds the explicit isomorphism T^{xi^t} -> T^{xi^t'} from the standard
/// quadruple (gamma=1, l, s) and its inverse from (gamma=1, m-tau2, tau1);
/// both are certified as Hopf morphisms and exactly mutually inverse.
/// Throws NotIsomorphicError when the criterion has no solution.
IsoWitness witness_isomorphism(std::int64_t t, std::int64_t t2, int m, int n,
                               const Field& field);

/// S^t_{m,n}(q) = { (l, s) : gcd(s, n) = 1, xi^{t(s-1)} = q^l } under
/// (l, s)(l', s') = (l + s l' mod m, s s' mod n). The K* factor of the full
/// automorphism group stays symbolic here (field_star_symbolic).
struct AutGroup {
    std::int64_t t = 0;
    std::vector<std::pair<int, int>> elements;  // identity first
    std::uint64_t order = 0;
    bool field_star_symbolic = true;
};

/// Enumerates S^t, verifies the abstract group axioms, realizes every
/// element as a bijective Hopf endomorphism of T^{xi^t} via the standard
/// quadruple, and checks the group law against exact matrix composition.
AutGroup automorphism_group(std::int64_t t, int m, int n, const Field& field);

struct ClassificationReport {
    int m = 0, n = 0;
    FieldSpec field;
    std::uint64_t nu = 1;
    std::uint64_t d = 1;
    Factorization nu_over_d_factorization;
    std::uint64_t count = 1;
    std::vector<std::uint64_t> representatives;  // divisors of nu/d, ascending
    std::vector<std::vector<bool>> pairwise;     // nu x nu iso table
    std::vector<AutGroup> aut;                   // per representative
};

/// The closed-formula class count prod (alpha_i + 1) together with the
/// independent pairwise iso_criterion partition; both are computed and must
/// agree. Throws NoPrimitiveRootError without a primitive m-th root.
ClassificationReport count_classes(int m, int n, const Field& field);

/// Independent oracle: enumerates all generator-image triples (g', h' among
/// the group-likes of h2, x' in the matching skew-primitive space), keeps
/// those satisfying the defining relations of h1 and extending to a
/// bijective Hopf morphism. h1 and h2 must use the T^omega basis convention
/// with parameters (m, n). Dimension mismatch returns empty immediately.
/// Throws BudgetExceededError when the candidate count exceeds budget.
std::vector<LinearMap> brute_force_hopf_isos(const HopfAlgebra& h1,
                                             const HopfAlgebra& h2, int m, int n,
                                             std::uint64_t budget = 1'000'000);

std::string report_json(const ClassificationReport& r);
std::string report_text(const ClassificationReport& r);
std::string report_csv(const ClassificationReport& r);

}  // namespace hopffact
