#include "hopffact/classify.hpp"

#include <limits>
#include <numeric>

namespace hopffact {

namespace {

std::int64_t mod_norm(std::int64_t v, std::int64_t mod) {
    v %= mod;
    return v < 0 ? v + mod : v;
}

struct CriterionTables {
    std::uint64_t nu = 1;
    std::vector<FieldElem> xipow;  // xi^e, e < nu
    std::vector<FieldElem> qpow;   // q^l, l < m
};

CriterionTables criterion_tables(int m, int n, const Field& field) {
    CriterionTables t;
    const RootsOfUnity ru = roots_of_unity(field, static_cast<std::uint64_t>(n));
    t.nu = ru.nu;
    t.xipow = ru.elements;  // xi^0 .. xi^{nu-1}
    const FieldElem q = primitive_root_of_unity(field, static_cast<std::uint64_t>(m));
    t.qpow.assign(m, field.one());
    for (int l = 1; l < m; ++l) t.qpow[l] = t.qpow[l - 1] * q;
    return t;
}

std::optional<IsoSolution> scan_criterion(const CriterionTables& tab, std::int64_t t,
                                          std::int64_t t2, int m, int n) {
    const auto nu = static_cast<std::int64_t>(tab.nu);
    t = mod_norm(t, nu);
    t2 = mod_norm(t2, nu);
    for (int s = 0; s < n; ++s) {
        if (std::gcd(s, n) != 1) continue;
        const std::int64_t e = mod_norm(static_cast<std::int64_t>(s) * t2 - t, nu);
        for (int l = 0; l < m; ++l)
            if (tab.xipow[e] == tab.qpow[l]) return IsoSolution{l, s};
    }
    return std::nullopt;
}

}  // namespace

std::optional<IsoSolution> iso_criterion(std::int64_t t, std::int64_t t2, int m,
                                         int n, const Field& field) {
    return scan_criterion(criterion_tables(m, n, field), t, t2, m, n);
}

std::uint64_t canonical_representative(std::int64_t t, int m, int n,
                                       const Field& field) {
    const std::uint64_t nu = nu_of(field, static_cast<std::uint64_t>(n));
    const std::uint64_t d = std::gcd(static_cast<std::uint64_t>(m), nu);
    const std::uint64_t k = nu / d;
    return std::gcd(static_cast<std::uint64_t>(mod_norm(t, static_cast<std::int64_t>(nu))), k);
}

IsoWitness witness_isomorphism(std::int64_t t, std::int64_t t2, int m, int n,
                               const Field& field) {
    const auto tab = criterion_tables(m, n, field);
    const auto sol = scan_criterion(tab, t, t2, m, n);
    if (!sol)
        throw NotIsomorphicError("NotIsomorphic: T^{xi^" + std::to_string(t) +
                                 "} and T^{xi^" + std::to_string(t2) +
                                 "} are not isomorphic (criterion scan empty)");
    const auto nu = static_cast<std::int64_t>(tab.nu);
    const int l = sol->l, s = sol->s;

    IsoWitness w;
    w.l = l;
    w.s = s;
    w.gamma = field.one();

    // s tau + n mu = 1 with tau normalized into {0,...,n-1}.
    const ExtGcd eg = ext_gcd(s, n);
    if (eg.g != 1) throw Error("internal: criterion returned s with gcd(s,n) != 1");
    w.bezout.tau = mod_norm(eg.x, n);
    w.bezout.mu = (1 - static_cast<std::int64_t>(s) * w.bezout.tau) / n;
    w.bezout.tau1 = static_cast<int>(w.bezout.tau % n);
    w.bezout.alpha = (w.bezout.tau - w.bezout.tau1) / n;
    const std::int64_t ltau = static_cast<std::int64_t>(l) * w.bezout.tau;
    w.bezout.tau2 = static_cast<int>(mod_norm(ltau, m));
    w.bezout.beta = (ltau - w.bezout.tau2) / m;

    const FieldElem omega_src = tab.xipow[mod_norm(t, nu)];
    const FieldElem omega_dst = tab.xipow[mod_norm(t2, nu)];
    const FieldElem q = tab.qpow[std::min(1, m - 1)];
    const MatchedPair src = standard_matched_pair(field, m, q, n, omega_src);
    const MatchedPair dst = standard_matched_pair(field, m, q, n, omega_dst);

    auto [fwd, fwd_rep] =
        quadruple_morphism(standard_quadruple(*src.A, *src.H, w.gamma, l, s), src, dst);
    if (!fwd_rep.pass())
        throw Error("internal: forward witness failed: " +
                    fwd_rep.first_failure()->axiom);
    auto [inv, inv_rep] = quadruple_morphism(
        standard_quadruple(*src.A, *src.H, w.gamma, (m - w.bezout.tau2) % m,
                           w.bezout.tau1),
        dst, src);
    if (!inv_rep.pass())
        throw Error("internal: inverse witness failed: " +
                    inv_rep.first_failure()->axiom);
    if (!is_bijective(fwd) || !is_bijective(inv))
        throw Error("internal: witness maps are not bijective");
    if (!is_identity(fwd.matrix * inv.matrix) || !is_identity(inv.matrix * fwd.matrix))
        throw Error("internal: witness maps do not compose to the identity");
    w.forward = std::move(fwd);
    w.inverse = std::move(inv);
    return w;
}

AutGroup automorphism_group(std::int64_t t, int m, int n, const Field& field) {
    const auto tab = criterion_tables(m, n, field);
    const auto nu = static_cast<std::int64_t>(tab.nu);
    const std::int64_t te = mod_norm(t, nu);

    AutGroup group;
    group.t = t;
    for (int s = 0; s < n; ++s) {
        if (std::gcd(s, n) != 1) continue;
        const std::int64_t e = mod_norm(te * (s - 1), nu);
        for (int l = 0; l < m; ++l)
            if (tab.xipow[e] == tab.qpow[l]) group.elements.emplace_back(l, s);
    }
    group.order = group.elements.size();

    auto contains = [&](int l, int s) {
        for (const auto& [el, es] : group.elements)
            if (el == l && es == s) return true;
        return false;
    };
    auto law = [&](std::pair<int, int> a, std::pair<int, int> b) {
        return std::pair<int, int>{(a.first + a.second * b.first) % m,
                                   (a.second * b.second) % n};
    };
    const std::pair<int, int> id{0, 1 % n};
    if (group.elements.empty() || group.elements.front() != id)
        throw Error("internal: S^t does not list the identity first");
    for (const auto& a : group.elements) {
        if (law(a, id) != a || law(id, a) != a)
            throw Error("internal: S^t identity law fails");
        for (const auto& b : group.elements) {
            const auto ab = law(a, b);
            if (!contains(ab.first, ab.second))
                throw Error("internal: S^t not closed under the group law");
        }
        // inverse (-l s', s') with s s' = 1 mod n
        const int sprime = static_cast<int>(mod_norm(ext_gcd(a.second, n).x, n));
        const int linv = static_cast<int>(mod_norm(-static_cast<std::int64_t>(a.first) * sprime, m));
        if (!contains(linv, sprime) || law(a, {linv, sprime}) != id)
            throw Error("internal: S^t inverse law fails");
    }

    // Matrix realization: each (l, s) induces a bijective Hopf endomorphism
    // of T^{xi^t} and matrix composition realizes the abstract law.
    const FieldElem omega = tab.xipow[te];
    const FieldElem q = tab.qpow[std::min(1, m - 1)];
    const MatchedPair mp = standard_matched_pair(field, m, q, n, omega);
    std::vector<Matrix> mats;
    for (const auto& [l, s] : group.elements) {
        auto [psi, rep] =
            quadruple_morphism(standard_quadruple(*mp.A, *mp.H, field.one(), l, s), mp, mp);
        if (!rep.pass())
            throw Error("internal: S^t element does not induce a Hopf morphism");
        if (!is_bijective(psi)) throw Error("internal: S^t element is not bijective");
        mats.push_back(psi.matrix);
    }
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = 0; j < mats.size(); ++j) {
            const auto ab = law(group.elements[i], group.elements[j]);
            std::size_t at = mats.size();
            for (std::size_t k = 0; k < group.elements.size(); ++k)
                if (group.elements[k] == ab) at = k;
            if (at == mats.size() || !(mats[i] * mats[j] == mats[at]))
                throw Error("internal: matrix composition disagrees with the group law");
        }
    return group;
}

ClassificationReport count_classes(int m, int n, const Field& field) {
    const auto tab = criterion_tables(m, n, field);
    ClassificationReport r;
    r.m = m;
    r.n = n;
    r.field = field.spec();
    r.nu = tab.nu;
    r.d = std::gcd(static_cast<std::uint64_t>(m), r.nu);
    r.nu_over_d_factorization = factorize(r.nu / r.d);
    r.count = 1;
    for (const auto& [p, a] : r.nu_over_d_factorization.factors) {
        (void)p;
        r.count *= (a + 1);
    }
    r.representatives = divisors(r.nu / r.d);

    const int nu = static_cast<int>(r.nu);
    r.pairwise.assign(nu, std::vector<bool>(nu, false));
    for (int t = 0; t < nu; ++t)
        for (int t2 = 0; t2 < nu; ++t2)
            r.pairwise[t][t2] = scan_criterion(tab, t, t2, m, n).has_value();

    // Independent count: connected blocks of the pairwise table.
    for (int t = 0; t < nu; ++t) {
        if (!r.pairwise[t][t]) throw Error("internal: pairwise table not reflexive");
        for (int t2 = 0; t2 < nu; ++t2)
            if (r.pairwise[t][t2] != r.pairwise[t2][t])
                throw Error("internal: pairwise table not symmetric");
    }
    std::vector<int> block(nu, -1);
    int blocks = 0;
    for (int t = 0; t < nu; ++t) {
        if (block[t] >= 0) continue;
        std::vector<int> stack{t};
        block[t] = blocks;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < nu; ++v)
                if (r.pairwise[u][v] && block[v] < 0) {
                    block[v] = blocks;
                    stack.push_back(v);
                }
        }
        ++blocks;
    }
    if (static_cast<std::uint64_t>(blocks) != r.count)
        throw Error("internal: closed-formula count " + std::to_string(r.count) +
                    " disagrees with the pairwise partition (" + std::to_string(blocks) +
                    " blocks)");

    for (const std::uint64_t rep : r.representatives) {
        AutGroup g = automorphism_group(static_cast<std::int64_t>(rep % r.nu), m, n, field);
        g.t = static_cast<std::int64_t>(rep);
        r.aut.push_back(std::move(g));
    }
    return r;
}

namespace {

// All p^k coefficient tuples over a basis of a solution space.
class SpaceOdometer {
  public:
    SpaceOdometer(const Field& f, std::vector<Vec> basis, int dim)
        : f_(f), basis_(std::move(basis)), digits_(basis_.size(), 0), dim_(dim) {}

    SparseVec current() const {
        Vec v(dim_, f_.zero());
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            if (digits_[b] == 0) continue;
            const FieldElem c = f_.from_int(static_cast<std::int64_t>(digits_[b]));
            for (int i = 0; i < dim_; ++i) v[i] += c * basis_[b][i];
        }
        return sv_from_dense(v);
    }

    bool advance() {
        for (std::size_t b = 0; b < digits_.size(); ++b) {
            if (++digits_[b] < f_.spec().p) return true;
            digits_[b] = 0;
        }
        return false;
    }

  private:
    const Field& f_;
    std::vector<Vec> basis_;
    std::vector<std::uint64_t> digits_;
    int dim_;
};

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

}  // namespace

std::vector<LinearMap> brute_force_hopf_isos(const HopfAlgebra& h1,
                                             const HopfAlgebra& h2, int m, int n,
                                             std::uint64_t budget) {
    std::vector<LinearMap> isos;
    if (h1.dim != h2.dim) return isos;
    if (!(h1.field->spec() == h2.field->spec())) return isos;
    if (h1.dim != n * m * m) throw Error("brute_force_hopf_isos: dim != n m^2");
    const Field& f = *h1.field;
    if (!f.is_prime_field())
        throw BudgetExceededError(
            "BudgetExceeded: the brute-force oracle needs a finite prime field");

    auto idx = [&](int j, int k, int i) { return (j * m + k) * n + i; };
    auto coeff_of = [&](const SparseVec& v, int at) {
        for (const auto& [i, c] : v)
            if (i == at) return c;
        return f.zero();
    };
    // Read q and omega off the relations of h1: x h = q h x, g x = omega x g.
    const FieldElem q1 = coeff_of(h1.mul(idx(0, 1, 0), idx(1, 0, 0)), idx(1, 1, 0));
    const FieldElem w1 = coeff_of(h1.mul(idx(0, 0, 1 % n), idx(0, 1, 0)),
                                  idx(0, 1, 1 % n));

    const std::vector<Vec> gl = group_likes(h2);
    const Vec unit_dense = h2.unit;
    std::vector<std::vector<Vec>> prim(gl.size());
    std::uint64_t per_g = 0;
    for (std::size_t i = 0; i < gl.size(); ++i) {
        prim[i] = skew_primitives(h2, gl[i], unit_dense);
        std::uint64_t cnt = 1;
        for (std::size_t b = 0; b < prim[i].size(); ++b) cnt = sat_mul(cnt, f.spec().p);
        per_g += cnt;
    }
    const std::uint64_t total = sat_mul(gl.size(), per_g);
    if (total > budget)
        throw BudgetExceededError("BudgetExceeded: generator-image grid of size " +
                                  std::to_string(total) + " exceeds budget " +
                                  std::to_string(budget));

    const SparseVec one = sv_from_dense(h2.unit);
    auto power = [&](const SparseVec& base, int e) {
        SparseVec acc = one;
        for (int c = 0; c < e; ++c) acc = h2.product(acc, base);
        return acc;
    };
    auto scaled = [&](const FieldElem& c, const SparseVec& v) {
        SparseVec out;
        sv_add(out, c, v);
        return sv_canonicalize(std::move(out));
    };

    for (std::size_t gi = 0; gi < gl.size(); ++gi) {
        const SparseVec gprime = sv_from_dense(gl[gi]);
        if (!sv_equal(power(gprime, n), one)) continue;  // g'^n = 1
        for (std::size_t hi = 0; hi < gl.size(); ++hi) {
            const SparseVec hprime = sv_from_dense(gl[hi]);
            if (!sv_equal(power(hprime, m), one)) continue;  // h'^m = 1
            if (!sv_equal(h2.product(hprime, gprime), h2.product(gprime, hprime)))
                continue;  // h'g' = g'h'
            SpaceOdometer od(f, prim[hi], h2.dim);
            do {
                const SparseVec xprime = od.current();
                if (!power(xprime, m).empty()) continue;  // x'^m = 0
                if (!sv_equal(h2.product(xprime, hprime),
                              scaled(q1, h2.product(hprime, xprime))))
                    continue;  // x'h' = q h'x'
                if (!sv_equal(h2.product(gprime, xprime),
                              scaled(w1, h2.product(xprime, gprime))))
                    continue;  // g'x' = omega x'g'

                std::vector<SparseVec> hp(m), xp(m), gp(n);
                for (int j = 0; j < m; ++j) hp[j] = power(hprime, j);
                for (int k = 0; k < m; ++k) xp[k] = power(xprime, k);
                for (int i = 0; i < n; ++i) gp[i] = power(gprime, i);
                Matrix mat(f, h2.dim, h1.dim);
                for (int j = 0; j < m; ++j)
                    for (int k = 0; k < m; ++k)
                        for (int i = 0; i < n; ++i) {
                            const SparseVec img =
                                h2.product(h2.product(hp[j], xp[k]), gp[i]);
                            for (const auto& [r, c] : img) mat.at(r, idx(j, k, i)) = c;
                        }
                LinearMap cand{std::make_shared<HopfAlgebra>(h1),
                               std::make_shared<HopfAlgebra>(h2), std::move(mat)};
                if (!is_hopf_morphism(cand).pass()) continue;
                if (!is_bijective(cand)) continue;
                isos.push_back(std::move(cand));
            } while (od.advance());
        }
    }
    return isos;
}

}  // namespace hopffact
