#include <cmath>
#include <map>
#include <sstream>

#include "hopffact/constructions.hpp"

namespace hopffact {

namespace {

using Tensor2 = std::map<std::pair<int, int>, FieldElem>;

void t2_insert(Tensor2& t, int j, int k, const FieldElem& c) {
    auto [it, inserted] = t.try_emplace({j, k}, c);
    if (!inserted) it->second += c;
}

void t2_prune(Tensor2& t) {
    for (auto it = t.begin(); it != t.end();)
        it = it->second.is_zero() ? t.erase(it) : std::next(it);
}

std::vector<SparseVec> columns_of(const LinearMap& f) {
    std::vector<SparseVec> cols(f.source->dim);
    for (int i = 0; i < f.source->dim; ++i) cols[i] = sv_from_dense(f.matrix.col(i));
    return cols;
}

SparseVec apply_cols(const std::vector<SparseVec>& cols, const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, c] : v) sv_add(out, c, cols[i]);
    return sv_canonicalize(std::move(out));
}

/// f(1) = 1, Delta f = (f tensor f) Delta, eps f = eps.
AxiomCheck unitary_coalgebra_map_check(const std::string& name, const LinearMap& f) {
    AxiomCheck chk{name, true, ""};
    const HopfAlgebra& src = *f.source;
    const HopfAlgebra& dst = *f.target;
    const auto cols = columns_of(f);
    if (!sv_equal(apply_cols(cols, sv_from_dense(src.unit)), sv_from_dense(dst.unit))) {
        chk.pass = false;
        chk.witness = "does not preserve the unit";
        return chk;
    }
    for (int i = 0; i < src.dim; ++i) {
        Tensor2 lhs, rhs;
        for (const auto& [l, cl] : cols[i])
            for (const auto& t : dst.comult[l]) t2_insert(lhs, t.j, t.k, cl * t.c);
        for (const auto& t : src.comult[i])
            for (const auto& [u, cu] : cols[t.j])
                for (const auto& [v, cv] : cols[t.k]) t2_insert(rhs, u, v, t.c * cu * cv);
        t2_prune(lhs);
        t2_prune(rhs);
        if (lhs != rhs) {
            chk.pass = false;
            chk.witness = "not a coalgebra map at basis index " + std::to_string(i);
            return chk;
        }
        FieldElem e = src.field->zero();
        for (const auto& [l, cl] : cols[i]) e += cl * dst.counit[l];
        if (e != src.counit[i]) {
            chk.pass = false;
            chk.witness = "does not preserve the counit at basis index " + std::to_string(i);
            return chk;
        }
    }
    return chk;
}

AxiomCheck hopf_map_check(const std::string& name, const LinearMap& f) {
    AxiomCheck chk{name, true, ""};
    const AxiomReport rep = is_hopf_morphism(f);
    if (!rep.pass()) {
        chk.pass = false;
        const AxiomCheck* fail = rep.first_failure();
        chk.witness = fail->axiom + ": " + fail->witness;
    }
    return chk;
}

}  // namespace

Quadruple standard_quadruple(const HopfAlgebra& taft_alg, const HopfAlgebra& group_alg,
                             const FieldElem& gamma, int l, int s, int c) {
    if (gamma.is_zero()) throw Error("standard_quadruple: gamma must be nonzero");
    const int n = group_alg.dim;
    const int m = static_cast<int>(std::lround(std::sqrt(double(taft_alg.dim))));
    if (m * m != taft_alg.dim) throw Error("standard_quadruple: A is not Taft-shaped");
    if (l < 0 || l >= m || s < 0 || s >= n || c < 0 || c >= n)
        throw Error("standard_quadruple: parameters out of range");
    const Field& f = *taft_alg.field;
    auto A = std::make_shared<HopfAlgebra>(taft_alg);
    auto H = std::make_shared<HopfAlgebra>(group_alg);

    Quadruple quad;
    quad.gamma = gamma;
    quad.l = l;
    quad.s = s;
    quad.c = c;

    Matrix u(f, A->dim, A->dim);
    std::vector<FieldElem> gpow(m, f.one());
    for (int j = 1; j < m; ++j) gpow[j] = gpow[j - 1] * gamma;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) u.at(i * m + j, i * m + j) = gpow[j];
    quad.u = LinearMap{A, A, std::move(u)};

    Matrix p(f, H->dim, A->dim);
    for (int i = 0; i < m; ++i) p.at((i * c) % n, i * m + 0) = f.one();
    quad.p = LinearMap{A, H, std::move(p)};

    Matrix r(f, A->dim, H->dim);
    for (int k = 0; k < n; ++k) r.at(((k * l) % m) * m + 0, k) = f.one();
    quad.r = LinearMap{H, A, std::move(r)};

    Matrix v(f, H->dim, H->dim);
    for (int k = 0; k < n; ++k) v.at((k * s) % n, k) = f.one();
    quad.v = LinearMap{H, H, std::move(v)};
    return quad;
}

std::pair<LinearMap, AxiomReport> quadruple_morphism(const Quadruple& quad,
                                                     const MatchedPair& src,
                                                     const MatchedPair& dst) {
    if (!src.right_action_trivial() || !dst.right_action_trivial())
        throw Error("quadruple_morphism: defined between smash products "
                    "(right actions must be trivial)");
    const HopfAlgebra& A = *src.A;
    const HopfAlgebra& H = *src.H;
    const Field& f = *A.field;
    AxiomReport report;

    const auto ucol = columns_of(quad.u);
    const auto pcol = columns_of(quad.p);
    const auto rcol = columns_of(quad.r);
    const auto vcol = columns_of(quad.v);

    report.checks.push_back(unitary_coalgebra_map_check("u is a unitary coalgebra map", quad.u));
    report.checks.push_back(unitary_coalgebra_map_check("r is a unitary coalgebra map", quad.r));
    report.checks.push_back(hopf_map_check("p is a Hopf algebra map", quad.p));
    report.checks.push_back(hopf_map_check("v is a Hopf algebra map", quad.v));

    {
        AxiomCheck chk{"(C1) u/p cosymmetry", true, ""};
        for (int a = 0; a < A.dim && chk.pass; ++a) {
            Tensor2 lhs, rhs;
            for (const auto& t : A.comult[a]) {
                for (const auto& [x, cx] : ucol[t.j])
                    for (const auto& [y, cy] : pcol[t.k]) t2_insert(lhs, x, y, t.c * cx * cy);
                for (const auto& [x, cx] : ucol[t.k])
                    for (const auto& [y, cy] : pcol[t.j]) t2_insert(rhs, x, y, t.c * cx * cy);
            }
            t2_prune(lhs);
            t2_prune(rhs);
            if (lhs != rhs) {
                chk.pass = false;
                chk.witness = "u(a1) (x) p(a2) != u(a2) (x) p(a1) at basis index " +
                              std::to_string(a);
            }
        }
        report.checks.push_back(std::move(chk));
    }
    {
        AxiomCheck chk{"(C2) r/v cosymmetry", true, ""};
        for (int t = 0; t < H.dim && chk.pass; ++t) {
            Tensor2 lhs, rhs;
            for (const auto& leg : H.comult[t]) {
                for (const auto& [x, cx] : rcol[leg.j])
                    for (const auto& [y, cy] : vcol[leg.k]) t2_insert(lhs, x, y, leg.c * cx * cy);
                for (const auto& [x, cx] : rcol[leg.k])
                    for (const auto& [y, cy] : vcol[leg.j]) t2_insert(rhs, x, y, leg.c * cx * cy);
            }
            t2_prune(lhs);
            t2_prune(rhs);
            if (lhs != rhs) {
                chk.pass = false;
                chk.witness = "r(t1) (x) v(t2) != r(t2) (x) v(t1) at basis index " +
                              std::to_string(t);
            }
        }
        report.checks.push_back(std::move(chk));
    }
    {
        AxiomCheck chk{"(C3)", true, ""};
        for (int a = 0; a < A.dim && chk.pass; ++a)
            for (int b = 0; b < A.dim && chk.pass; ++b) {
                const SparseVec lhs = apply_cols(ucol, A.mul(a, b));
                SparseVec rhs;
                for (const auto& t : A.comult[a]) {
                    const SparseVec acted = dst.act_left(pcol[t.k], ucol[b]);
                    sv_add(rhs, t.c, A.product(ucol[t.j], acted));
                }
                if (!sv_equal(lhs, sv_canonicalize(std::move(rhs)))) {
                    chk.pass = false;
                    chk.witness = "u(ab) != u(a1)(p(a2) |>' u(b)) at a=" + std::to_string(a) +
                                  " b=" + std::to_string(b);
                }
            }
        report.checks.push_back(std::move(chk));
    }
    {
        AxiomCheck chk{"(C4)", true, ""};
        for (int t = 0; t < H.dim && chk.pass; ++t)
            for (int w = 0; w < H.dim && chk.pass; ++w) {
                const SparseVec lhs = apply_cols(rcol, H.mul(t, w));
                SparseVec rhs;
                for (const auto& leg : H.comult[t]) {
                    const SparseVec acted = dst.act_left(vcol[leg.k], rcol[w]);
                    sv_add(rhs, leg.c, A.product(rcol[leg.j], acted));
                }
                if (!sv_equal(lhs, sv_canonicalize(std::move(rhs)))) {
                    chk.pass = false;
                    chk.witness = "r(tw) != r(t1)(v(t2) |>' r(w)) at t=" + std::to_string(t) +
                                  " w=" + std::to_string(w);
                }
            }
        report.checks.push_back(std::move(chk));
    }
    {
        AxiomCheck chk{"(C5)", true, ""};
        for (int t = 0; t < H.dim && chk.pass; ++t)
            for (int b = 0; b < A.dim && chk.pass; ++b) {
                SparseVec lhs;
                for (const auto& leg : H.comult[t]) {
                    const SparseVec acted = dst.act_left(vcol[leg.k], ucol[b]);
                    sv_add(lhs, leg.c, A.product(rcol[leg.j], acted));
                }
                SparseVec rhs;
                // Delta^2(t) legs (t1, t2, t3) and Delta(b) legs (b1, b2).
                for (const auto& l1 : H.comult[t])
                    for (const auto& l2 : H.comult[l1.k])
                        for (const auto& lb : A.comult[b]) {
                            const FieldElem c = l1.c * l2.c * lb.c;
                            const SparseVec ub = apply_cols(ucol, src.lact(l1.j, lb.j));
                            const SparseVec pb = apply_cols(pcol, src.lact(l2.j, lb.k));
                            const SparseVec acted = dst.act_left(pb, rcol[l2.k]);
                            sv_add(rhs, c, A.product(ub, acted));
                        }
                if (!sv_equal(sv_canonicalize(std::move(lhs)), sv_canonicalize(std::move(rhs)))) {
                    chk.pass = false;
                    chk.witness = "(C5) fails at t=" + std::to_string(t) + " b=" +
                                  std::to_string(b);
                }
            }
        report.checks.push_back(std::move(chk));
    }
    {
        AxiomCheck chk{"(C6)", true, ""};
        for (int t = 0; t < H.dim && chk.pass; ++t)
            for (int b = 0; b < A.dim && chk.pass; ++b) {
                const SparseVec lhs = H.product(vcol[t], pcol[b]);
                SparseVec rhs;
                for (const auto& leg : H.comult[t]) {
                    const SparseVec pb = apply_cols(pcol, src.lact(leg.j, b));
                    sv_add(rhs, leg.c, H.product(pb, vcol[leg.k]));
                }
                if (!sv_equal(lhs, sv_canonicalize(std::move(rhs)))) {
                    chk.pass = false;
                    chk.witness = "v(t)p(b) != p(t1|>b)v(t2) at t=" + std::to_string(t) +
                                  " b=" + std::to_string(b);
                }
            }
        report.checks.push_back(std::move(chk));
    }

    auto esrc = std::make_shared<HopfAlgebra>(smash_product(A, H, src.left));
    auto edst = std::make_shared<HopfAlgebra>(smash_product(*dst.A, *dst.H, dst.left));

    // psi(a # t) = u(a1) (p(a2) |>' r(t1)) #' p(a3) v(t2)
    Matrix psi(f, edst->dim, esrc->dim);
    auto idx = [&](int a, int y) { return a * H.dim + y; };
    for (int a = 0; a < A.dim; ++a)
        for (int y = 0; y < H.dim; ++y) {
            SparseVec acc;
            for (const auto& l1 : A.comult[a])
                for (const auto& l2 : A.comult[l1.k])
                    for (const auto& ly : H.comult[y]) {
                        const FieldElem c = l1.c * l2.c * ly.c;
                        const SparseVec acted = dst.act_left(pcol[l2.j], rcol[ly.j]);
                        const SparseVec lhsA = A.product(ucol[l1.j], acted);
                        const SparseVec rhsH = H.product(pcol[l2.k], vcol[ly.k]);
                        for (const auto& [x, cx] : lhsA)
                            for (const auto& [z, cz] : rhsH)
                                acc.emplace_back(idx(x, z), c * cx * cz);
                    }
            for (const auto& [k, c] : sv_canonicalize(std::move(acc)))
                psi.at(k, idx(a, y)) = c;
        }
    LinearMap map{esrc, edst, std::move(psi)};
    report.checks.push_back(hopf_map_check("psi is a Hopf algebra morphism", map));
    return {std::move(map), std::move(report)};
}

}  // namespace hopffact
