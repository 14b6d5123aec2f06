#include "hopffact/constructions.hpp"

#include <map>
#include <sstream>

namespace hopffact {

namespace {

std::string taft_label(int i, int j) {
    return "h^" + std::to_string(i) + " x^" + std::to_string(j);
}

void require_primitive_root(const Field& field, int m, const FieldElem& q) {
    (void)field;
    if (m < 2) throw BadRootError("BadRoot: Taft order m must be >= 2");
    if (!q.pow(m).is_one())
        throw BadRootError("BadRoot: q^m != 1 (q = " + q.str() + ", m = " +
                           std::to_string(m) + ")");
    for (const auto& [r, e] : factorize(static_cast<std::uint64_t>(m)).factors) {
        (void)e;
        if (q.pow(m / static_cast<std::int64_t>(r)).is_one())
            throw BadRootError("BadRoot: q has order smaller than m = " +
                               std::to_string(m));
    }
}

}  // namespace

/// [j choose c]_q via the q-Pascal recurrence; valid for all j < m, no
/// division by q-integers needed.
std::vector<std::vector<FieldElem>> gaussian_binomials(const Field& f, int m,
                                                       const FieldElem& q) {
    std::vector<std::vector<FieldElem>> g(m);
    std::vector<FieldElem> qpow(m, f.one());
    for (int c = 1; c < m; ++c) qpow[c] = qpow[c - 1] * q;
    for (int j = 0; j < m; ++j) {
        g[j].assign(j + 1, f.zero());
        g[j][0] = f.one();
        g[j][j] = f.one();
        for (int c = 1; c < j; ++c) g[j][c] = g[j - 1][c - 1] + qpow[c] * g[j - 1][c];
    }
    return g;
}

HopfAlgebra taft(const Field& field, int m, const FieldElem& q) {
    require_primitive_root(field, m, q);
    HopfAlgebra h;
    h.field = &field;
    h.dim = m * m;
    h.pointed_monomial_basis = true;
    auto idx = [m](int i, int j) { return i * m + j; };
    h.basis_labels.resize(h.dim);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) h.basis_labels[idx(i, j)] = taft_label(i, j);

    std::vector<FieldElem> qpow(2 * m, field.one());
    for (std::size_t c = 1; c < qpow.size(); ++c) qpow[c] = qpow[c - 1] * q;

    // (h^i x^j)(h^i' x^j') = q^{j i'} h^{i+i'} x^{j+j'}, truncated at x^m = 0.
    h.mult.assign(static_cast<std::size_t>(h.dim) * h.dim, {});
    for (int i1 = 0; i1 < m; ++i1)
        for (int j1 = 0; j1 < m; ++j1)
            for (int i2 = 0; i2 < m; ++i2)
                for (int j2 = 0; j2 < m; ++j2) {
                    if (j1 + j2 >= m) continue;
                    h.mul(idx(i1, j1), idx(i2, j2)) = {
                        {idx((i1 + i2) % m, j1 + j2), qpow[(j1 * i2) % m]}};
                }

    h.unit.assign(h.dim, field.zero());
    h.unit[idx(0, 0)] = field.one();
    h.counit.assign(h.dim, field.zero());
    for (int i = 0; i < m; ++i) h.counit[idx(i, 0)] = field.one();

    const auto gauss = gaussian_binomials(field, m, q);
    h.comult.resize(h.dim);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            auto& row = h.comult[idx(i, j)];
            for (int c = 0; c <= j; ++c)
                row.push_back({idx(i, c), idx((i + c) % m, j - c), gauss[j][c]});
        }

    // S(h) = h^{m-1}, S(x) = -x h^{m-1} = -q^{m-1} h^{m-1} x; antipode on the
    // basis via S(h^i x^j) = S(x)^j S(h)^i.
    h.antipode = Matrix(field, h.dim, h.dim);
    const SparseVec sh{{idx(m - 1, 0), field.one()}};
    const SparseVec sx{{idx(m - 1, 1), -qpow[(m - 1) % m]}};
    const SparseVec one{{idx(0, 0), field.one()}};
    auto power = [&](const SparseVec& base, int e) {
        SparseVec acc = one;
        for (int t = 0; t < e; ++t) acc = h.product(acc, base);
        return acc;
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const SparseVec s = h.product(power(sx, j), power(sh, i));
            for (const auto& [k, c] : s) h.antipode.at(k, idx(i, j)) = c;
        }
    return h;
}

HopfAlgebra group_algebra(const Field& field, int n) {
    if (n < 1) throw Error("group_algebra: n must be >= 1");
    HopfAlgebra h;
    h.field = &field;
    h.dim = n;
    h.pointed_monomial_basis = true;
    h.basis_labels.resize(n);
    for (int i = 0; i < n; ++i) h.basis_labels[i] = "g^" + std::to_string(i);
    h.mult.assign(static_cast<std::size_t>(n) * n, {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h.mul(i, j) = {{(i + j) % n, field.one()}};
    h.unit.assign(n, field.zero());
    h.unit[0] = field.one();
    h.counit.assign(n, field.one());
    h.comult.resize(n);
    for (int i = 0; i < n; ++i) h.comult[i].push_back({i, i, field.one()});
    h.antipode = Matrix(field, n, n);
    for (int i = 0; i < n; ++i) h.antipode.at((n - i) % n, i) = field.one();
    return h;
}

SparseVec MatchedPair::act_left(const SparseVec& y, const SparseVec& a) const {
    SparseVec out;
    for (const auto& [yi, cy] : y)
        for (const auto& [ai, ca] : a) {
            const FieldElem c = cy * ca;
            for (const auto& [t, ct] : lact(yi, ai)) out.emplace_back(t, c * ct);
        }
    return sv_canonicalize(std::move(out));
}

SparseVec MatchedPair::act_right(const SparseVec& y, const SparseVec& a) const {
    SparseVec out;
    for (const auto& [yi, cy] : y)
        for (const auto& [ai, ca] : a) {
            const FieldElem c = cy * ca;
            for (const auto& [t, ct] : ract(yi, ai)) out.emplace_back(t, c * ct);
        }
    return sv_canonicalize(std::move(out));
}

bool MatchedPair::right_action_trivial() const {
    for (int y = 0; y < H->dim; ++y)
        for (int a = 0; a < A->dim; ++a) {
            SparseVec want;
            if (!A->counit[a].is_zero()) want.emplace_back(y, A->counit[a]);
            if (!sv_equal(ract(y, a), want)) return false;
        }
    return true;
}

bool actions_equal(const MatchedPair& a, const MatchedPair& b) {
    if (a.A->dim != b.A->dim || a.H->dim != b.H->dim) return false;
    for (std::size_t i = 0; i < a.left.size(); ++i)
        if (!sv_equal(a.left[i], b.left[i]) || !sv_equal(a.right[i], b.right[i]))
            return false;
    return true;
}

MatchedPair standard_matched_pair(const Field& field, int m, const FieldElem& q,
                                  int n, const FieldElem& omega) {
    if (!omega.pow(n).is_one())
        throw NotARootError("NotARoot: omega^n != 1 (omega = " + omega.str() +
                            ", n = " + std::to_string(n) + ")");
    MatchedPair mp;
    mp.A = std::make_shared<HopfAlgebra>(taft(field, m, q));
    mp.H = std::make_shared<HopfAlgebra>(group_algebra(field, n));
    mp.omega = omega;
    mp.provenance = "standard pair, omega = " + omega.str();
    const int dimA = mp.A->dim;
    mp.left.assign(static_cast<std::size_t>(n) * dimA, {});
    mp.right.assign(static_cast<std::size_t>(n) * dimA, {});
    std::vector<FieldElem> wpow(n, field.one());
    for (int i = 1; i < n; ++i) wpow[i] = wpow[i - 1] * omega;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                const int a = j * m + k;
                mp.left[static_cast<std::size_t>(i) * dimA + a] = {
                    {a, wpow[(i * k) % n]}};
                if (k == 0)
                    mp.right[static_cast<std::size_t>(i) * dimA + a] = {{i, field.one()}};
            }
    return mp;
}

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

std::string pair_witness(int y, int a, const std::string& what) {
    return "y=" + std::to_string(y) + " a=" + std::to_string(a) + ": " + what;
}

}  // namespace

AxiomReport verify_matched_pair(const MatchedPair& mp) {
    const HopfAlgebra& A = *mp.A;
    const HopfAlgebra& H = *mp.H;
    const Field& f = *A.field;
    AxiomReport report;
    const SparseVec oneA = sv_from_dense(A.unit);
    const SparseVec oneH = sv_from_dense(H.unit);

    {
        AxiomCheck chk{"left action coalgebra map", true, ""};
        for (int y = 0; y < H.dim && chk.pass; ++y)
            for (int a = 0; a < A.dim && chk.pass; ++a) {
                const SparseVec& img = mp.lact(y, a);
                Tensor2 lhs, rhs;
                for (const auto& [t, ct] : img)
                    for (const auto& leg : A.comult[t]) t2_insert(lhs, leg.j, leg.k, ct * leg.c);
                for (const auto& ly : H.comult[y])
                    for (const auto& la : A.comult[a]) {
                        const FieldElem c = ly.c * la.c;
                        for (const auto& [u, cu] : mp.lact(ly.j, la.j))
                            for (const auto& [v, cv] : mp.lact(ly.k, la.k))
                                t2_insert(rhs, u, v, c * cu * cv);
                    }
                t2_prune(lhs);
                t2_prune(rhs);
                if (lhs != rhs) {
                    chk.pass = false;
                    chk.witness = pair_witness(y, a, "Delta(y|>a) != (y1|>a1) tensor (y2|>a2)");
                    break;
                }
                FieldElem el = f.zero();
                for (const auto& [t, ct] : img) el += ct * A.counit[t];
                const FieldElem er = H.counit[y] * A.counit[a];
                if (el != er) {
                    chk.pass = false;
                    chk.witness = pair_witness(y, a, "eps(y|>a)=" + el.str() + " vs " + er.str());
                }
            }
        report.checks.push_back(std::move(chk));
    }
    {
        AxiomCheck chk{"left module", true, ""};
        for (int a = 0; a < A.dim && chk.pass; ++a) {
            const SparseVec img = mp.act_left(oneH, SparseVec{{a, f.one()}});
            if (!sv_equal(img, SparseVec{{a, f.one()}})) {
                chk.pass = false;
                chk.witness = "1_H |> e_" + std::to_string(a) + " != e_" + std::to_string(a);
            }
        }
        for (int y = 0; y < H.dim && chk.pass; ++y)
            for (int z = 0; z < H.dim && chk.pass; ++z)
                for (int a = 0; a < A.dim && chk.pass; ++a) {
                    const SparseVec lhs = mp.act_left(H.mul(y, z), SparseVec{{a, f.one()}});
                    const SparseVec rhs =
                        mp.act_left(SparseVec{{y, f.one()}},
                                    mp.act_left(SparseVec{{z, f.one()}}, SparseVec{{a, f.one()}}));
                    if (!sv_equal(lhs, rhs)) {
                        chk.pass = false;
                        std::ostringstream os;
                        os << "y=" << y << " z=" << z << " a=" << a << ": (yz)|>a != y|>(z|>a)";
                        chk.witness = os.str();
                    }
                }
        report.checks.push_back(std::move(chk));
    }
    {
        AxiomCheck chk{"right action coalgebra map", true, ""};
        for (int y = 0; y < H.dim && chk.pass; ++y)
            for (int a = 0; a < A.dim && chk.pass; ++a) {
                const SparseVec& img = mp.ract(y, a);
                Tensor2 lhs, rhs;
                for (const auto& [t, ct] : img)
                    for (const auto& leg : H.comult[t]) t2_insert(lhs, leg.j, leg.k, ct * leg.c);
                for (const auto& ly : H.comult[y])
                    for (const auto& la : A.comult[a]) {
                        const FieldElem c = ly.c * la.c;
                        for (const auto& [u, cu] : mp.ract(ly.j, la.j))
                            for (const auto& [v, cv] : mp.ract(ly.k, la.k))
                                t2_insert(rhs, u, v, c * cu * cv);
                    }
                t2_prune(lhs);
                t2_prune(rhs);
                if (lhs != rhs) {
                    chk.pass = false;
                    chk.witness = pair_witness(y, a, "Delta(y<|a) != (y1<|a1) tensor (y2<|a2)");
                    break;
                }
                FieldElem el = f.zero();
                for (const auto& [t, ct] : img) el += ct * H.counit[t];
                const FieldElem er = H.counit[y] * A.counit[a];
                if (el != er) {
                    chk.pass = false;
                    chk.witness = pair_witness(y, a, "eps(y<|a)=" + el.str() + " vs " + er.str());
                }
            }
        report.checks.push_back(std::move(chk));
    }
    {
        AxiomCheck chk{"right module", true, ""};
        for (int y = 0; y < H.dim && chk.pass; ++y) {
            const SparseVec img = mp.act_right(SparseVec{{y, f.one()}}, oneA);
            if (!sv_equal(img, SparseVec{{y, f.one()}})) {
                chk.pass = false;
                chk.witness = "e_" + std::to_string(y) + " <| 1_A mismatch";
            }
        }
        for (int y = 0; y < H.dim && chk.pass; ++y)
            for (int a = 0; a < A.dim && chk.pass; ++a)
                for (int b = 0; b < A.dim && chk.pass; ++b) {
                    const SparseVec lhs = mp.act_right(SparseVec{{y, f.one()}}, A.mul(a, b));
                    const SparseVec rhs =
                        mp.act_right(mp.act_right(SparseVec{{y, f.one()}}, SparseVec{{a, f.one()}}),
                                     SparseVec{{b, f.one()}});
                    if (!sv_equal(lhs, rhs)) {
                        chk.pass = false;
                        std::ostringstream os;
                        os << "y=" << y << " a=" << a << " b=" << b << ": y<|(ab) != (y<|a)<|b";
                        chk.witness = os.str();
                    }
                }
        report.checks.push_back(std::move(chk));
    }
    {
        AxiomCheck chk{"(mp1) unit conditions", true, ""};
        for (int y = 0; y < H.dim && chk.pass; ++y) {
            SparseVec want;
            if (!H.counit[y].is_zero()) sv_add(want, H.counit[y], oneA);
            const SparseVec img = mp.act_left(SparseVec{{y, f.one()}}, oneA);
            if (!sv_equal(img, sv_canonicalize(std::move(want)))) {
                chk.pass = false;
                chk.witness = "y=" + std::to_string(y) + ": y |> 1_A != eps_H(y) 1_A";
            }
        }
        for (int a = 0; a < A.dim && chk.pass; ++a) {
            SparseVec want;
            if (!A.counit[a].is_zero()) sv_add(want, A.counit[a], oneH);
            const SparseVec img = mp.act_right(oneH, SparseVec{{a, f.one()}});
            if (!sv_equal(img, sv_canonicalize(std::move(want)))) {
                chk.pass = false;
                chk.witness = "a=" + std::to_string(a) + ": 1_H <| a != eps_A(a) 1_H";
            }
        }
        report.checks.push_back(std::move(chk));
    }
    {
        AxiomCheck chk{"(mp2)", true, ""};
        for (int y = 0; y < H.dim && chk.pass; ++y)
            for (int a = 0; a < A.dim && chk.pass; ++a)
                for (int b = 0; b < A.dim && chk.pass; ++b) {
                    const SparseVec lhs = mp.act_left(SparseVec{{y, f.one()}}, A.mul(a, b));
                    SparseVec rhs;
                    for (const auto& ly : H.comult[y])
                        for (const auto& la : A.comult[a]) {
                            const FieldElem c = ly.c * la.c;
                            const SparseVec inner = mp.act_left(
                                mp.ract(ly.k, la.k), SparseVec{{b, f.one()}});
                            const SparseVec prod = A.product(mp.lact(ly.j, la.j), inner);
                            sv_add(rhs, c, prod);
                        }
                    if (!sv_equal(lhs, sv_canonicalize(std::move(rhs)))) {
                        chk.pass = false;
                        std::ostringstream os;
                        os << "y=" << y << " a=" << a << " b=" << b
                           << ": y|>(ab) != (y1|>a1)((y2<|a2)|>b)";
                        chk.witness = os.str();
                    }
                }
        report.checks.push_back(std::move(chk));
    }
    {
        AxiomCheck chk{"(mp3)", true, ""};
        for (int y = 0; y < H.dim && chk.pass; ++y)
            for (int z = 0; z < H.dim && chk.pass; ++z)
                for (int a = 0; a < A.dim && chk.pass; ++a) {
                    const SparseVec lhs = mp.act_right(H.mul(y, z), SparseVec{{a, f.one()}});
                    SparseVec rhs;
                    for (const auto& lz : H.comult[z])
                        for (const auto& la : A.comult[a]) {
                            const FieldElem c = lz.c * la.c;
                            const SparseVec inner = mp.act_right(
                                SparseVec{{y, f.one()}}, mp.lact(lz.j, la.j));
                            const SparseVec prod = H.product(inner, mp.ract(lz.k, la.k));
                            sv_add(rhs, c, prod);
                        }
                    if (!sv_equal(lhs, sv_canonicalize(std::move(rhs)))) {
                        chk.pass = false;
                        std::ostringstream os;
                        os << "y=" << y << " z=" << z << " a=" << a
                           << ": (yz)<|a != (y<|(z1|>a1))(z2<|a2)";
                        chk.witness = os.str();
                    }
                }
        report.checks.push_back(std::move(chk));
    }
    {
        AxiomCheck chk{"(mp4)", true, ""};
        for (int y = 0; y < H.dim && chk.pass; ++y)
            for (int a = 0; a < A.dim && chk.pass; ++a) {
                Tensor2 lhs, rhs;
                for (const auto& ly : H.comult[y])
                    for (const auto& la : A.comult[a]) {
                        const FieldElem c = ly.c * la.c;
                        for (const auto& [u, cu] : mp.ract(ly.j, la.j))
                            for (const auto& [v, cv] : mp.lact(ly.k, la.k))
                                t2_insert(lhs, u, v, c * cu * cv);
                        for (const auto& [u, cu] : mp.ract(ly.k, la.k))
                            for (const auto& [v, cv] : mp.lact(ly.j, la.j))
                                t2_insert(rhs, u, v, c * cu * cv);
                    }
                t2_prune(lhs);
                t2_prune(rhs);
                if (lhs != rhs) {
                    chk.pass = false;
                    chk.witness = pair_witness(y, a, "y1<|a1 tensor y2|>a2 asymmetry");
                }
            }
        report.checks.push_back(std::move(chk));
    }
    return report;
}

}  // namespace hopffact
