#include "hopffact/hopf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hopffact {

SparseVec sv_canonicalize(SparseVec v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    out.reserve(v.size());
    for (auto& [idx, c] : v) {
        if (!out.empty() && out.back().first == idx)
            out.back().second += c;
        else
            out.emplace_back(idx, std::move(c));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& t) { return t.second.is_zero(); }),
              out.end());
    return out;
}

SparseVec sv_from_dense(const Vec& v) {
    SparseVec out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.emplace_back(static_cast<int>(i), v[i]);
    return out;
}

Vec sv_to_dense(const Field& field, int dim, const SparseVec& v) {
    Vec out(dim, field.zero());
    for (const auto& [idx, c] : v) out[idx] = c;
    return out;
}

bool sv_equal(const SparseVec& a, const SparseVec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].first != b[i].first || a[i].second != b[i].second) return false;
    return true;
}

void sv_add(SparseVec& dst, const FieldElem& c, const SparseVec& src) {
    for (const auto& [idx, v] : src) dst.emplace_back(idx, c * v);
}

namespace {

void sv_add_scaled(SparseVec& dst, const FieldElem& c, const SparseVec& row) {
    for (const auto& [idx, v] : row) dst.emplace_back(idx, c * v);
}

std::string sv_str(const HopfAlgebra& h, const SparseVec& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : v) {
        if (!first) os << " + ";
        os << c.str() << "*(" << h.basis_labels[idx] << ")";
        first = false;
    }
    return os.str();
}

// Sparse tensor in H tensor H, keyed by (j,k).
using Tensor2 = std::map<std::pair<int, int>, FieldElem>;
// Sparse tensor in H^{tensor 3}.
using Tensor3 = std::map<std::tuple<int, int, int>, FieldElem>;

void t2_add(Tensor2& t, int j, int k, const FieldElem& c) {
    auto [it, inserted] = t.try_emplace({j, k}, c);
    if (!inserted) it->second += c;
}

void t2_prune(Tensor2& t) {
    for (auto it = t.begin(); it != t.end();)
        it = it->second.is_zero() ? t.erase(it) : std::next(it);
}

void t3_add(Tensor3& t, int a, int b, int c, const FieldElem& v) {
    auto [it, inserted] = t.try_emplace({a, b, c}, v);
    if (!inserted) it->second += v;
}

void t3_prune(Tensor3& t) {
    for (auto it = t.begin(); it != t.end();)
        it = it->second.is_zero() ? t.erase(it) : std::next(it);
}

template <typename T, typename WitnessFn>
bool tensors_agree(const T& lhs, const T& rhs, const Field& field, WitnessFn&& on_fail) {
    auto li = lhs.begin();
    auto ri = rhs.begin();
    while (li != lhs.end() || ri != rhs.end()) {
        if (li == lhs.end() || (ri != rhs.end() && ri->first < li->first)) {
            on_fail(ri->first, field.zero(), ri->second);
            return false;
        }
        if (ri == rhs.end() || li->first < ri->first) {
            on_fail(li->first, li->second, field.zero());
            return false;
        }
        if (li->second != ri->second) {
            on_fail(li->first, li->second, ri->second);
            return false;
        }
        ++li;
        ++ri;
    }
    return true;
}

}  // namespace

SparseVec HopfAlgebra::product(const SparseVec& a, const SparseVec& b) const {
    SparseVec acc;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) sv_add_scaled(acc, ci * cj, mul(i, j));
    return sv_canonicalize(std::move(acc));
}

SparseVec HopfAlgebra::antipode_of(int i) const {
    SparseVec out;
    for (std::size_t r = 0; r < antipode.rows(); ++r)
        if (!antipode.at(r, i).is_zero())
            out.emplace_back(static_cast<int>(r), antipode.at(r, i));
    return out;
}

bool AxiomReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const AxiomCheck* AxiomReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

std::string AxiomReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "pass" : "FAIL") << "  " << c.axiom;
        if (!c.pass) os << "  [" << c.witness << "]";
        os << "\n";
    }
    return os.str();
}

AxiomReport verify_hopf(const HopfAlgebra& h) {
    const Field& f = *h.field;
    AxiomReport report;
    const int d = h.dim;

    // (a) associativity: (e_i e_j) e_k = e_i (e_j e_k).
    {
        AxiomCheck chk{"associativity", true, ""};
        SparseVec lhs, rhs;
        for (int i = 0; i < d && chk.pass; ++i)
            for (int j = 0; j < d && chk.pass; ++j) {
                const SparseVec& ij = h.mul(i, j);
                for (int k = 0; k < d && chk.pass; ++k) {
                    lhs.clear();
                    rhs.clear();
                    for (const auto& [l, c] : ij) sv_add_scaled(lhs, c, h.mul(l, k));
                    for (const auto& [l, c] : h.mul(j, k)) sv_add_scaled(rhs, c, h.mul(i, l));
                    SparseVec L = sv_canonicalize(lhs);
                    SparseVec R = sv_canonicalize(rhs);
                    if (!sv_equal(L, R)) {
                        chk.pass = false;
                        std::ostringstream os;
                        os << "i=" << i << " j=" << j << " k=" << k
                           << ": lhs=" << sv_str(h, L) << " rhs=" << sv_str(h, R);
                        chk.witness = os.str();
                    }
                }
            }
        report.checks.push_back(std::move(chk));
    }

    // (b) unit: 1 * e_i = e_i * 1 = e_i.
    {
        AxiomCheck chk{"unit", true, ""};
        const SparseVec one = sv_from_dense(h.unit);
        for (int i = 0; i < d && chk.pass; ++i) {
            const SparseVec ei{{i, f.one()}};
            for (const SparseVec& p : {h.product(one, ei), h.product(ei, one)}) {
                if (!sv_equal(p, ei)) {
                    chk.pass = false;
                    chk.witness = "i=" + std::to_string(i) + ": 1*e_i or e_i*1 = " + sv_str(h, p);
                    break;
                }
            }
        }
        report.checks.push_back(std::move(chk));
    }

    // (c) coassociativity.
    {
        AxiomCheck chk{"coassociativity", true, ""};
        for (int i = 0; i < d && chk.pass; ++i) {
            Tensor3 lhs, rhs;
            for (const auto& t : h.comult[i]) {
                for (const auto& s : h.comult[t.j]) t3_add(lhs, s.j, s.k, t.k, t.c * s.c);
                for (const auto& s : h.comult[t.k]) t3_add(rhs, t.j, s.j, s.k, t.c * s.c);
            }
            t3_prune(lhs);
            t3_prune(rhs);
            tensors_agree(lhs, rhs, f, [&](const auto& key, const FieldElem& a, const FieldElem& b) {
                chk.pass = false;
                const auto& [x, y, z] = key;
                std::ostringstream os;
                os << "i=" << i << " at (" << x << "," << y << "," << z
                   << "): lhs=" << a.str() << " rhs=" << b.str();
                chk.witness = os.str();
            });
        }
        report.checks.push_back(std::move(chk));
    }

    // (d) counit: (eps tensor id) Delta = id = (id tensor eps) Delta.
    {
        AxiomCheck chk{"counit", true, ""};
        for (int i = 0; i < d && chk.pass; ++i) {
            SparseVec left, right;
            for (const auto& t : h.comult[i]) {
                if (!h.counit[t.j].is_zero()) left.emplace_back(t.k, h.counit[t.j] * t.c);
                if (!h.counit[t.k].is_zero()) right.emplace_back(t.j, h.counit[t.k] * t.c);
            }
            const SparseVec ei{{i, f.one()}};
            for (const auto* side : {&left, &right}) {
                const SparseVec v = sv_canonicalize(*side);
                if (!sv_equal(v, ei)) {
                    chk.pass = false;
                    chk.witness = "i=" + std::to_string(i) + ": collapses to " + sv_str(h, v);
                    break;
                }
            }
        }
        report.checks.push_back(std::move(chk));
    }

    // (e) bialgebra compatibility: Delta and eps are algebra maps, and they
    // preserve the unit.
    {
        AxiomCheck chk{"bialgebra", true, ""};
        for (int i = 0; i < d && chk.pass; ++i)
            for (int j = 0; j < d && chk.pass; ++j) {
                Tensor2 lhs, rhs;
                for (const auto& [l, c] : h.mul(i, j))
                    for (const auto& t : h.comult[l]) t2_add(lhs, t.j, t.k, c * t.c);
                for (const auto& ti : h.comult[i])
                    for (const auto& tj : h.comult[j]) {
                        const FieldElem c = ti.c * tj.c;
                        for (const auto& [a, ca] : h.mul(ti.j, tj.j))
                            for (const auto& [b, cb] : h.mul(ti.k, tj.k))
                                t2_add(rhs, a, b, c * ca * cb);
                    }
                t2_prune(lhs);
                t2_prune(rhs);
                tensors_agree(lhs, rhs, f, [&](const auto& key, const FieldElem& a, const FieldElem& b) {
                    chk.pass = false;
                    std::ostringstream os;
                    os << "Delta(e_" << i << " e_" << j << ") at (" << key.first << ","
                       << key.second << "): lhs=" << a.str() << " rhs=" << b.str();
                    chk.witness = os.str();
                });
                if (!chk.pass) break;
                FieldElem el = f.zero(), er = h.counit[i] * h.counit[j];
                for (const auto& [l, c] : h.mul(i, j)) el += c * h.counit[l];
                if (el != er) {
                    chk.pass = false;
                    chk.witness = "eps(e_" + std::to_string(i) + " e_" + std::to_string(j) +
                                  ")=" + el.str() + " but eps*eps=" + er.str();
                }
            }
        if (chk.pass) {
            // Delta(1) = 1 tensor 1 and eps(1) = 1.
            Tensor2 d1, want;
            FieldElem eps1 = f.zero();
            for (int i = 0; i < d; ++i) {
                if (h.unit[i].is_zero()) continue;
                eps1 += h.unit[i] * h.counit[i];
                for (const auto& t : h.comult[i]) t2_add(d1, t.j, t.k, h.unit[i] * t.c);
            }
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    if (!h.unit[i].is_zero() && !h.unit[j].is_zero())
                        t2_add(want, i, j, h.unit[i] * h.unit[j]);
            t2_prune(d1);
            t2_prune(want);
            tensors_agree(d1, want, f, [&](const auto& key, const FieldElem& a, const FieldElem& b) {
                chk.pass = false;
                std::ostringstream os;
                os << "Delta(1) at (" << key.first << "," << key.second << "): lhs=" << a.str()
                   << " rhs=" << b.str();
                chk.witness = os.str();
            });
            if (chk.pass && !eps1.is_one()) {
                chk.pass = false;
                chk.witness = "eps(1)=" + eps1.str();
            }
        }
        report.checks.push_back(std::move(chk));
    }

    // (f) both antipode convolution identities.
    {
        AxiomCheck chk{"antipode", true, ""};
        const SparseVec one = sv_from_dense(h.unit);
        for (int i = 0; i < d && chk.pass; ++i) {
            SparseVec left, right;
            for (const auto& t : h.comult[i]) {
                sv_add_scaled(left, t.c, h.product(h.antipode_of(t.j), SparseVec{{t.k, f.one()}}));
                sv_add_scaled(right, t.c, h.product(SparseVec{{t.j, f.one()}}, h.antipode_of(t.k)));
            }
            SparseVec want;
            if (!h.counit[i].is_zero()) sv_add_scaled(want, h.counit[i], one);
            want = sv_canonicalize(std::move(want));
            const SparseVec L = sv_canonicalize(std::move(left));
            const SparseVec R = sv_canonicalize(std::move(right));
            if (!sv_equal(L, want) || !sv_equal(R, want)) {
                chk.pass = false;
                std::ostringstream os;
                os << "i=" << i << ": S(x1)x2=" << sv_str(h, L) << " x1S(x2)=" << sv_str(h, R)
                   << " eps(x)1=" << sv_str(h, want);
                chk.witness = os.str();
            }
        }
        report.checks.push_back(std::move(chk));
    }

    return report;
}

bool is_group_like(const HopfAlgebra& h, const Vec& v) {
    const Field& f = *h.field;
    FieldElem eps = f.zero();
    Tensor2 dv, vv;
    for (int i = 0; i < h.dim; ++i) {
        if (v[i].is_zero()) continue;
        eps += v[i] * h.counit[i];
        for (const auto& t : h.comult[i]) t2_add(dv, t.j, t.k, v[i] * t.c);
        for (int j = 0; j < h.dim; ++j)
            if (!v[j].is_zero()) t2_add(vv, i, j, v[i] * v[j]);
    }
    if (!eps.is_one()) return false;
    t2_prune(dv);
    t2_prune(vv);
    return dv == vv;
}

bool is_skew_primitive(const HopfAlgebra& h, const Vec& c, const Vec& a, const Vec& b) {
    Tensor2 lhs, rhs;
    for (int i = 0; i < h.dim; ++i) {
        if (!c[i].is_zero())
            for (const auto& t : h.comult[i]) t2_add(lhs, t.j, t.k, c[i] * t.c);
        for (int j = 0; j < h.dim; ++j) {
            if (!c[i].is_zero() && !a[j].is_zero()) t2_add(rhs, i, j, c[i] * a[j]);
            if (!b[i].is_zero() && !c[j].is_zero()) t2_add(rhs, i, j, b[i] * c[j]);
        }
    }
    t2_prune(lhs);
    t2_prune(rhs);
    return lhs == rhs;
}

std::vector<Vec> group_likes(const HopfAlgebra& h, std::uint64_t budget) {
    const Field& f = *h.field;
    std::vector<Vec> out;
    if (h.pointed_monomial_basis) {
        for (int i = 0; i < h.dim; ++i) {
            Vec v(h.dim, f.zero());
            v[i] = f.one();
            if (is_group_like(h, v)) out.push_back(std::move(v));
        }
        return out;
    }
    if (!f.is_prime_field())
        throw BudgetExceededError(
            "BudgetExceeded: group-like search without the pointed-monomial "
            "promise needs a finite prime field");
    const std::uint64_t p = f.spec().p;
    std::uint64_t total = 1;
    for (int i = 0; i < h.dim; ++i) {
        if (total > budget / p) {
            total = budget + 1;
            break;
        }
        total *= p;
    }
    if (total > budget)
        throw BudgetExceededError("BudgetExceeded: p^dim = " + std::to_string(p) + "^" +
                                  std::to_string(h.dim) + " exceeds budget " +
                                  std::to_string(budget));
    std::vector<std::uint64_t> digits(h.dim, 0);
    Vec v(h.dim, f.zero());
    for (std::uint64_t it = 0; it + 1 < total; ++it) {
        // next vector in lexicographic order
        for (int i = 0; i < h.dim; ++i) {
            if (++digits[i] < p) {
                v[i] = f.from_int(static_cast<std::int64_t>(digits[i]));
                break;
            }
            digits[i] = 0;
            v[i] = f.zero();
        }
        if (is_group_like(h, v)) out.push_back(v);
    }
    return out;
}

std::vector<Vec> skew_primitives(const HopfAlgebra& h, const Vec& a, const Vec& b) {
    const Field& f = *h.field;
    if (!is_group_like(h, a) || !is_group_like(h, b))
        throw Error("skew_primitives: a and b must be group-like");
    const int d = h.dim;
    // Unknown c = sum c_i e_i; equations indexed by basis tensor pairs (j,k):
    // sum_i c_i Delta_i^{jk} - c_j a_k - b_j c_k = 0.
    Matrix sys(f, static_cast<std::size_t>(d) * d, d);
    auto row = [d](int j, int k) { return static_cast<std::size_t>(j) * d + k; };
    for (int i = 0; i < d; ++i) {
        for (const auto& t : h.comult[i]) sys.at(row(t.j, t.k), i) += t.c;
        for (int k = 0; k < d; ++k) {
            if (!a[k].is_zero()) sys.at(row(i, k), i) -= a[k];
            if (!b[k].is_zero()) sys.at(row(k, i), i) -= b[k];
        }
    }
    auto res = rref_and_kernel(f, sys);
    for (const Vec& c : res.kernel)
        if (!is_skew_primitive(h, c, a, b))
            throw Error("internal: skew-primitive solve produced a bad vector");
    return res.kernel;
}

HopfAlgebra tensor_product_hopf(const HopfAlgebra& a, const HopfAlgebra& b) {
    if (!(a.field->spec() == b.field->spec()))
        throw Error("tensor_product_hopf: fields differ");
    const Field& f = *a.field;
    HopfAlgebra t;
    t.field = a.field;
    t.dim = a.dim * b.dim;
    t.pointed_monomial_basis = a.pointed_monomial_basis && b.pointed_monomial_basis;
    auto idx = [&](int i, int j) { return i * b.dim + j; };
    t.basis_labels.resize(t.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j)
            t.basis_labels[idx(i, j)] = a.basis_labels[i] + " " + b.basis_labels[j];

    t.mult.assign(static_cast<std::size_t>(t.dim) * t.dim, {});
    for (int i1 = 0; i1 < a.dim; ++i1)
        for (int j1 = 0; j1 < b.dim; ++j1)
            for (int i2 = 0; i2 < a.dim; ++i2)
                for (int j2 = 0; j2 < b.dim; ++j2) {
                    SparseVec prod;
                    for (const auto& [u, cu] : a.mul(i1, i2))
                        for (const auto& [v, cv] : b.mul(j1, j2))
                            prod.emplace_back(idx(u, v), cu * cv);
                    t.mul(idx(i1, j1), idx(i2, j2)) = sv_canonicalize(std::move(prod));
                }

    t.unit.assign(t.dim, f.zero());
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j)
            if (!a.unit[i].is_zero() && !b.unit[j].is_zero())
                t.unit[idx(i, j)] = a.unit[i] * b.unit[j];

    t.comult.resize(t.dim);
    t.counit.assign(t.dim, f.zero());
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
            t.counit[idx(i, j)] = a.counit[i] * b.counit[j];
            auto& row = t.comult[idx(i, j)];
            for (const auto& ta : a.comult[i])
                for (const auto& tb : b.comult[j])
                    row.push_back({idx(ta.j, tb.j), idx(ta.k, tb.k), ta.c * tb.c});
        }

    t.antipode = Matrix(f, t.dim, t.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j)
            for (int u = 0; u < a.dim; ++u)
                for (int v = 0; v < b.dim; ++v) {
                    const FieldElem& su = a.antipode.at(u, i);
                    const FieldElem& sv = b.antipode.at(v, j);
                    if (!su.is_zero() && !sv.is_zero())
                        t.antipode.at(idx(u, v), idx(i, j)) = su * sv;
                }
    return t;
}

AxiomReport is_hopf_morphism(const LinearMap& f) {
    const HopfAlgebra& src = *f.source;
    const HopfAlgebra& dst = *f.target;
    const Field& field = *src.field;
    AxiomReport report;
    std::vector<SparseVec> fcol(src.dim);
    for (int i = 0; i < src.dim; ++i) fcol[i] = sv_from_dense(f.matrix.col(i));

    auto apply_f = [&](const SparseVec& v) {
        SparseVec out;
        for (const auto& [i, c] : v) sv_add_scaled(out, c, fcol[i]);
        return sv_canonicalize(std::move(out));
    };

    {
        AxiomCheck chk{"unit preservation", true, ""};
        const SparseVec img = apply_f(sv_from_dense(src.unit));
        if (!sv_equal(img, sv_from_dense(dst.unit))) {
            chk.pass = false;
            chk.witness = "f(1) = " + sv_str(dst, img);
        }
        report.checks.push_back(std::move(chk));
    }
    {
        AxiomCheck chk{"multiplicativity", true, ""};
        for (int i = 0; i < src.dim && chk.pass; ++i)
            for (int j = 0; j < src.dim && chk.pass; ++j) {
                const SparseVec lhs = apply_f(src.mul(i, j));
                const SparseVec rhs = dst.product(fcol[i], fcol[j]);
                if (!sv_equal(lhs, rhs)) {
                    chk.pass = false;
                    chk.witness = "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                  ": f(e_i e_j)=" + sv_str(dst, lhs) +
                                  " f(e_i)f(e_j)=" + sv_str(dst, rhs);
                }
            }
        report.checks.push_back(std::move(chk));
    }
    {
        AxiomCheck chk{"comultiplication preservation", true, ""};
        for (int i = 0; i < src.dim && chk.pass; ++i) {
            Tensor2 lhs, rhs;
            for (const auto& t : src.comult[i])
                for (const auto& [a, ca] : fcol[t.j])
                    for (const auto& [b, cb] : fcol[t.k]) t2_add(lhs, a, b, t.c * ca * cb);
            for (const auto& [l, cl] : fcol[i])
                for (const auto& t : dst.comult[l]) t2_add(rhs, t.j, t.k, cl * t.c);
            t2_prune(lhs);
            t2_prune(rhs);
            tensors_agree(lhs, rhs, field,
                          [&](const auto& key, const FieldElem& x, const FieldElem& y) {
                              chk.pass = false;
                              std::ostringstream os;
                              os << "basis index " << i << " at (" << key.first << ","
                                 << key.second << "): (f tensor f)Delta=" << x.str()
                                 << " Delta f=" << y.str();
                              chk.witness = os.str();
                          });
        }
        report.checks.push_back(std::move(chk));
    }
    {
        AxiomCheck chk{"counit preservation", true, ""};
        for (int i = 0; i < src.dim && chk.pass; ++i) {
            FieldElem lhs = field.zero();
            for (const auto& [l, cl] : fcol[i]) lhs += cl * dst.counit[l];
            if (lhs != src.counit[i]) {
                chk.pass = false;
                chk.witness = "i=" + std::to_string(i) + ": eps(f(e_i))=" + lhs.str() +
                              " eps(e_i)=" + src.counit[i].str();
            }
        }
        report.checks.push_back(std::move(chk));
    }
    return report;
}

bool is_bijective(const LinearMap& f) {
    if (f.matrix.rows() != f.matrix.cols()) throw Error("is_bijective: matrix not square");
    const auto res = rref_and_kernel(*f.source->field, f.matrix);
    return res.rank == f.matrix.rows();
}

bool structure_equal(const HopfAlgebra& a, const HopfAlgebra& b) {
    if (a.dim != b.dim || !(a.field->spec() == b.field->spec())) return false;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (!sv_equal(a.mul(i, j), b.mul(i, j))) return false;
    for (int i = 0; i < a.dim; ++i) {
        if (a.unit[i] != b.unit[i] || a.counit[i] != b.counit[i]) return false;
        Tensor2 ca, cb;
        for (const auto& t : a.comult[i]) t2_add(ca, t.j, t.k, t.c);
        for (const auto& t : b.comult[i]) t2_add(cb, t.j, t.k, t.c);
        t2_prune(ca);
        t2_prune(cb);
        if (ca != cb) return false;
    }
    return a.antipode == b.antipode;
}

std::string to_text(const HopfAlgebra& h) {
    std::ostringstream os;
    os << "hopfalgebra v1\n";
    os << "field " << h.field->spec().str() << "\n";
    os << "dim " << h.dim << "\n";
    os << "pointed_monomial_basis " << (h.pointed_monomial_basis ? 1 : 0) << "\n";
    for (int i = 0; i < h.dim; ++i) os << "basis " << i << " " << h.basis_labels[i] << "\n";
    os << "unit";
    for (int i = 0; i < h.dim; ++i)
        if (!h.unit[i].is_zero()) os << " " << i << ":" << h.unit[i].str();
    os << "\n";
    os << "counit";
    for (int i = 0; i < h.dim; ++i)
        if (!h.counit[i].is_zero()) os << " " << i << ":" << h.counit[i].str();
    os << "\n";
    for (int i = 0; i < h.dim; ++i)
        for (int j = 0; j < h.dim; ++j) {
            const SparseVec& row = h.mul(i, j);
            if (row.empty()) continue;
            os << "mult " << i << " " << j;
            for (const auto& [k, c] : row) os << " " << k << ":" << c.str();
            os << "\n";
        }
    for (int i = 0; i < h.dim; ++i) {
        Tensor2 t;
        for (const auto& term : h.comult[i]) t2_add(t, term.j, term.k, term.c);
        t2_prune(t);
        if (t.empty()) continue;
        os << "comult " << i;
        for (const auto& [jk, c] : t) os << " " << jk.first << "," << jk.second << ":" << c.str();
        os << "\n";
    }
    for (int i = 0; i < h.dim; ++i) {
        const SparseVec col = h.antipode_of(i);
        if (col.empty()) continue;
        os << "antipode " << i;
        for (const auto& [k, c] : col) os << " " << k << ":" << c.str();
        os << "\n";
    }
    return os.str();
}

}  // namespace hopffact
