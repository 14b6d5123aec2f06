#include <limits>

#include "hopffact/constructions.hpp"

namespace hopffact {

namespace {

// Saturating multiply used for budget accounting.
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b
               ? std::numeric_limits<std::uint64_t>::max()
               : a + b;
}

// Generator images of one search candidate: g |> h, g |> x over the Taft
// basis; g <| h, g <| x over the group-algebra basis.
struct CandidateData {
    SparseVec gh_left;
    SparseVec gx_left;
    SparseVec gh_right;
    SparseVec gx_right;
};

struct Unextendable {};

// Extends candidate generator data to full action tables g^i |> h^j x^k and
// g^i <| h^j x^k using the module axioms and the (mp2)/(mp3) recursions.
// Entries are memoized; a cyclic dependency means the recursions cannot
// close the tables and the candidate is dropped.
class ActionExtender {
  public:
    ActionExtender(const HopfAlgebra& a, const HopfAlgebra& h, int m, int n,
                   CandidateData data)
        : a_(a), h_(h), m_(m), n_(n), data_(std::move(data)) {
        const std::size_t cells = static_cast<std::size_t>(n_) * a_.dim;
        lstate_.assign(cells, State::Unset);
        rstate_.assign(cells, State::Unset);
        lval_.assign(cells, {});
        rval_.assign(cells, {});
    }

    MatchedPair extend() {
        MatchedPair mp;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < m_; ++j)
                for (int k = 0; k < m_; ++k) {
                    left(i, j, k);
                    right(i, j, k);
                }
        mp.left.assign(lval_.begin(), lval_.end());
        mp.right.assign(rval_.begin(), rval_.end());
        return mp;
    }

  private:
    enum class State : std::uint8_t { Unset, InProgress, Done };

    std::size_t cell(int i, int j, int k) const {
        return static_cast<std::size_t>(i) * a_.dim + j * m_ + k;
    }

    SparseVec act_left_combo(const SparseVec& y, int j, int k) {
        SparseVec out;
        for (const auto& [i, c] : y) sv_add(out, c, left(i, j, k));
        return sv_canonicalize(std::move(out));
    }

    SparseVec right_of_combo_at_g(const SparseVec& acombo) {
        SparseVec out;
        for (const auto& [a, c] : acombo) sv_add(out, c, right(1 % n_, a / m_, a % m_));
        return sv_canonicalize(std::move(out));
    }

    const SparseVec& left(int i, int j, int k) {
        const std::size_t at = cell(i, j, k);
        if (lstate_[at] == State::Done) return lval_[at];
        if (lstate_[at] == State::InProgress) throw Unextendable{};
        lstate_[at] = State::InProgress;
        const Field& f = *a_.field;
        SparseVec val;
        if (i == 0) {
            val = {{j * m_ + k, f.one()}};
        } else if (j == 0 && k == 0) {
            val = {{0, f.one()}};  // y |> 1_A = eps(y) 1_A
        } else if (i == 1) {
            if (j == 1 && k == 0) {
                val = data_.gh_left;
            } else if (j == 0 && k == 1) {
                val = data_.gx_left;
            } else if (j >= 1) {
                // g |> (h b) = (g |> h)((g <| h) |> b)
                val = a_.product(data_.gh_left, act_left_combo(data_.gh_right, j - 1, k));
            } else {
                // g |> (x b) = (g |> x)((g <| h) |> b) + (g <| x) |> b
                SparseVec acc = a_.product(data_.gx_left,
                                           act_left_combo(data_.gh_right, 0, k - 1));
                sv_add(acc, f.one(), act_left_combo(data_.gx_right, 0, k - 1));
                val = sv_canonicalize(std::move(acc));
            }
        } else {
            // g^i |> a = g |> (g^{i-1} |> a)
            const SparseVec inner = left(i - 1, j, k);
            SparseVec acc;
            for (const auto& [a, c] : inner) sv_add(acc, c, left(1, a / m_, a % m_));
            val = sv_canonicalize(std::move(acc));
        }
        lval_[at] = std::move(val);
        lstate_[at] = State::Done;
        return lval_[at];
    }

    const SparseVec& right(int i, int j, int k) {
        const std::size_t at = cell(i, j, k);
        if (rstate_[at] == State::Done) return rval_[at];
        if (rstate_[at] == State::InProgress) throw Unextendable{};
        rstate_[at] = State::InProgress;
        const Field& f = *a_.field;
        SparseVec val;
        if (j == 0 && k == 0) {
            val = {{i, f.one()}};  // y <| 1_A = y
        } else if (i == 0) {
            // 1_H <| a = eps_A(a) 1_H
            if (k == 0) val = {{0, f.one()}};
        } else if (i == 1) {
            if (j == 1 && k == 0) {
                val = data_.gh_right;
            } else if (j == 0 && k == 1) {
                val = data_.gx_right;
            } else if (j >= 1) {
                // g <| (h b) = (g <| h) <| b
                SparseVec acc;
                for (const auto& [y, c] : data_.gh_right) sv_add(acc, c, right(y, j - 1, k));
                val = sv_canonicalize(std::move(acc));
            } else {
                // g <| (x b) = (g <| x) <| b
                SparseVec acc;
                for (const auto& [y, c] : data_.gx_right) sv_add(acc, c, right(y, 0, k - 1));
                val = sv_canonicalize(std::move(acc));
            }
        } else {
            // (g g^{i-1}) <| a = (g <| (g^{i-1} |> a1)) (g^{i-1} <| a2)
            SparseVec acc;
            for (const auto& leg : a_.comult[j * m_ + k]) {
                const SparseVec first =
                    right_of_combo_at_g(left(i - 1, leg.j / m_, leg.j % m_));
                const SparseVec second = right(i - 1, leg.k / m_, leg.k % m_);
                sv_add(acc, leg.c, h_.product(first, second));
            }
            val = sv_canonicalize(std::move(acc));
        }
        rval_[at] = std::move(val);
        rstate_[at] = State::Done;
        return rval_[at];
    }

    const HopfAlgebra& a_;
    const HopfAlgebra& h_;
    int m_, n_;
    CandidateData data_;
    std::vector<State> lstate_, rstate_;
    std::vector<SparseVec> lval_, rval_;
};

// All p^k coefficient tuples over a kernel basis, lexicographic.
class SpaceEnumerator {
  public:
    SpaceEnumerator(const Field& f, std::vector<Vec> basis, int dim)
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

}  // namespace

MatchedPairSearchResult matched_pair_search(const Field& field, int m,
                                            const FieldElem& q, int n,
                                            std::uint64_t budget) {
    if (!field.is_prime_field())
        throw BudgetExceededError(
            "BudgetExceeded: matched_pair_search needs a finite prime field");
    MatchedPairSearchResult result;
    auto A = std::make_shared<HopfAlgebra>(taft(field, m, q));
    auto H = std::make_shared<HopfAlgebra>(group_algebra(field, n));

    auto dense_basis = [&](const HopfAlgebra& alg, int i) {
        Vec v(alg.dim, field.zero());
        v[i] = field.one();
        return v;
    };

    // By the transport lemma, g |> h is a group-like h^t with g |> x in
    // P_{h^t,1}(A), and g <| h is a group-like g^c with g <| x in
    // P_{g^c,g}(H). That bounds the candidate grid.
    std::vector<std::vector<Vec>> pa(m), ph(n);
    for (int t = 0; t < m; ++t)
        pa[t] = skew_primitives(*A, dense_basis(*A, t * m), dense_basis(*A, 0));
    for (int c = 0; c < n; ++c)
        ph[c] = skew_primitives(*H, dense_basis(*H, c), dense_basis(*H, 1 % n));

    std::uint64_t total = 0;
    for (int t = 0; t < m; ++t)
        for (int c = 0; c < n; ++c) {
            std::uint64_t cnt = 1;
            for (std::size_t b = 0; b < pa[t].size() + ph[c].size(); ++b)
                cnt = sat_mul(cnt, field.spec().p);
            total = sat_add(total, cnt);
        }
    if (total > budget)
        throw BudgetExceededError("BudgetExceeded: candidate grid of size " +
                                  std::to_string(total) + " exceeds budget " +
                                  std::to_string(budget));

    for (int t = 0; t < m; ++t)
        for (int c = 0; c < n; ++c) {
            SpaceEnumerator ex(field, pa[t], A->dim);
            do {
                SpaceEnumerator er(field, ph[c], H->dim);
                do {
                    ++result.candidates;
                    CandidateData data;
                    data.gh_left = {{t * m, field.one()}};
                    data.gx_left = ex.current();
                    data.gh_right = {{c, field.one()}};
                    data.gx_right = er.current();
                    MatchedPair mp;
                    try {
                        ActionExtender ext(*A, *H, m, n, std::move(data));
                        mp = ext.extend();
                    } catch (const Unextendable&) {
                        ++result.unextendable;
                        continue;
                    }
                    mp.A = A;
                    mp.H = H;
                    mp.provenance = "search candidate t=" + std::to_string(t) +
                                    " c=" + std::to_string(c);
                    if (!verify_matched_pair(mp).pass()) continue;
                    bool duplicate = false;
                    for (const auto& seen : result.pairs)
                        if (actions_equal(seen, mp)) {
                            duplicate = true;
                            break;
                        }
                    if (!duplicate) result.pairs.push_back(std::move(mp));
                } while (er.advance());
            } while (ex.advance());
        }
    return result;
}

}  // namespace hopffact
