#include "hopffact/linalg.hpp"

namespace hopffact {

Vec Matrix::col(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

Matrix identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error("matrix product: dimension mismatch");
    if (a.rows() == 0 || b.cols() == 0) return Matrix();
    const Field& f = a.at(0, 0).field();
    Matrix c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const FieldElem& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const FieldElem& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

Vec mat_vec(const Matrix& m, const Vec& v) {
    if (m.cols() != v.size()) throw Error("matrix apply: dimension mismatch");
    if (m.rows() == 0) return {};
    const Field& f = m.at(0, 0).field();
    Vec out(m.rows(), f.zero());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (m.at(r, c).is_zero()) continue;
            out[r] += m.at(r, c) * v[c];
        }
    }
    return out;
}

bool is_identity(const Matrix& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const FieldElem& e = m.at(i, j);
            if (i == j ? !e.is_one() : !e.is_zero()) return false;
        }
    return true;
}

RrefResult rref_and_kernel(const Field& field, const Matrix& m) {
    RrefResult res;
    res.rref = m;
    Matrix& a = res.rref;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!a.at(i, c).is_zero()) {
                pr = i;
                break;
            }
        if (pr == rows) continue;
        if (pr != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(pr, j), a.at(r, j));
        const FieldElem inv = a.at(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j) a.at(r, j) = a.at(r, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            const FieldElem factor = a.at(i, c);
            for (std::size_t j = c; j < cols; ++j)
                a.at(i, j) -= factor * a.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    res.rank = r;

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec k(cols, field.zero());
        k[c] = field.one();
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            k[pivot_col[i]] = -a.at(i, c);
        res.kernel.push_back(std::move(k));
    }

    for (const Vec& k : res.kernel) {
        const Vec image = mat_vec(m, k);
        for (const FieldElem& e : image)
            if (!e.is_zero()) throw Error("internal: kernel vector not annihilated");
    }
    return res;
}

}  // namespace hopffact
