#include "arakelov/ratmat.hpp"

#include <algorithm>

namespace arakelov {

RatMat::RatMat(std::initializer_list<std::initializer_list<Rat>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : init) {
        if (static_cast<int>(row.size()) != cols_) throw DomainError("RatMat: ragged init");
        for (const auto& x : row) a_.push_back(x);
    }
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::transpose() const {
    RatMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMat RatMat::operator*(const RatMat& rhs) const {
    if (cols_ != rhs.rows_) throw DomainError("RatMat: dimension mismatch in product");
    RatMat r(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) r.at(i, j) += aik * rhs.at(k, j);
        }
    return r;
}

RatVec RatMat::operator*(const RatVec& v) const {
    if (cols_ != static_cast<int>(v.size())) throw DomainError("RatMat: dimension mismatch in apply");
    RatVec r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

RatMat RatMat::operator+(const RatMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DomainError("RatMat: shape mismatch");
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + rhs.a_[i];
    return r;
}

RatMat RatMat::operator-(const RatMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DomainError("RatMat: shape mismatch");
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - rhs.a_[i];
    return r;
}

RatMat RatMat::scaled(const Rat& c) const {
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

bool RatMat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RatMat::is_positive_definite() const {
    if (!is_symmetric()) return false;
    RatMat m = *this;
    const int n = rows_;
    for (int k = 0; k < n; ++k) {
        if (m.at(k, k) <= 0) return false;
        for (int i = k + 1; i < n; ++i) {
            Rat f = m.at(i, k) / m.at(k, k);
            for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return true;
}

Rat RatMat::det() const {
    if (rows_ != cols_) throw DomainError("det: non-square matrix");
    RatMat m = *this;
    const int n = rows_;
    Rat d = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m.at(i, k) != 0) { piv = i; break; }
        if (piv < 0) return Rat(0);
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            d = -d;
        }
        d *= m.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            Rat f = m.at(i, k) / m.at(k, k);
            if (f == 0) continue;
            for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return d;
}

int RatMat::rank() const {
    RatMat m = *this;
    int r = 0;
    for (int col = 0; col < cols_ && r < rows_; ++col) {
        int piv = -1;
        for (int i = r; i < rows_; ++i)
            if (m.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
        for (int i = r + 1; i < rows_; ++i) {
            Rat f = m.at(i, col) / m.at(r, col);
            if (f == 0) continue;
            for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

RatMat RatMat::inverse() const {
    if (rows_ != cols_) throw DomainError("inverse: non-square matrix");
    const int n = rows_;
    RatMat m = *this;
    RatMat inv = identity(n);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m.at(i, k) != 0) { piv = i; break; }
        if (piv < 0) throw DomainError("inverse: singular matrix");
        if (piv != k)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(k, j));
                std::swap(inv.at(piv, j), inv.at(k, j));
            }
        Rat p = m.at(k, k);
        for (int j = 0; j < n; ++j) {
            m.at(k, j) /= p;
            inv.at(k, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || m.at(i, k) == 0) continue;
            Rat f = m.at(i, k);
            for (int j = 0; j < n; ++j) {
                m.at(i, j) -= f * m.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

RatVec RatMat::solve(const RatVec& b) const {
    if (rows_ != cols_ || rows_ != static_cast<int>(b.size()))
        throw DomainError("solve: shape mismatch");
    const int n = rows_;
    RatMat m = *this;
    RatVec x = b;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m.at(i, k) != 0) { piv = i; break; }
        if (piv < 0) throw DomainError("solve: singular matrix");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            std::swap(x[piv], x[k]);
        }
        for (int i = k + 1; i < n; ++i) {
            Rat f = m.at(i, k) / m.at(k, k);
            if (f == 0) continue;
            for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
            x[i] -= f * x[k];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        Rat s = x[i];
        for (int j = i + 1; j < n; ++j) s -= m.at(i, j) * x[j];
        x[i] = s / m.at(i, i);
    }
    return x;
}

RatMat congruence(const RatMat& gram, const RatMat& w) {
    return w.transpose() * gram * w;
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DomainError("dot: length mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int int_det(std::vector<std::vector<Int>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Int(1);
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { piv = i; break; }
            if (piv < 0) return Int(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    const int nmin = std::min(rows, cols);
    std::vector<Int> diag;

    auto abs_int = [](const Int& v) { return v < 0 ? Int(-v) : v; };

    for (int s = 0; s < nmin; ++s) {
        for (;;) {
            // locate the smallest nonzero entry of the lower-right submatrix
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = s; i < rows; ++i)
                for (int j = s; j < cols; ++j)
                    if (m[i][j] != 0 && (pi < 0 || abs_int(m[i][j]) < best)) {
                        best = abs_int(m[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) { pi = s; pj = s; }
            if (m[pi][pj] == 0) break;  // submatrix is zero
            std::swap(m[s], m[pi]);
            for (int i = 0; i < rows; ++i) std::swap(m[i][s], m[i][pj]);

            bool clean = true;
            for (int i = s + 1; i < rows; ++i)
                if (m[i][s] != 0) {
                    Int q = m[i][s] / m[s][s];
                    for (int j = s; j < cols; ++j) m[i][j] -= q * m[s][j];
                    if (m[i][s] != 0) clean = false;
                }
            for (int j = s + 1; j < cols; ++j)
                if (m[s][j] != 0) {
                    Int q = m[s][j] / m[s][s];
                    for (int i = s; i < rows; ++i) m[i][j] -= q * m[i][s];
                    if (m[s][j] != 0) clean = false;
                }
            if (!clean) continue;

            // divisibility: fold any non-divisible entry into row s and repeat
            bool divides = true;
            for (int i = s + 1; i < rows && divides; ++i)
                for (int j = s + 1; j < cols && divides; ++j)
                    if (m[i][j] % m[s][s] != 0) {
                        for (int jj = s; jj < cols; ++jj) m[s][jj] += m[i][jj];
                        divides = false;
                    }
            if (divides) break;
        }
        if (m[s][s] < 0) m[s][s] = -m[s][s];
        diag.push_back(m[s][s]);
    }
    return diag;
}

}  // namespace arakelov
