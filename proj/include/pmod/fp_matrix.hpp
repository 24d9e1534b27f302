#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace pmod {

// Dense matrix over the prime field F_p. Entries are kept reduced mod p;
// p is assumed prime and small (the default computation context is F_2).
class FpMat {
  public:
    FpMat() = default;
    FpMat(int rows, int cols, uint32_t p) : rows_(rows), cols_(cols), p_(p), a_(std::size_t(rows) * cols, 0) {
        if (p < 2) throw ValidationError("field characteristic must be >= 2");
        if (rows < 0 || cols < 0) throw ValidationError("negative matrix dimension");
    }

    static FpMat identity(int n, uint32_t p) {
        FpMat m(n, n, p);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    uint32_t prime() const { return p_; }

    uint32_t& operator()(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    uint32_t operator()(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

    bool operator==(const FpMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (auto v : a_)
            if (v) return false;
        return true;
    }

    FpMat operator*(const FpMat& o) const {
        if (cols_ != o.rows_ || p_ != o.p_) throw ValidationError("matrix product shape mismatch");
        FpMat out(rows_, o.cols_, p_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                uint64_t v = (*this)(i, k);
                if (!v) continue;
                for (int j = 0; j < o.cols_; ++j)
                    out(i, j) = uint32_t((out(i, j) + v * o(k, j)) % p_);
            }
        return out;
    }

    FpMat operator+(const FpMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw ValidationError("matrix sum shape mismatch");
        FpMat out(rows_, cols_, p_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + o.a_[i]) % p_;
        return out;
    }

    FpMat scaled(uint32_t c) const {
        FpMat out(rows_, cols_, p_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = uint32_t((uint64_t(a_[i]) * c) % p_);
        return out;
    }

    // In-place reduced row echelon form; returns pivot columns.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int pr = -1;
            for (int i = r; i < rows_; ++i)
                if ((*this)(i, c)) {
                    pr = i;
                    break;
                }
            if (pr < 0) continue;
            swap_rows(pr, r);
            uint32_t inv = mod_inverse((*this)(r, c));
            scale_row(r, inv);
            for (int i = 0; i < rows_; ++i)
                if (i != r && (*this)(i, c)) add_row(i, r, p_ - (*this)(i, c));
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        FpMat m = *this;
        return static_cast<int>(m.rref().size());
    }

    // Columns form a basis of the null space.
    FpMat nullspace_basis() const {
        FpMat m = *this;
        auto pivots = m.rref();
        std::vector<char> is_pivot(cols_, 0);
        for (int c : pivots) is_pivot[c] = 1;
        int nfree = cols_ - static_cast<int>(pivots.size());
        FpMat out(cols_, nfree, p_);
        int k = 0;
        for (int c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            out(c, k) = 1;
            for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
                uint32_t v = m(static_cast<int>(pi), c);
                if (v) out(pivots[pi], k) = p_ - v;
            }
            ++k;
        }
        return out;
    }

    // Columns form a basis of the column space (a subset of this matrix's columns).
    FpMat colspace_basis() const {
        FpMat m = *this;
        auto pivots = m.rref();
        FpMat out(rows_, static_cast<int>(pivots.size()), p_);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            for (int i = 0; i < rows_; ++i) out(i, static_cast<int>(k)) = (*this)(i, pivots[k]);
        return out;
    }

    // Any X with (*this) X = B, or nullopt when inconsistent.
    std::optional<FpMat> solve(const FpMat& B) const {
        if (B.rows() != rows_ || B.prime() != p_) throw ValidationError("solve shape mismatch");
        FpMat aug(rows_, cols_ + B.cols(), p_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            for (int j = 0; j < B.cols(); ++j) aug(i, cols_ + j) = B(i, j);
        }
        auto pivots = aug.rref();
        for (int c : pivots)
            if (c >= cols_) return std::nullopt;
        FpMat X(cols_, B.cols(), p_);
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            for (int j = 0; j < B.cols(); ++j) X(pivots[pi], j) = aug(static_cast<int>(pi), cols_ + j);
        return X;
    }

    std::optional<FpMat> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        auto X = solve(identity(rows_, p_));
        if (!X || ((*this) * *X) != identity(rows_, p_)) return std::nullopt;
        return X;
    }

    FpMat hstack(const FpMat& o) const {
        if (rows_ != o.rows_ || p_ != o.p_) throw ValidationError("hstack shape mismatch");
        FpMat out(rows_, cols_ + o.cols_, p_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
            for (int j = 0; j < o.cols_; ++j) out(i, cols_ + j) = o(i, j);
        }
        return out;
    }

  private:
    uint32_t mod_pow(uint32_t b, uint32_t e) const {
        uint64_t acc = 1, base = b % p_;
        while (e) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return uint32_t(acc);
    }
    uint32_t mod_inverse(uint32_t v) const { return mod_pow(v, p_ - 2); }
    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void scale_row(int i, uint32_t v) {
        for (int c = 0; c < cols_; ++c) (*this)(i, c) = uint32_t(uint64_t((*this)(i, c)) * v % p_);
    }
    void add_row(int i, int j, uint32_t v) {  // row_i += v * row_j
        for (int c = 0; c < cols_; ++c)
            (*this)(i, c) = uint32_t(((*this)(i, c) + uint64_t(v) * (*this)(j, c)) % p_);
    }

    int rows_ = 0, cols_ = 0;
    uint32_t p_ = 2;
    std::vector<uint32_t> a_;
};

}  // namespace pmod
