#pragma once

#include <vector>

#include "dimer/mat2.hpp"

namespace dimer {

// Laurent polynomial sum_{k=lo..hi} c_k z^k with exact-degree arithmetic;
// used by the decreasing-power factorization, where every entry lives on a
// small window around zero.
class Laurent {
  public:
    Laurent() : lo_(0), c_(1, Complex(0.0)) {}
    Laurent(int lo, std::vector<Complex> coeffs) : lo_(lo), c_(std::move(coeffs)) {}

    static Laurent zero(int lo, int hi) {
        return Laurent(lo, std::vector<Complex>(static_cast<std::size_t>(hi - lo + 1)));
    }

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }

    Complex coeff(int k) const {
        if (k < lo() || k > hi()) return {};
        return c_[static_cast<std::size_t>(k - lo_)];
    }
    void set(int k, Complex v);

    Complex eval(Complex z) const;
    double max_coeff() const;

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(Complex s) const;

    // Exact division by (z - root); throws if the remainder is not negligible
    // relative to the coefficient scale.
    Laurent deflate(Complex root, double tol = 1e-9) const;

  private:
    int lo_;
    std::vector<Complex> c_;
};

// 2x2 matrix of Laurent entries.
struct LaurentMat2 {
    Laurent e00, e01, e10, e11;
    Mat2 eval(Complex z) const {
        Mat2 m;
        m << e00.eval(z), e01.eval(z), e10.eval(z), e11.eval(z);
        return m;
    }
    Mat2 coeff(int k) const {
        Mat2 m;
        m << e00.coeff(k), e01.coeff(k), e10.coeff(k), e11.coeff(k);
        return m;
    }
};

}  // namespace dimer
