#pragma once

#include <Eigen/Dense>
#include <complex>

namespace dimer {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

inline constexpr Complex I{0.0, 1.0};

// adj [[a,b],[c,d]] = [[d,-b],[-c,a]];  adj(M) * M = det(M) * I.
inline Mat2 adjugate(const Mat2& m) {
    Mat2 a;
    a << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    return a;
}

inline const Mat2& sigma3() {
    static const Mat2 s = (Mat2() << 1.0, 0.0, 0.0, -1.0).finished();
    return s;
}

inline double max_abs(const Mat2& m) {
    return m.cwiseAbs().maxCoeff();
}

inline Complex trace2(const Mat2& m) { return m(0, 0) + m(1, 1); }

}  // namespace dimer
