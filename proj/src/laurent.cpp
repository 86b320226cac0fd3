#include "dimer/laurent.hpp"

#include <algorithm>
#include <cmath>

#include "dimer/errors.hpp"

namespace dimer {

void Laurent::set(int k, Complex v) {
    if (k < lo()) {
        c_.insert(c_.begin(), static_cast<std::size_t>(lo() - k), Complex(0.0));
        lo_ = k;
    } else if (k > hi()) {
        c_.resize(static_cast<std::size_t>(k - lo_ + 1));
    }
    c_[static_cast<std::size_t>(k - lo_)] = v;
}

Complex Laurent::eval(Complex z) const {
    // Horner on the polynomial part, then shift by z^{lo}.
    Complex acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc * std::pow(z, static_cast<double>(lo_));
}

double Laurent::max_coeff() const {
    double m = 0.0;
    for (const Complex& v : c_) m = std::max(m, std::abs(v));
    return m;
}

Laurent Laurent::operator+(const Laurent& o) const {
    const int lo = std::min(this->lo(), o.lo());
    const int hi = std::max(this->hi(), o.hi());
    Laurent r = zero(lo, hi);
    for (int k = lo; k <= hi; ++k) r.set(k, coeff(k) + o.coeff(k));
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + o * Complex(-1.0); }

Laurent Laurent::operator*(Complex s) const {
    Laurent r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

Laurent Laurent::deflate(Complex root, double tol) const {
    // Treat as a polynomial in z after multiplying by z^{-lo}; synthetic
    // division by (z - root), remainder must vanish.
    const int deg = hi() - lo();
    std::vector<Complex> q(static_cast<std::size_t>(std::max(deg, 1)));
    Complex carry{};
    for (int i = deg; i >= 1; --i) {
        carry = c_[static_cast<std::size_t>(i)] + carry * root;
        q[static_cast<std::size_t>(i - 1)] = carry;
    }
    const Complex rem = c_[0] + carry * root;
    const double scale = std::max(max_coeff(), 1e-300);
    if (std::abs(rem) > tol * scale)
        throw Error("laurent deflation: (z - root) does not divide the entry");
    return Laurent(lo_, std::move(q));
}

}  // namespace dimer
