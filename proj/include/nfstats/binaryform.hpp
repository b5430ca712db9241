#ifndef NFSTATS_BINARYFORM_HPP
#define NFSTATS_BINARYFORM_HPP

#include <gmpxx.h>

#include <vector>

#include "nfstats/poly.hpp"

namespace nf {

// Binary form F = sum c_i x^i y^(n-i) with rational coefficients.
class BFormQ {
  public:
    BFormQ() = default;
    BFormQ(int degree, std::vector<mpq_class> coeffs);
    // homogenization of a univariate integer polynomial to the given degree
    static BFormQ from_poly(const PolyZ& p, int degree);

    int degree() const { return n_; }
    const mpq_class& coeff(int i) const;
    bool is_zero() const;

    BFormQ dx() const;
    BFormQ dy() const;

    friend BFormQ operator*(const BFormQ& a, const BFormQ& b);
    friend BFormQ operator+(const BFormQ& a, const BFormQ& b);
    BFormQ operator*(const mpq_class& s) const;

  private:
    int n_ = 0;
    std::vector<mpq_class> c_;  // size n_+1
};

// k-th transvectant with the classical normalization
// ((m-k)!(n-k)!)/(m!n!) sum_j (-1)^j C(k,j) d^kF/dx^{k-j}dy^j * d^kG/dx^j dy^{k-j}.
BFormQ transvectant(const BFormQ& F, const BFormQ& G, int k);

}  // namespace nf

#endif
