#ifndef NFSTATS_POLY_HPP
#define NFSTATS_POLY_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace nf {

// Dense univariate polynomial over Z.  Coefficient i multiplies x^i.
class PolyZ {
  public:
    PolyZ() = default;
    explicit PolyZ(std::vector<mpz_class> coeffs);
    static PolyZ from_int64(const std::vector<std::int64_t>& coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    bool is_zero() const { return c_.empty(); }
    const mpz_class& coeff(int i) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& leading() const;

    mpz_class eval(const mpz_class& x) const;
    double eval_double(double x) const;

    PolyZ derivative() const;
    PolyZ shifted(const mpz_class& t) const;  // p(x + t)
    PolyZ scaled_arg(const mpz_class& s) const;  // p(s*x)

    friend PolyZ operator+(const PolyZ& a, const PolyZ& b);
    friend PolyZ operator-(const PolyZ& a, const PolyZ& b);
    friend PolyZ operator*(const PolyZ& a, const PolyZ& b);
    PolyZ operator*(const mpz_class& s) const;
    bool operator==(const PolyZ& o) const { return c_ == o.c_; }

    std::string str() const;

  private:
    void trim();
    std::vector<mpz_class> c_;
};

// Resultant of two integer polynomials (Sylvester determinant,
// fraction-free elimination).
mpz_class resultant(const PolyZ& f, const PolyZ& g);

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f).
mpz_class discriminant(const PolyZ& f);

// Number of distinct real roots of f in the open interval (lo, hi),
// endpoints as exact integers, via Sturm chains.  `hi_inf`/`lo_inf`
// extend an endpoint to +-infinity.
int sturm_real_roots(const PolyZ& f, const mpz_class& lo, const mpz_class& hi,
                     bool lo_inf = false, bool hi_inf = false);

// Distinct real roots in the open interval (-sqrt(S), sqrt(S)), S a
// positive non-square integer; endpoint signs evaluated exactly in
// Z[sqrt(S)].  f must not vanish at +-sqrt(S): divide out x^2 - S
// before calling.
int sturm_real_roots_sqrt(const PolyZ& f, const mpz_class& S);

// Sparse multivariate polynomial over Z in at most 4 variables.
class MPolyZ {
  public:
    struct Mono {
        std::array<int, 4> e{0, 0, 0, 0};
        mpz_class c;
    };

    MPolyZ() = default;
    static MPolyZ constant(const mpz_class& v);
    static MPolyZ monomial(const mpz_class& c, std::array<int, 4> exps);

    const std::vector<Mono>& monomials() const { return m_; }
    bool is_zero() const { return m_.empty(); }

    int total_degree() const;
    int degree_in(int var) const;
    bool is_homogeneous() const;

    mpz_class eval(const std::array<mpz_class, 4>& x) const;
    // Fast path: valid whenever the caller-checked bound holds (see
    // eval_bound); values and intermediates then fit __int128.
    __int128 eval_i128(const std::array<std::int64_t, 4>& x) const;
    // Upper bound on |value| over the box max|x_i| <= r, by summing
    // |coeff| * r^deg monomial-wise.
    mpz_class eval_bound(std::int64_t r) const;

    friend MPolyZ operator+(const MPolyZ& a, const MPolyZ& b);
    friend MPolyZ operator*(const MPolyZ& a, const MPolyZ& b);
    MPolyZ operator*(const mpz_class& s) const;
    MPolyZ pow(int k) const;

  private:
    void normalize();
    std::vector<Mono> m_;  // sorted by exponent tuple
};

}  // namespace nf

#endif
