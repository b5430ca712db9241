#ifndef NFSTATS_GENUS2_HPP
#define NFSTATS_GENUS2_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nfstats/poly.hpp"

namespace nf {

struct singular_curve_error : std::domain_error {
    using std::domain_error::domain_error;
};

// y^2 + Q(x) y = P(x), deg Q <= 3, deg P <= 6.
struct HyperellipticModel {
    PolyZ Q, P;
    PolyZ sextic() const { return Q * Q + P * mpz_class(4); }  // h = Q^2 + 4P
};

// Classical Igusa-Clebsch invariants of a genus-2 curve y^2 = h(x),
// deg h in {5,6}.  Normalization: I10 is the discriminant of h (binary
// sextic convention: lc^2 * disc for quintics), and I2, I4, I6 are the
// root-symmetric "fifteen / ten / sixty" sums.  Under h -> c*h the
// tuple rescales by weights (1,2,3,5) with factor c^2.
struct IgusaClebsch {
    mpz_class I2, I4, I6, I10;
};

IgusaClebsch igusa_clebsch(const PolyZ& h);

// F = (I2')^2 I4 - I2^2 I4'; zero on weighted rescalings, nonzero
// certifies non-isomorphism over the algebraic closure.
mpz_class isomorphism_obstruction(const IgusaClebsch& c1, const IgusaClebsch& c2);

// One-parameter slice of Brumer's family of curves with real
// multiplication by sqrt(5):  y^2 + (x^3+x+1) y = -d x^3 + x^2 + x.
HyperellipticModel brumer_curve(const mpz_class& d);
mpz_class brumer_core(const mpz_class& d);  // 27d^3 - 81d^2 - 34d - 103
mpz_class brumer_disc(const mpz_class& d);  // disc of the model sextic
// The fixed 2-power u with brumer_disc(d) = u * brumer_core(d)^2,
// determined at d = 0.
const mpz_class& brumer_disc_unit();

// One-parameter slice of Mestre's family with real multiplication by
// sqrt(2); singular exactly at b = -88 and b = 112.
HyperellipticModel mestre_curve(const mpz_class& b);
mpz_class mestre_disc(const mpz_class& b);

enum class RmFamily { brumer, mestre };

// Congruence certificate of nonsplit Jacobian: d = 1 mod 5 for the
// Brumer slice (with discriminant then coprime to 5), b = 1 mod 7 for
// the Mestre slice.
bool nonsplit_certificate(RmFamily family, const mpz_class& param);

struct PrimeDiscSearch {
    std::vector<std::int64_t> d_values;  // d <= X, d = 1 mod 5, |core(d)| prime
    std::int64_t bound = 0;
    double density_ratio = 0;  // count / (X / log X)
};

PrimeDiscSearch prime_disc_search(std::int64_t X);

}  // namespace nf

#endif
