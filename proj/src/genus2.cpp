#include "nfstats/genus2.hpp"

#include <cmath>

#include "nfstats/binaryform.hpp"
#include "nfstats/errors.hpp"
#include "nfstats/primes.hpp"

namespace nf {

namespace {

mpq_class scalar(const BFormQ& f) { return f.coeff(0); }

mpz_class to_int(const mpq_class& q, const char* what) {
    mpq_class r = q;
    r.canonicalize();
    if (r.get_den() != 1) throw compute_error(std::string(what) + ": expected an integer value");
    return r.get_num();
}

}  // namespace

IgusaClebsch igusa_clebsch(const PolyZ& h) {
    int deg = h.degree();
    if (deg != 5 && deg != 6) throw std::invalid_argument("igusa_clebsch: degree must be 5 or 6");

    // I10: discriminant of h as a binary sextic (a quintic picks up a
    // root at infinity, contributing lc^2).
    mpz_class i10;
    if (deg == 6) i10 = discriminant(h);
    else i10 = h.leading() * h.leading() * discriminant(h);
    if (i10 == 0) throw singular_curve_error("igusa_clebsch: discriminant vanishes");

    // Clebsch invariants via transvectants; the combinations below
    // equal the classical root-symmetric sums (fifteen/ten/sixty).
    BFormQ f = BFormQ::from_poly(h, 6);
    BFormQ i = transvectant(f, f, 4);
    mpq_class A = scalar(transvectant(f, f, 6));
    mpq_class B = scalar(transvectant(i, i, 4));
    mpq_class C = scalar(transvectant(transvectant(i, i, 2), i, 4));

    IgusaClebsch out;
    out.I2 = to_int(A * -120, "I2");
    out.I4 = to_int(A * A * -720 + B * 6750, "I4");
    out.I6 = to_int(A * A * A * 8640 + A * B * -108000 + C * 202500, "I6");
    out.I10 = i10;
    return out;
}

mpz_class isomorphism_obstruction(const IgusaClebsch& c1, const IgusaClebsch& c2) {
    return c2.I2 * c2.I2 * c1.I4 - c1.I2 * c1.I2 * c2.I4;
}

HyperellipticModel brumer_curve(const mpz_class& d) {
    HyperellipticModel m;
    m.Q = PolyZ::from_int64({1, 1, 0, 1});  // x^3 + x + 1
    m.P = PolyZ({mpz_class(0), mpz_class(1), mpz_class(1), mpz_class(-d)});
    return m;
}

mpz_class brumer_core(const mpz_class& d) { return 27 * d * d * d - 81 * d * d - 34 * d - 103; }

mpz_class brumer_disc(const mpz_class& d) { return discriminant(brumer_curve(d).sextic()); }

const mpz_class& brumer_disc_unit() {
    static const mpz_class unit = [] {
        mpz_class core0 = brumer_core(0);
        mpz_class u = brumer_disc(0) / (core0 * core0);
        return u;
    }();
    return unit;
}

HyperellipticModel mestre_curve(const mpz_class& b) {
    if (b == -88 || b == 112) throw singular_curve_error("mestre_curve: singular member");
    HyperellipticModel m;
    m.Q = PolyZ();
    m.P = PolyZ({mpz_class(9), mpz_class(177), 1111 - 3 * b, 2283 - 34 * b, 3400 - 75 * b, mpz_class(7500)});
    return m;
}

mpz_class mestre_disc(const mpz_class& b) {
    PolyZ h({mpz_class(9), mpz_class(177), 1111 - 3 * b, 2283 - 34 * b, 3400 - 75 * b, mpz_class(7500)});
    h = h * mpz_class(4);  // h = Q^2 + 4P with Q = 0
    return discriminant(h);
}

bool nonsplit_certificate(RmFamily family, const mpz_class& param) {
    if (family == RmFamily::brumer) {
        mpz_class r = ((param % 5) + 5) % 5;
        if (r != 1) return false;
        mpz_class disc = brumer_disc(param);
        if (disc % 5 == 0) throw compute_error("brumer certificate: discriminant unexpectedly divisible by 5");
        return true;
    }
    mpz_class r = ((param % 7) + 7) % 7;
    return r == 1;
}

PrimeDiscSearch prime_disc_search(std::int64_t X) {
    if (X < 1) throw std::invalid_argument("prime_disc_search: bound must be >= 1");
    PrimeDiscSearch out;
    out.bound = X;
    for (std::int64_t d = 1; d <= X; d += 5) {
        mpz_class core = abs(brumer_core(mpz_class(static_cast<long>(d))));
        if (is_prime_mpz(core)) out.d_values.push_back(d);
    }
    double ref = static_cast<double>(X) / std::log(std::max(2.0, static_cast<double>(X)));
    out.density_ratio = static_cast<double>(out.d_values.size()) / ref;
    return out;
}

}  // namespace nf
