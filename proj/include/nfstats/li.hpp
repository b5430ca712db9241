#ifndef NFSTATS_LI_HPP
#define NFSTATS_LI_HPP

namespace nf {

// Principal-value logarithmic integral li(x) = PV int_0^x dt/log t,
// for x > 1.  Throws std::domain_error for x <= 1.
double log_integral(double x);

}  // namespace nf

#endif
