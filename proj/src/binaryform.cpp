#include "nfstats/binaryform.hpp"

#include <stdexcept>

namespace nf {

namespace {
const mpq_class kZeroQ = 0;

mpz_class binom(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}
}  // namespace

BFormQ::BFormQ(int degree, std::vector<mpq_class> coeffs) : n_(degree), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != n_ + 1) throw std::invalid_argument("binary form: bad coefficient count");
}

BFormQ BFormQ::from_poly(const PolyZ& p, int degree) {
    if (p.degree() > degree) throw std::invalid_argument("binary form: polynomial degree exceeds form degree");
    std::vector<mpq_class> c(static_cast<std::size_t>(degree) + 1, 0);
    for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(i)] = mpq_class(p.coeff(i));
    return BFormQ(degree, std::move(c));
}

const mpq_class& BFormQ::coeff(int i) const {
    if (i < 0 || i > n_) return kZeroQ;
    return c_[static_cast<std::size_t>(i)];
}

bool BFormQ::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

BFormQ BFormQ::dx() const {
    if (n_ == 0) return BFormQ(0, {mpq_class(0)});
    std::vector<mpq_class> d(static_cast<std::size_t>(n_), 0);
    for (int i = 1; i <= n_; ++i) d[static_cast<std::size_t>(i - 1)] = c_[static_cast<std::size_t>(i)] * i;
    return BFormQ(n_ - 1, std::move(d));
}

BFormQ BFormQ::dy() const {
    if (n_ == 0) return BFormQ(0, {mpq_class(0)});
    std::vector<mpq_class> d(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) d[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] * (n_ - i);
    return BFormQ(n_ - 1, std::move(d));
}

BFormQ operator*(const BFormQ& a, const BFormQ& b) {
    std::vector<mpq_class> r(static_cast<std::size_t>(a.n_ + b.n_) + 1, 0);
    for (int i = 0; i <= a.n_; ++i)
        for (int j = 0; j <= b.n_; ++j) r[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    return BFormQ(a.n_ + b.n_, std::move(r));
}

BFormQ operator+(const BFormQ& a, const BFormQ& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("binary form: degree mismatch in +");
    std::vector<mpq_class> r(static_cast<std::size_t>(a.n_) + 1);
    for (int i = 0; i <= a.n_; ++i) r[static_cast<std::size_t>(i)] = a.c_[static_cast<std::size_t>(i)] + b.c_[static_cast<std::size_t>(i)];
    return BFormQ(a.n_, std::move(r));
}

BFormQ BFormQ::operator*(const mpq_class& s) const {
    std::vector<mpq_class> r = c_;
    for (auto& x : r) x *= s;
    return BFormQ(n_, std::move(r));
}

BFormQ transvectant(const BFormQ& F, const BFormQ& G, int k) {
    int m = F.degree(), n = G.degree();
    if (k > m || k > n) throw std::invalid_argument("transvectant: order exceeds a degree");
    // precompute iterated partials
    std::vector<BFormQ> Fd, Gd;  // Fd[j] = d^k F / dx^{k-j} dy^j
    for (int j = 0; j <= k; ++j) {
        BFormQ f = F, g = G;
        for (int t = 0; t < k - j; ++t) f = f.dx();
        for (int t = 0; t < j; ++t) f = f.dy();
        for (int t = 0; t < j; ++t) g = g.dx();
        for (int t = 0; t < k - j; ++t) g = g.dy();
        Fd.push_back(f);
        Gd.push_back(g);
    }
    BFormQ acc(m + n - 2 * k, std::vector<mpq_class>(static_cast<std::size_t>(m + n - 2 * k) + 1, 0));
    for (int j = 0; j <= k; ++j) {
        mpq_class s(binom(k, j));
        if (j % 2) s = -s;
        acc = acc + (Fd[static_cast<std::size_t>(j)] * Gd[static_cast<std::size_t>(j)]) * s;
    }
    mpq_class norm(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n));
    return acc * norm;
}

}  // namespace nf
