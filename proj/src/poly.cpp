#include "nfstats/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nf {

namespace {
const mpz_class kZero = 0;
}

PolyZ::PolyZ(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyZ PolyZ::from_int64(const std::vector<std::int64_t>& coeffs) {
    std::vector<mpz_class> v;
    v.reserve(coeffs.size());
    for (auto x : coeffs) v.emplace_back(static_cast<long>(x));
    return PolyZ(std::move(v));
}

void PolyZ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& PolyZ::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

const mpz_class& PolyZ::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

mpz_class PolyZ::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

double PolyZ::eval_double(double x) const {
    double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
    return r;
}

PolyZ PolyZ::derivative() const {
    if (c_.size() <= 1) return PolyZ();
    std::vector<mpz_class> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return PolyZ(std::move(d));
}

PolyZ PolyZ::shifted(const mpz_class& t) const {
    // Horner: p(x+t) built bottom-up.
    std::vector<mpz_class> r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        // r := r*(x+t) + coeff
        std::vector<mpz_class> nr(r.size() + 1);
        for (std::size_t i = 0; i < r.size(); ++i) {
            nr[i + 1] += r[i];
            nr[i] += r[i] * t;
        }
        if (nr.empty()) nr.resize(1);
        nr[0] += *it;
        r = std::move(nr);
    }
    return PolyZ(std::move(r));
}

PolyZ PolyZ::scaled_arg(const mpz_class& s) const {
    std::vector<mpz_class> r = c_;
    mpz_class pw = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] *= pw;
        pw *= s;
    }
    return PolyZ(std::move(r));
}

PolyZ operator+(const PolyZ& a, const PolyZ& b) {
    std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.c_.size()) r[i] += a.c_[i];
        if (i < b.c_.size()) r[i] += b.c_[i];
    }
    return PolyZ(std::move(r));
}

PolyZ operator-(const PolyZ& a, const PolyZ& b) {
    std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.c_.size()) r[i] += a.c_[i];
        if (i < b.c_.size()) r[i] -= b.c_[i];
    }
    return PolyZ(std::move(r));
}

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero() || b.is_zero()) return PolyZ();
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return PolyZ(std::move(r));
}

PolyZ PolyZ::operator*(const mpz_class& s) const {
    std::vector<mpz_class> r = c_;
    for (auto& x : r) x *= s;
    return PolyZ(std::move(r));
}

std::string PolyZ::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& ci = coeff(i);
        if (ci == 0) continue;
        if (!first) os << (ci > 0 ? " + " : " - ");
        else if (ci < 0) os << "-";
        mpz_class a = abs(ci);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Bareiss fraction-free determinant of an n x n integer matrix.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

}  // namespace

mpz_class resultant(const PolyZ& f, const PolyZ& g) {
    int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), f.coeff(0).get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    if (n == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), g.coeff(0).get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    std::size_t sz = static_cast<std::size_t>(m + n);
    std::vector<std::vector<mpz_class>> s(sz, std::vector<mpz_class>(sz, 0));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = g.coeff(n - i);
    return bareiss_det(std::move(s));
}

mpz_class discriminant(const PolyZ& f) {
    int n = f.degree();
    if (n < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
    if (n == 1) return 1;
    mpz_class res = resultant(f, f.derivative());
    mpz_class d = res / f.leading();
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) d = -d;
    return d;
}

namespace {

// Signed pseudo-remainder sequence for Sturm chains over Z.
std::vector<PolyZ> sturm_chain(const PolyZ& f) {
    std::vector<PolyZ> chain;
    chain.push_back(f);
    chain.push_back(f.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        const PolyZ& a = chain[chain.size() - 2];
        const PolyZ& b = chain.back();
        // pseudo-remainder of a by b, sign-corrected so the chain keeps
        // the Sturm sign property
        PolyZ r = a;
        mpz_class lb = b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            mpz_class lr = r.leading();
            // r := lb*r - lr*x^k*b
            std::vector<mpz_class> nr(static_cast<std::size_t>(r.degree()) + 1);
            for (int i = 0; i <= r.degree(); ++i) nr[static_cast<std::size_t>(i)] = r.coeff(i) * lb;
            for (int i = 0; i <= b.degree(); ++i) nr[static_cast<std::size_t>(i + k)] -= lr * b.coeff(i);
            r = PolyZ(std::move(nr));
            if (lb < 0) {
                // keep overall sign consistent: multiply once more by lb's sign
                r = r * mpz_class(-1);
            }
        }
        // content reduction to tame growth
        if (!r.is_zero()) {
            mpz_class g = 0;
            for (const auto& cc : r.coeffs()) g = gcd(g, cc);
            if (g > 1) {
                std::vector<mpz_class> rc = r.coeffs();
                for (auto& cc : rc) cc /= g;
                r = PolyZ(std::move(rc));
            }
        }
        r = r * mpz_class(-1);
        if (r.is_zero()) break;
        chain.push_back(r);
    }
    return chain;
}

int sign_at(const PolyZ& p, const mpz_class& x) {
    mpz_class v = p.eval(x);
    return v == 0 ? 0 : (v > 0 ? 1 : -1);
}

int sign_at_inf(const PolyZ& p, bool plus) {
    if (p.is_zero()) return 0;
    int s = sgn(p.leading());
    if (!plus && p.degree() % 2 == 1) s = -s;
    return s;
}

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int sturm_real_roots(const PolyZ& f, const mpz_class& lo, const mpz_class& hi, bool lo_inf, bool hi_inf) {
    if (f.is_zero()) throw std::invalid_argument("sturm: zero polynomial");
    auto chain = sturm_chain(f);
    std::vector<int> slo, shi;
    for (const auto& p : chain) {
        slo.push_back(lo_inf ? sign_at_inf(p, false) : sign_at(p, lo));
        shi.push_back(hi_inf ? sign_at_inf(p, true) : sign_at(p, hi));
    }
    return variations(slo) - variations(shi);
}

namespace {

// sign of p(eps*sqrt(S)) for eps = +-1, exact in Z[sqrt(S)].
int sign_at_sqrt(const PolyZ& p, const mpz_class& S, int eps) {
    mpz_class A = 0, B = 0, pw = 1;  // p = A + B*sqrt(S) at x = sqrt(S)
    for (int i = 0; i <= p.degree(); ++i) {
        if (i % 2 == 0) A += p.coeff(i) * pw;
        else B += p.coeff(i) * pw;
        if (i % 2 == 1) pw *= S;
    }
    if (eps < 0) B = -B;
    if (A == 0 && B == 0) return 0;
    if (A >= 0 && B >= 0) return 1;
    if (A <= 0 && B <= 0) return -1;
    mpz_class a2 = A * A, b2 = B * B * S;
    if (a2 == b2) return 0;
    bool a_wins = a2 > b2;
    int sa = A > 0 ? 1 : -1;
    return a_wins ? sa : -sa;
}

}  // namespace

int sturm_real_roots_sqrt(const PolyZ& f, const mpz_class& S) {
    if (f.is_zero()) throw std::invalid_argument("sturm: zero polynomial");
    if (sign_at_sqrt(f, S, -1) == 0 || sign_at_sqrt(f, S, +1) == 0)
        throw std::invalid_argument("sturm: endpoint is a root; divide out x^2 - S first");
    auto chain = sturm_chain(f);
    std::vector<int> slo, shi;
    for (const auto& p : chain) {
        slo.push_back(sign_at_sqrt(p, S, -1));
        shi.push_back(sign_at_sqrt(p, S, +1));
    }
    return variations(slo) - variations(shi);
}

MPolyZ MPolyZ::constant(const mpz_class& v) {
    MPolyZ p;
    if (v != 0) p.m_.push_back({{0, 0, 0, 0}, v});
    return p;
}

MPolyZ MPolyZ::monomial(const mpz_class& c, std::array<int, 4> exps) {
    MPolyZ p;
    if (c != 0) p.m_.push_back({exps, c});
    p.normalize();
    return p;
}

void MPolyZ::normalize() {
    std::sort(m_.begin(), m_.end(), [](const Mono& a, const Mono& b) { return a.e < b.e; });
    std::vector<Mono> out;
    for (auto& mo : m_) {
        if (!out.empty() && out.back().e == mo.e) out.back().c += mo.c;
        else out.push_back(mo);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Mono& mo) { return mo.c == 0; }), out.end());
    m_ = std::move(out);
}

int MPolyZ::total_degree() const {
    int d = -1;
    for (const auto& mo : m_) d = std::max(d, mo.e[0] + mo.e[1] + mo.e[2] + mo.e[3]);
    return d;
}

int MPolyZ::degree_in(int var) const {
    int d = 0;
    for (const auto& mo : m_) d = std::max(d, mo.e[static_cast<std::size_t>(var)]);
    return d;
}

bool MPolyZ::is_homogeneous() const {
    if (m_.empty()) return true;
    int d = m_[0].e[0] + m_[0].e[1] + m_[0].e[2] + m_[0].e[3];
    for (const auto& mo : m_)
        if (mo.e[0] + mo.e[1] + mo.e[2] + mo.e[3] != d) return false;
    return true;
}

mpz_class MPolyZ::eval(const std::array<mpz_class, 4>& x) const {
    mpz_class r = 0, t;
    for (const auto& mo : m_) {
        t = mo.c;
        for (int v = 0; v < 4; ++v) {
            for (int k = 0; k < mo.e[static_cast<std::size_t>(v)]; ++k) t *= x[static_cast<std::size_t>(v)];
        }
        r += t;
    }
    return r;
}

__int128 MPolyZ::eval_i128(const std::array<std::int64_t, 4>& x) const {
    __int128 r = 0;
    for (const auto& mo : m_) {
        __int128 t = static_cast<__int128>(mo.c.get_si());
        for (int v = 0; v < 4; ++v)
            for (int k = 0; k < mo.e[static_cast<std::size_t>(v)]; ++k) t *= x[static_cast<std::size_t>(v)];
        r += t;
    }
    return r;
}

mpz_class MPolyZ::eval_bound(std::int64_t r) const {
    mpz_class bound = 0, t;
    mpz_class rr(static_cast<long>(r));
    for (const auto& mo : m_) {
        t = abs(mo.c);
        int d = mo.e[0] + mo.e[1] + mo.e[2] + mo.e[3];
        for (int k = 0; k < d; ++k) t *= rr;
        bound += t;
    }
    return bound;
}

MPolyZ operator+(const MPolyZ& a, const MPolyZ& b) {
    MPolyZ r;
    r.m_ = a.m_;
    r.m_.insert(r.m_.end(), b.m_.begin(), b.m_.end());
    r.normalize();
    return r;
}

MPolyZ operator*(const MPolyZ& a, const MPolyZ& b) {
    MPolyZ r;
    for (const auto& ma : a.m_) {
        for (const auto& mb : b.m_) {
            MPolyZ::Mono mo;
            for (std::size_t v = 0; v < 4; ++v) mo.e[v] = ma.e[v] + mb.e[v];
            mo.c = ma.c * mb.c;
            r.m_.push_back(std::move(mo));
        }
    }
    r.normalize();
    return r;
}

MPolyZ MPolyZ::operator*(const mpz_class& s) const {
    MPolyZ r = *this;
    for (auto& mo : r.m_) mo.c *= s;
    r.normalize();
    return r;
}

MPolyZ MPolyZ::pow(int k) const {
    MPolyZ r = MPolyZ::constant(1);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

}  // namespace nf
