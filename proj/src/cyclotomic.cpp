#include "prym/cyclotomic.hpp"

#include "prym/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace prym {

int euler_phi(int e) {
    int result = e, n = e;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact polynomial long division of integer polynomials; requires the
// division to be exact and the divisor monic.
std::vector<long long> poly_divide_exact(std::vector<long long> num,
                                         const std::vector<long long>& den) {
    const size_t dn = num.size() - 1, dd = den.size() - 1;
    if (num.size() < den.size()) throw internal_inconsistency("polynomial division underflow");
    std::vector<long long> quot(dn - dd + 1, 0);
    for (size_t i = dn + 1; i-- > dd;) {
        long long c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (long long c : num)
        if (c != 0) throw internal_inconsistency("inexact cyclotomic polynomial division");
    return quot;
}

std::vector<long long> cyclotomic_polynomial_uncached(int e) {
    // x^e - 1 divided by the product of Phi_d over proper divisors d | e.
    std::vector<long long> num(static_cast<size_t>(e) + 1, 0);
    num[0] = -1;
    num[static_cast<size_t>(e)] = 1;
    for (int d = 1; d < e; ++d) {
        if (e % d != 0) continue;
        num = poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

} // namespace

std::vector<long long> cyclotomic_polynomial(int e) {
    if (e < 1) throw invalid_input("cyclotomic polynomial index must be positive");
    static std::map<int, std::vector<long long>> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
    }
    auto poly = cyclotomic_polynomial_uncached(e);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(e, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(int conductor) : e_(conductor), c_(static_cast<size_t>(conductor)) {
    if (conductor < 1) throw invalid_input("cyclotomic conductor must be positive");
}

Cyclotomic Cyclotomic::from_rational(const Rational& q, int conductor) {
    Cyclotomic r(conductor);
    r.c_[0] = q;
    return r;
}

Cyclotomic Cyclotomic::from_integer(long long v, int conductor) {
    return from_rational(Rational(v), conductor);
}

Cyclotomic Cyclotomic::zeta_power(int conductor, long long j) {
    Cyclotomic r(conductor);
    long long jm = ((j % conductor) + conductor) % conductor;
    std::vector<Rational> raw(static_cast<size_t>(conductor));
    raw[static_cast<size_t>(jm)] = 1;
    r.reduce(raw);
    r.c_ = std::move(raw);
    return r;
}

void Cyclotomic::reduce(std::vector<Rational>& raw) const {
    const auto& phi = cyclotomic_polynomial(e_);
    const size_t deg = phi.size() - 1;   // = euler_phi(e_)
    for (size_t i = raw.size(); i-- > deg;) {
        if (raw[i] == 0) continue;
        Rational c = raw[i];
        raw[i] = 0;
        // x^i = x^{i-deg} * (x^deg - Phi_e) since Phi_e is monic.
        for (size_t j = 0; j < deg; ++j)
            if (phi[j] != 0) raw[i - deg + j] -= c * phi[j];
    }
    raw.resize(static_cast<size_t>(e_));
}

bool Cyclotomic::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::as_rational() const {
    if (!is_rational()) throw internal_inconsistency("cyclotomic value is not rational: " + str());
    return c_[0];
}

Cyclotomic Cyclotomic::conjugate() const {
    std::vector<Rational> raw(static_cast<size_t>(e_));
    // zeta^i -> zeta^{e-i}; indices above deg Phi_e are re-reduced.
    for (int i = 0; i < e_; ++i) {
        if (c_[static_cast<size_t>(i)] == 0) continue;
        raw[static_cast<size_t>((e_ - i) % e_)] += c_[static_cast<size_t>(i)];
    }
    Cyclotomic r(e_);
    r.reduce(raw);
    r.c_ = std::move(raw);
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (e_ != o.e_) throw internal_inconsistency("cyclotomic conductor mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (e_ != o.e_) throw internal_inconsistency("cyclotomic conductor mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (e_ != o.e_) throw internal_inconsistency("cyclotomic conductor mismatch");
    std::vector<Rational> raw(2 * static_cast<size_t>(e_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            raw[i + j] += c_[i] * o.c_[j];
        }
    }
    reduce(raw);
    c_ = std::move(raw);
    return *this;
}

Cyclotomic& Cyclotomic::scale(const Rational& q) {
    for (auto& c : c_) c *= q;
    return *this;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.e_ != b.e_) return a.e_ < b.e_ ? -1 : 1;
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
    }
    return 0;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < e_; ++i) {
        const Rational& q = c_[static_cast<size_t>(i)];
        if (q == 0) continue;
        Rational mag = q < 0 ? Rational(-q) : q;
        if (first) {
            if (q < 0) os << "-";
        } else {
            os << (q < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) os << mag;
        if (i > 0) os << "z" << e_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace detail {

RootVec rv_add(const RootVec& a, const RootVec& b) {
    if (a.e != b.e) throw internal_inconsistency("root-vector conductor mismatch");
    RootVec r(a.e);
    for (int i = 0; i < a.e; ++i) r.v[static_cast<size_t>(i)] = a.v[static_cast<size_t>(i)] + b.v[static_cast<size_t>(i)];
    return r;
}

RootVec rv_sub(const RootVec& a, const RootVec& b) {
    if (a.e != b.e) throw internal_inconsistency("root-vector conductor mismatch");
    RootVec r(a.e);
    for (int i = 0; i < a.e; ++i) r.v[static_cast<size_t>(i)] = a.v[static_cast<size_t>(i)] - b.v[static_cast<size_t>(i)];
    return r;
}

RootVec rv_conj(const RootVec& a) {
    RootVec r(a.e);
    for (int i = 0; i < a.e; ++i) r.v[static_cast<size_t>((a.e - i) % a.e)] = a.v[static_cast<size_t>(i)];
    return r;
}

void rv_mul_acc(RootVec& acc, const RootVec& a, const RootVec& b, long long scale) {
    if (acc.e != a.e || a.e != b.e) throw internal_inconsistency("root-vector conductor mismatch");
    const int e = a.e;
    for (int i = 0; i < e; ++i) {
        long long av = a.v[static_cast<size_t>(i)];
        if (av == 0) continue;
        long long f = av * scale;
        for (int j = 0; j < e; ++j) {
            long long bv = b.v[static_cast<size_t>(j)];
            if (bv == 0) continue;
            acc.v[static_cast<size_t>((i + j) % e)] += f * bv;
        }
    }
}

std::vector<long long> rv_reduce(const RootVec& a) {
    const auto& phi = cyclotomic_polynomial(a.e);
    const size_t deg = phi.size() - 1;
    std::vector<long long> raw = a.v;
    for (size_t i = raw.size(); i-- > deg;) {
        if (raw[i] == 0) continue;
        long long c = raw[i];
        raw[i] = 0;
        for (size_t j = 0; j < deg; ++j)
            if (phi[j] != 0) raw[i - deg + j] -= c * phi[j];
    }
    raw.resize(deg == 0 ? 1 : deg);
    return raw;
}

bool rv_is_integer(const RootVec& a, long long q) {
    auto red = rv_reduce(a);
    if (red[0] != q) return false;
    for (size_t i = 1; i < red.size(); ++i)
        if (red[i] != 0) return false;
    return true;
}

long long rv_to_integer(const RootVec& a, const char* what) {
    auto red = rv_reduce(a);
    for (size_t i = 1; i < red.size(); ++i)
        if (red[i] != 0)
            throw internal_inconsistency(std::string(what) + ": value is not a rational integer");
    return red[0];
}

Cyclotomic rv_to_cyclotomic(const RootVec& a) {
    Cyclotomic r(a.e);
    for (int j = 0; j < a.e; ++j) {
        long long c = a.v[static_cast<size_t>(j)];
        if (c == 0) continue;
        Cyclotomic t = Cyclotomic::zeta_power(a.e, j);
        t.scale(Rational(c));
        r += t;
    }
    return r;
}

} // namespace detail

} // namespace prym
