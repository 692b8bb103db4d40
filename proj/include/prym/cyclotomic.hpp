#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace prym {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Coefficient vector of the e-th cyclotomic polynomial Phi_e, lowest degree
// first, size phi(e)+1, monic.  Exact integer computation by dividing x^e - 1
// by the product of Phi_d over proper divisors d of e.
std::vector<long long> cyclotomic_polynomial(int e);

int euler_phi(int e);

// An element of the cyclotomic field Q(zeta_e) in the canonical power basis
// {zeta_e^0, ..., zeta_e^{phi(e)-1}}: coefficients are exact rationals and the
// representative polynomial is always reduced modulo Phi_e, so equality of
// values is equality of coefficient vectors.  Rational values therefore have
// support only at index 0.
class Cyclotomic {
  public:
    Cyclotomic() : e_(1), c_(1) {}
    explicit Cyclotomic(int conductor);

    static Cyclotomic from_rational(const Rational& q, int conductor);
    static Cyclotomic from_integer(long long v, int conductor);
    // zeta_e^j for any integer j (reduced mod e, then mod Phi_e).
    static Cyclotomic zeta_power(int conductor, long long j);

    int conductor() const { return e_; }
    const Rational& coeff(int i) const { return c_[static_cast<size_t>(i)]; }

    bool is_zero() const;
    bool is_rational() const;   // support contained in {0}
    Rational as_rational() const;   // requires is_rational()

    Cyclotomic conjugate() const;   // complex conjugation zeta -> zeta^{-1}

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& scale(const Rational& q);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

    bool operator==(const Cyclotomic& o) const { return e_ == o.e_ && c_ == o.c_; }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Total order used only for deterministic sorting: by conductor, then by
    // lexicographic comparison of the coefficient vectors.
    static int compare(const Cyclotomic& a, const Cyclotomic& b);

    std::string str() const;   // diagnostic form, e.g. "3/2 + z12^1 - z12^5"

  private:
    int e_;
    std::vector<Rational> c_;   // size e_, entries >= deg Phi_e always zero

    void reduce(std::vector<Rational>& raw) const;   // raw may have size >= e_
};

namespace detail {

// Integer-coefficient exponent vector over the e-th roots of unity: v
// represents sum_j v[j] * zeta_e^j without reduction.  This is the exact
// fast path used for character-table verification and symmetric-square
// invariant counts, where every value is a non-negative integer combination
// of roots of unity and all sums fit comfortably in 64 bits.
struct RootVec {
    int e = 1;
    std::vector<long long> v;   // size e

    explicit RootVec(int conductor = 1) : e(conductor), v(static_cast<size_t>(conductor), 0) {}

    void add_root(long long exp_mod_e, long long mult) {
        v[static_cast<size_t>(((exp_mod_e % e) + e) % e)] += mult;
    }
};

RootVec rv_add(const RootVec& a, const RootVec& b);
RootVec rv_sub(const RootVec& a, const RootVec& b);
RootVec rv_conj(const RootVec& a);
// Cyclic convolution (product of the represented values), scaled by `scale`,
// accumulated into acc.
void rv_mul_acc(RootVec& acc, const RootVec& a, const RootVec& b, long long scale);

// Reduce modulo Phi_e; returns the reduced length-phi(e) coefficient vector.
std::vector<long long> rv_reduce(const RootVec& a);
// True iff the represented value is the rational integer `q` (after reduction).
bool rv_is_integer(const RootVec& a, long long q);
// Requires the represented value to be a rational integer; returns it, else
// throws internal_inconsistency with `what` in the message.
long long rv_to_integer(const RootVec& a, const char* what);

Cyclotomic rv_to_cyclotomic(const RootVec& a);

} // namespace detail

} // namespace prym
