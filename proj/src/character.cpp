#include "prym/character.hpp"

#include "prym/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace prym {

namespace {

using ll = long long;

// Internal signal: numeric failure for this prime, try the next one.
struct retry_prime {};

bool is_prime(ll p) {
    if (p < 2) return false;
    for (ll d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

ll isqrt_floor(ll n) {
    ll r = static_cast<ll>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// The attempt-th smallest prime p with p = 1 (mod e) and p > 2*sqrt(n).
ll admissible_prime(int e, int n, int attempt) {
    ll bound = 2 * isqrt_floor(n);
    int found = 0;
    for (ll k = 1;; ++k) {
        ll p = k * static_cast<ll>(e) + 1;
        if (p <= bound || p <= 2) continue;
        if (!is_prime(p)) continue;
        if (found++ == attempt) return p;
    }
}

struct Fp {
    ll p;
    ll norm(ll a) const { return ((a % p) + p) % p; }
    ll add(ll a, ll b) const { return (a + b) % p; }
    ll sub(ll a, ll b) const { return ((a - b) % p + p) % p; }
    ll mul(ll a, ll b) const { return (a * b) % p; }   // p < 2^31, no overflow
    ll pow(ll a, ll ex) const {
        ll r = 1;
        a %= p;
        while (ex > 0) {
            if (ex & 1) r = mul(r, a);
            a = mul(a, a);
            ex >>= 1;
        }
        return r;
    }
    ll inv(ll a) const { return pow(norm(a), p - 2); }
};

using Mat = std::vector<std::vector<ll>>;

// Row-reduce in place; returns pivot column indices.  All arithmetic mod p.
std::vector<int> rref(const Fp& F, Mat& m) {
    std::vector<int> pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
                sel = i;
                break;
            }
        if (sel == -1) continue;
        std::swap(m[static_cast<size_t>(sel)], m[static_cast<size_t>(r)]);
        ll piv_inv = F.inv(m[static_cast<size_t>(r)][static_cast<size_t>(c)]);
        for (int j = c; j < cols; ++j)
            m[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                F.mul(m[static_cast<size_t>(r)][static_cast<size_t>(j)], piv_inv);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            ll f = m[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (f == 0) continue;
            for (int j = c; j < cols; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    F.sub(m[static_cast<size_t>(i)][static_cast<size_t>(j)],
                          F.mul(f, m[static_cast<size_t>(r)][static_cast<size_t>(j)]));
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(static_cast<size_t>(r));
    return pivots;
}

// Basis (rows) of the right nullspace of m.
Mat nullspace(const Fp& F, Mat m) {
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    std::vector<int> pivots = rref(F, m);
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    Mat basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        std::vector<ll> v(static_cast<size_t>(cols), 0);
        v[static_cast<size_t>(c)] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] =
                F.sub(0, m[r][static_cast<size_t>(c)]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Similarity reduction to upper Hessenberg form, in place.
void hessenberg(const Fp& F, Mat& m) {
    const int n = static_cast<int>(m.size());
    for (int c = 0; c + 2 < n; ++c) {
        int sel = -1;
        for (int r = c + 1; r < n; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
                sel = r;
                break;
            }
        if (sel == -1) continue;
        if (sel != c + 1) {
            std::swap(m[static_cast<size_t>(sel)], m[static_cast<size_t>(c + 1)]);
            for (int r = 0; r < n; ++r)
                std::swap(m[static_cast<size_t>(r)][static_cast<size_t>(sel)],
                          m[static_cast<size_t>(r)][static_cast<size_t>(c + 1)]);
        }
        ll piv_inv = F.inv(m[static_cast<size_t>(c + 1)][static_cast<size_t>(c)]);
        for (int r = c + 2; r < n; ++r) {
            ll f = F.mul(m[static_cast<size_t>(r)][static_cast<size_t>(c)], piv_inv);
            if (f == 0) continue;
            // Row op R_r -= f * R_{c+1}, then column op C_{c+1} += f * C_r.
            for (int j = 0; j < n; ++j)
                m[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                    F.sub(m[static_cast<size_t>(r)][static_cast<size_t>(j)],
                          F.mul(f, m[static_cast<size_t>(c + 1)][static_cast<size_t>(j)]));
            for (int i = 0; i < n; ++i)
                m[static_cast<size_t>(i)][static_cast<size_t>(c + 1)] =
                    F.add(m[static_cast<size_t>(i)][static_cast<size_t>(c + 1)],
                          F.mul(f, m[static_cast<size_t>(i)][static_cast<size_t>(r)]));
        }
    }
}

// Characteristic polynomial of an upper Hessenberg matrix via the leading
// principal minor recurrence; coefficients lowest-degree first.
std::vector<ll> hessenberg_charpoly(const Fp& F, const Mat& h) {
    const int n = static_cast<int>(h.size());
    std::vector<std::vector<ll>> ps(static_cast<size_t>(n) + 1);
    ps[0] = {1};
    for (int i = 1; i <= n; ++i) {
        const auto& prev = ps[static_cast<size_t>(i - 1)];
        std::vector<ll> t(static_cast<size_t>(i) + 1, 0);
        // (lambda - h[i-1][i-1]) * prev
        for (size_t j = 0; j < prev.size(); ++j) {
            t[j + 1] = F.add(t[j + 1], prev[j]);
            t[j] = F.sub(t[j], F.mul(h[static_cast<size_t>(i - 1)][static_cast<size_t>(i - 1)], prev[j]));
        }
        ll prod = 1;
        for (int m = i - 1; m >= 1; --m) {
            prod = F.mul(prod, h[static_cast<size_t>(m)][static_cast<size_t>(m - 1)]);
            ll coef = F.mul(h[static_cast<size_t>(m - 1)][static_cast<size_t>(i - 1)], prod);
            if (coef == 0) continue;
            const auto& pm = ps[static_cast<size_t>(m - 1)];
            for (size_t j = 0; j < pm.size(); ++j) t[j] = F.sub(t[j], F.mul(coef, pm[j]));
        }
        ps[static_cast<size_t>(i)] = std::move(t);
    }
    return ps[static_cast<size_t>(n)];
}

std::vector<ll> poly_roots(const Fp& F, const std::vector<ll>& poly) {
    std::vector<ll> roots;
    for (ll x = 0; x < F.p; ++x) {
        ll v = 0;
        for (size_t j = poly.size(); j-- > 0;) v = F.add(F.mul(v, x), poly[j]);
        if (v == 0) roots.push_back(x);
    }
    return roots;
}

ll primitive_root(const Fp& F) {
    ll phi = F.p - 1;
    std::vector<ll> prime_factors;
    ll rest = phi;
    for (ll d = 2; d * d <= rest; ++d) {
        if (rest % d == 0) {
            prime_factors.push_back(d);
            while (rest % d == 0) rest /= d;
        }
    }
    if (rest > 1) prime_factors.push_back(rest);
    for (ll g = 2; g < F.p; ++g) {
        bool ok = true;
        for (ll q : prime_factors)
            if (F.pow(g, phi / q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw internal_inconsistency("no primitive root found");
}

struct RawRow {
    int degree = 0;
    std::vector<std::vector<int>> eigmult;   // [class][alpha]
    std::vector<detail::RootVec> rv;         // [class]
    Character values;                        // [class]
};

// Exact verification: degree square sum and full row orthogonality over the
// integer root-of-unity vectors.
bool rows_orthonormal(const std::vector<RawRow>& rows, const ConjugacyClasses& cc, int n, int e) {
    ll degsum = 0;
    for (const auto& r : rows) degsum += static_cast<ll>(r.degree) * r.degree;
    if (degsum != n) return false;
    const int k = cc.count;
    for (size_t a = 0; a < rows.size(); ++a) {
        for (size_t b = a; b < rows.size(); ++b) {
            detail::RootVec acc(e);
            for (int c = 0; c < k; ++c) {
                detail::RootVec cb = detail::rv_conj(rows[b].rv[static_cast<size_t>(c)]);
                detail::rv_mul_acc(acc, rows[a].rv[static_cast<size_t>(c)], cb,
                                   cc.sizes[static_cast<size_t>(c)]);
            }
            if (!detail::rv_is_integer(acc, a == b ? n : 0)) return false;
        }
    }
    return true;
}

// One full Dixon pass with a fixed prime; throws retry_prime on any numeric
// failure.
std::vector<RawRow> dixon_pass(const FiniteGroup& G, const ConjugacyClasses& cc, ll prime) {
    const int n = G.order();
    const int k = cc.count;
    const int e = G.exponent();
    Fp F{prime};

    // Simultaneous eigenvectors of the class matrices.
    struct Subspace {
        Mat rows;
        std::vector<int> pivots;
    };
    std::vector<Subspace> subs;
    {
        Subspace full;
        full.rows.assign(static_cast<size_t>(k), std::vector<ll>(static_cast<size_t>(k), 0));
        for (int i = 0; i < k; ++i) {
            full.rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
            full.pivots.push_back(i);
        }
        subs.push_back(std::move(full));
    }
    auto all_split = [&]() {
        for (const auto& s : subs)
            if (s.rows.size() > 1) return false;
        return true;
    };
    for (int i = 1; i < k && !all_split(); ++i) {
        // Class matrix M[j][l] = #{(x,y) in C_i x C_j : xy = z_l}.
        Mat M(static_cast<size_t>(k), std::vector<ll>(static_cast<size_t>(k), 0));
        for (int x : cc.members[static_cast<size_t>(i)]) {
            int xinv = G.inv(x);
            for (int l = 0; l < k; ++l) {
                int y = G.mul(xinv, cc.representatives[static_cast<size_t>(l)]);
                M[static_cast<size_t>(cc.class_of[static_cast<size_t>(y)])][static_cast<size_t>(l)] += 1;
            }
        }
        for (auto& row : M)
            for (auto& v : row) v %= F.p;

        std::vector<Subspace> next;
        for (auto& S : subs) {
            const int d = static_cast<int>(S.rows.size());
            if (d == 1) {
                next.push_back(std::move(S));
                continue;
            }
            // Matrix of M restricted to the (invariant) subspace, in the RREF
            // basis: column r lists the coordinates of M * rows[r], which are
            // read off directly at the pivot columns.
            Mat R(static_cast<size_t>(d), std::vector<ll>(static_cast<size_t>(d), 0));
            for (int r = 0; r < d; ++r) {
                std::vector<ll> w(static_cast<size_t>(k), 0);
                for (int j = 0; j < k; ++j) {
                    ll acc = 0;
                    for (int c = 0; c < k; ++c)
                        acc += M[static_cast<size_t>(j)][static_cast<size_t>(c)] *
                               S.rows[static_cast<size_t>(r)][static_cast<size_t>(c)] % F.p;
                    w[static_cast<size_t>(j)] = acc % F.p;
                }
                for (int c = 0; c < d; ++c)
                    R[static_cast<size_t>(c)][static_cast<size_t>(r)] = w[static_cast<size_t>(S.pivots[static_cast<size_t>(c)])];
                // Invariance check: w must equal sum_c R[c][r] * S.rows[c].
                for (int j = 0; j < k; ++j) {
                    ll acc = 0;
                    for (int c = 0; c < d; ++c)
                        acc += R[static_cast<size_t>(c)][static_cast<size_t>(r)] *
                               S.rows[static_cast<size_t>(c)][static_cast<size_t>(j)] % F.p;
                    if (acc % F.p != w[static_cast<size_t>(j)]) throw retry_prime{};
                }
            }
            Mat H = R;
            hessenberg(F, H);
            auto roots = poly_roots(F, hessenberg_charpoly(F, H));
            int total = 0;
            for (ll lam : roots) {
                Mat shifted = R;
                for (int r = 0; r < d; ++r)
                    shifted[static_cast<size_t>(r)][static_cast<size_t>(r)] =
                        F.sub(shifted[static_cast<size_t>(r)][static_cast<size_t>(r)], lam);
                Mat kernel = nullspace(F, std::move(shifted));
                if (kernel.empty()) throw retry_prime{};
                total += static_cast<int>(kernel.size());
                // Lift kernel rows from subspace coordinates to full coordinates.
                Mat lifted(kernel.size(), std::vector<ll>(static_cast<size_t>(k), 0));
                for (size_t r = 0; r < kernel.size(); ++r)
                    for (int c = 0; c < d; ++c) {
                        ll f = kernel[r][static_cast<size_t>(c)];
                        if (f == 0) continue;
                        for (int j = 0; j < k; ++j)
                            lifted[r][static_cast<size_t>(j)] =
                                F.add(lifted[r][static_cast<size_t>(j)],
                                      F.mul(f, S.rows[static_cast<size_t>(c)][static_cast<size_t>(j)]));
                    }
                Subspace child;
                child.pivots = rref(F, lifted);
                child.rows = std::move(lifted);
                if (child.rows.empty()) throw retry_prime{};
                next.push_back(std::move(child));
            }
            if (total != d) throw retry_prime{};
        }
        subs = std::move(next);
    }
    if (static_cast<int>(subs.size()) != k || !all_split()) throw retry_prime{};

    // Root of unity bookkeeping for the eigenvalue lift.
    ll xi = F.pow(primitive_root(F), (F.p - 1) / e);

    std::vector<RawRow> rows;
    for (const auto& S : subs) {
        const std::vector<ll>& v = S.rows[0];
        if (v[0] == 0) throw retry_prime{};
        ll v0inv = F.inv(v[0]);
        std::vector<ll> omega(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) omega[static_cast<size_t>(j)] = F.mul(v[static_cast<size_t>(j)], v0inv);

        ll s = 0;
        for (int j = 0; j < k; ++j) {
            ll term = F.mul(omega[static_cast<size_t>(j)],
                            omega[static_cast<size_t>(cc.inverse_class[static_cast<size_t>(j)])]);
            s = F.add(s, F.mul(term, F.inv(cc.sizes[static_cast<size_t>(j)] % F.p)));
        }
        if (s == 0) throw retry_prime{};
        ll dsq = F.mul(F.norm(n), F.inv(s));
        int degree = 0;
        for (ll cand = 1; cand * cand <= n; ++cand)
            if (F.norm(cand * cand) == dsq) {
                degree = static_cast<int>(cand);
                break;
            }
        if (degree == 0) throw retry_prime{};

        std::vector<ll> chi_p(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j)
            chi_p[static_cast<size_t>(j)] = F.mul(F.mul(degree, omega[static_cast<size_t>(j)]),
                                                  F.inv(cc.sizes[static_cast<size_t>(j)] % F.p));

        RawRow row;
        row.degree = degree;
        row.eigmult.resize(static_cast<size_t>(k));
        row.rv.assign(static_cast<size_t>(k), detail::RootVec(e));
        for (int c = 0; c < k; ++c) {
            const int m = cc.rep_order[static_cast<size_t>(c)];
            ll w = F.pow(xi, e / m);
            ll winv = F.inv(w);
            ll minv = F.inv(m);
            auto& mult = row.eigmult[static_cast<size_t>(c)];
            mult.resize(static_cast<size_t>(m));
            ll total = 0;
            for (int alpha = 0; alpha < m; ++alpha) {
                ll acc = 0;
                ll wa = F.pow(winv, alpha);
                ll waj = 1;
                for (int t = 0; t < m; ++t) {
                    acc = F.add(acc, F.mul(chi_p[static_cast<size_t>(cc.power_map[static_cast<size_t>(c)][static_cast<size_t>(t)])], waj));
                    waj = F.mul(waj, wa);
                }
                ll na = F.mul(acc, minv);
                if (na > degree) throw retry_prime{};
                mult[static_cast<size_t>(alpha)] = static_cast<int>(na);
                total += na;
                if (na != 0) row.rv[static_cast<size_t>(c)].add_root(static_cast<ll>(e / m) * alpha, na);
            }
            if (total != degree) throw retry_prime{};
        }
        rows.push_back(std::move(row));
    }

    if (!rows_orthonormal(rows, cc, n, e)) throw retry_prime{};
    return rows;
}

// Closed-form table for a group built from an explicit cyclic-factor list:
// characters are indexed by tuples against the same mixed radix, and the
// value at (a_1..a_t) for index (n_1..n_t) is zeta_e^{sum n_j a_j e/f_j}.
std::vector<RawRow> abelian_rows(const FiniteGroup& G, const ConjugacyClasses& cc) {
    const int n = G.order();
    const int e = G.exponent();
    const std::vector<int>& factors = G.factors();
    const size_t nf = factors.size();
    auto digits = [&](int idx) {
        std::vector<int> d(nf);
        for (size_t j = nf; j-- > 0;) {
            d[j] = idx % factors[j];
            idx /= factors[j];
        }
        return d;
    };
    std::vector<std::vector<int>> elem_digits;
    elem_digits.reserve(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) elem_digits.push_back(digits(x));

    std::vector<RawRow> rows;
    rows.reserve(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) {
        const std::vector<int>& nt = elem_digits[static_cast<size_t>(t)];
        RawRow row;
        row.degree = 1;
        row.eigmult.resize(static_cast<size_t>(n));
        row.rv.assign(static_cast<size_t>(n), detail::RootVec(e));
        for (int c = 0; c < n; ++c) {
            if (cc.representatives[static_cast<size_t>(c)] != c)
                throw internal_inconsistency("commutative group with a class of size > 1");
            long long T = 0;
            for (size_t j = 0; j < nf; ++j)
                T += static_cast<long long>(nt[j]) * elem_digits[static_cast<size_t>(c)][j] *
                     (e / factors[j]);
            T %= e;
            const int m = cc.rep_order[static_cast<size_t>(c)];
            if ((T * m) % e != 0)
                throw internal_inconsistency("character value is not an order-of-element root of unity");
            auto& mult = row.eigmult[static_cast<size_t>(c)];
            mult.assign(static_cast<size_t>(m), 0);
            mult[static_cast<size_t>(T * m / e)] = 1;
            row.rv[static_cast<size_t>(c)].add_root(T, 1);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

bool CharacterTable::kernel_contains(int irrep, const NormalSubgroup& K) const {
    for (int el : K.elements)
        if (!kernel_class[static_cast<size_t>(irrep)][static_cast<size_t>(classes.class_of[static_cast<size_t>(el)])])
            return false;
    return true;
}

namespace {

CharacterTable character_table_impl(const FiniteGroup& G, int order_cap, bool force_generic) {
    if (G.order() > order_cap)
        throw too_large("character table requested for group of order " + std::to_string(G.order()) +
                        ", cap is " + std::to_string(order_cap));
    ConjugacyClasses cc = conjugacy_classes(G);
    const int e = G.exponent();
    const int k = cc.count;

    std::vector<RawRow> rows;
    if (G.kind() == FiniteGroup::Kind::abelian && !force_generic) {
        rows = abelian_rows(G, cc);
        if (!rows_orthonormal(rows, cc, G.order(), e))
            throw internal_inconsistency("closed-form character table fails orthogonality");
    } else {
        bool built = false;
        for (int attempt = 0; attempt < 8 && !built; ++attempt) {
            try {
                rows = dixon_pass(G, cc, admissible_prime(e, G.order(), attempt));
                built = true;
            } catch (const retry_prime&) {
                continue;
            }
        }
        if (!built)
            throw internal_inconsistency(
                "character table construction failed for every retry prime (group " + G.token() +
                ")");
    }

    for (auto& row : rows) {
        row.values.resize(static_cast<size_t>(k));
        for (int c = 0; c < k; ++c)
            row.values[static_cast<size_t>(c)] = detail::rv_to_cyclotomic(row.rv[static_cast<size_t>(c)]);
    }
    std::vector<int> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const RawRow& ra = rows[static_cast<size_t>(a)];
        const RawRow& rb = rows[static_cast<size_t>(b)];
        if (ra.degree != rb.degree) return ra.degree < rb.degree;
        for (int c = 0; c < k; ++c) {
            int cmp = Cyclotomic::compare(ra.values[static_cast<size_t>(c)], rb.values[static_cast<size_t>(c)]);
            if (cmp != 0) return cmp < 0;
        }
        return false;
    });

    CharacterTable tab;
    tab.group = &G;
    tab.classes = std::move(cc);
    tab.irrep_count = k;
    for (int idx : order) {
        RawRow& row = rows[static_cast<size_t>(idx)];
        tab.degrees.push_back(row.degree);
        tab.values.push_back(std::move(row.values));
        tab.eigmult.push_back(std::move(row.eigmult));
        tab.values_rv.push_back(std::move(row.rv));
    }
    // Derived integer data: kernels, multiplicity-formula terms, duals, FS.
    tab.kernel_class.resize(static_cast<size_t>(k));
    tab.cw_count.resize(static_cast<size_t>(k));
    tab.cw_weight.resize(static_cast<size_t>(k));
    for (int r = 0; r < k; ++r) {
        auto& ker = tab.kernel_class[static_cast<size_t>(r)];
        auto& cnt = tab.cw_count[static_cast<size_t>(r)];
        auto& wgt = tab.cw_weight[static_cast<size_t>(r)];
        ker.resize(static_cast<size_t>(k));
        cnt.resize(static_cast<size_t>(k));
        wgt.resize(static_cast<size_t>(k));
        const int d = tab.degrees[static_cast<size_t>(r)];
        for (int c = 0; c < k; ++c) {
            const auto& mult = tab.eigmult[static_cast<size_t>(r)][static_cast<size_t>(c)];
            ker[static_cast<size_t>(c)] = mult[0] == d ? 1 : 0;
            long long nontriv = 0, weight = 0;
            for (size_t alpha = 1; alpha < mult.size(); ++alpha) {
                nontriv += mult[alpha];
                weight += static_cast<long long>(alpha) * mult[alpha];
            }
            cnt[static_cast<size_t>(c)] = nontriv;
            wgt[static_cast<size_t>(c)] = weight;
        }
        bool trivial = d == 1;
        for (int c = 0; c < k && trivial; ++c) trivial = ker[static_cast<size_t>(c)] == 1;
        if (trivial) {
            if (tab.trivial_index != -1) throw internal_inconsistency("duplicate trivial character");
            tab.trivial_index = r;
        }
    }
    if (tab.trivial_index == -1) throw internal_inconsistency("trivial character missing from table");

    // Dual pairing via conjugated eigenvalue multiplicities.
    tab.dual.assign(static_cast<size_t>(k), -1);
    for (int r = 0; r < k; ++r) {
        for (int r2 = 0; r2 < k; ++r2) {
            if (tab.degrees[static_cast<size_t>(r2)] != tab.degrees[static_cast<size_t>(r)]) continue;
            bool match = true;
            for (int c = 0; c < k && match; ++c) {
                const auto& ma = tab.eigmult[static_cast<size_t>(r)][static_cast<size_t>(c)];
                const auto& mb = tab.eigmult[static_cast<size_t>(r2)][static_cast<size_t>(c)];
                const int m = static_cast<int>(ma.size());
                for (int alpha = 0; alpha < m; ++alpha)
                    if (mb[static_cast<size_t>(alpha)] != ma[static_cast<size_t>((m - alpha) % m)]) {
                        match = false;
                        break;
                    }
            }
            if (match) {
                tab.dual[static_cast<size_t>(r)] = r2;
                break;
            }
        }
        if (tab.dual[static_cast<size_t>(r)] == -1)
            throw internal_inconsistency("conjugate character missing from table");
    }

    // Frobenius–Schur indicator: (1/|G|) sum_g chi(g^2).
    const int n = G.order();
    for (int r = 0; r < k; ++r) {
        detail::RootVec acc(e);
        for (int c = 0; c < k; ++c) {
            int c2 = tab.classes.power_class(c, 2);
            const auto& rv = tab.values_rv[static_cast<size_t>(r)][static_cast<size_t>(c2)];
            for (int j = 0; j < e; ++j)
                acc.v[static_cast<size_t>(j)] += rv.v[static_cast<size_t>(j)] * tab.classes.sizes[static_cast<size_t>(c)];
        }
        long long fsn = detail::rv_to_integer(acc, "frobenius-schur indicator");
        if (fsn % n != 0) throw internal_inconsistency("frobenius-schur indicator is not integral");
        long long fs = fsn / n;
        if (fs < -1 || fs > 1) throw internal_inconsistency("frobenius-schur indicator out of range");
        if ((fs != 0) != (tab.dual[static_cast<size_t>(r)] == r))
            throw internal_inconsistency("frobenius-schur indicator disagrees with self-duality");
        tab.frobenius_schur.push_back(static_cast<int>(fs));
    }
    return tab;
}

} // namespace

CharacterTable character_table(const FiniteGroup& G, int order_cap) {
    return character_table_impl(G, order_cap, false);
}

namespace detail {
CharacterTable character_table_generic(const FiniteGroup& G, int order_cap) {
    return character_table_impl(G, order_cap, true);
}
} // namespace detail

Rational inner_product(const CharacterTable& tab, const Character& a, const Character& b) {
    if (a.size() != static_cast<size_t>(tab.irrep_count) || b.size() != a.size())
        throw invalid_input("inner product requires one value per conjugacy class");
    const int e = tab.group->exponent();
    Cyclotomic acc(e);
    for (int c = 0; c < tab.irrep_count; ++c) {
        Cyclotomic term = a[static_cast<size_t>(c)] * b[static_cast<size_t>(c)].conjugate();
        term.scale(Rational(tab.classes.sizes[static_cast<size_t>(c)]));
        acc += term;
    }
    acc.scale(Rational(1, tab.group->order()));
    if (!acc.is_rational())
        throw internal_inconsistency("character inner product is not rational: " + acc.str());
    return acc.as_rational();
}

Character symmetric_square_character(const CharacterTable& tab, const Character& chi) {
    const int k = tab.irrep_count;
    if (chi.size() != static_cast<size_t>(k))
        throw invalid_input("character length does not match the class count");
    Character out(static_cast<size_t>(k));
    for (int c = 0; c < k; ++c) {
        int c2 = tab.classes.power_class(c, 2);
        Cyclotomic v = chi[static_cast<size_t>(c)] * chi[static_cast<size_t>(c)];
        v += chi[static_cast<size_t>(c2)];
        v.scale(Rational(1, 2));
        out[static_cast<size_t>(c)] = std::move(v);
    }
    return out;
}

std::vector<long long> eigenvalue_multiplicities(const CharacterTable& tab, const Character& chi,
                                                 int element) {
    const FiniteGroup& G = *tab.group;
    if (element < 0 || element >= G.order()) throw invalid_input("element index out of range");
    if (chi.size() != static_cast<size_t>(tab.irrep_count))
        throw invalid_input("character length does not match the class count");
    const int m = G.element_order(element);
    const int e = G.exponent();
    std::vector<long long> out(static_cast<size_t>(m));
    // chi on the powers of the element.
    std::vector<const Cyclotomic*> pow_vals(static_cast<size_t>(m));
    {
        int x = 0;
        for (int t = 0; t < m; ++t) {
            pow_vals[static_cast<size_t>(t)] =
                &chi[static_cast<size_t>(tab.classes.class_of[static_cast<size_t>(x)])];
            x = G.mul(x, element);
        }
    }
    for (int alpha = 0; alpha < m; ++alpha) {
        Cyclotomic acc(e);
        for (int t = 0; t < m; ++t) {
            Cyclotomic term = *pow_vals[static_cast<size_t>(t)] *
                              Cyclotomic::zeta_power(e, -static_cast<long long>(e / m) * alpha * t);
            acc += term;
        }
        acc.scale(Rational(1, m));
        if (!acc.is_rational())
            throw internal_inconsistency("eigenvalue multiplicity is not rational; input is not a character");
        Rational q = acc.as_rational();
        if (boost::multiprecision::denominator(q) != 1 || q < 0)
            throw internal_inconsistency("eigenvalue multiplicity is not a non-negative integer; input is not a character");
        out[static_cast<size_t>(alpha)] = q.convert_to<long long>();
    }
    return out;
}

Character trivial_character(const CharacterTable& tab) {
    return tab.values[static_cast<size_t>(tab.trivial_index)];
}

} // namespace prym
