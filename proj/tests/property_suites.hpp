// Randomized property suites shared by the unit tests and the acceptance
// runner.  Each suite draws its own deterministically seeded generator, so a
// given case count always exercises the same inputs.
#pragma once

#include "prym/character.hpp"
#include "prym/errors.hpp"
#include "prym/group.hpp"
#include "prym/hodge.hpp"
#include "prym/io.hpp"
#include "prym/prym.hpp"
#include "prym/search.hpp"

#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace prop {

struct SuiteResult {
    std::string name;
    long long cases = 0;
    std::vector<std::string> failures;   // empty means the suite passed

    bool ok() const { return failures.empty(); }
    std::string report() const {
        std::ostringstream out;
        out << name << ": " << cases << " cases";
        if (ok()) {
            out << ", all passed";
        } else {
            out << ", " << failures.size() << " failure(s):";
            for (const std::string& f : failures) out << "\n    " << f;
        }
        return out.str();
    }
};

namespace detail {

inline void fail(SuiteResult& res, const std::string& what) {
    if (res.failures.size() < 8) res.failures.push_back(what);
}

inline std::string tuple_str(const prym::FiniteGroup& G, const std::vector<int>& mv) {
    std::ostringstream out;
    out << G.token() << " [";
    for (size_t i = 0; i < mv.size(); ++i) {
        if (i) out << ' ';
        out << prym::format_element(G, mv[i]);
    }
    out << ']';
    return out.str();
}

} // namespace detail

// ---- Shared group pools -----------------------------------------------------

inline std::shared_ptr<const prym::FiniteGroup> dihedral(int m) {
    std::vector<int> rot(static_cast<size_t>(m)), refl(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        rot[static_cast<size_t>(i)] = (i + 1) % m;
        refl[static_cast<size_t>(i)] = (m - i) % m;
    }
    return std::make_shared<prym::FiniteGroup>(prym::make_permutation_group(m, {rot, refl}));
}

inline std::shared_ptr<const prym::FiniteGroup> quaternion8() {
    // Left multiplication by i and j on (1, -1, i, -i, j, -j, k, -k).
    return std::make_shared<prym::FiniteGroup>(prym::make_permutation_group(
        8, {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}}));
}

inline std::shared_ptr<const prym::FiniteGroup> alternating4() {
    return std::make_shared<prym::FiniteGroup>(
        prym::make_permutation_group(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}));
}

inline std::shared_ptr<const prym::FiniteGroup> cyclic_factors(const std::vector<int>& f) {
    return std::make_shared<prym::FiniteGroup>(prym::make_abelian(f));
}

// ---- Random valid monodromy vectors -----------------------------------------

// s - 1 uniform nonidentity entries plus the forced inverse of their product;
// redraws until the tuple is nontrivial everywhere and generates G.
inline std::vector<int> random_monodromy(const prym::FiniteGroup& G, int s, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(1, G.order() - 1);
    for (int attempt = 0; attempt < 20000; ++attempt) {
        std::vector<int> mv(static_cast<size_t>(s));
        int prefix = 0;
        for (int i = 0; i + 1 < s; ++i) {
            mv[static_cast<size_t>(i)] = pick(rng);
            prefix = G.mul(prefix, mv[static_cast<size_t>(i)]);
        }
        const int last = G.inv(prefix);
        if (last == 0) continue;
        mv[static_cast<size_t>(s - 1)] = last;
        if (!prym::is_generating(G, mv)) continue;
        return mv;
    }
    throw prym::internal_inconsistency("random monodromy rejection loop stalled for " + G.token());
}

// ---- Suite 1: multiplicity formula vs Riemann-Hurwitz ------------------------

// The per-irreducible multiplicities must reassemble the total genus computed
// independently from element orders, and the trivial row must vanish.
inline SuiteResult suite_cw_vs_rh(long long cases) {
    SuiteResult res{"holomorphic multiplicities vs Riemann-Hurwitz", 0, {}};
    std::mt19937_64 rng(0x1001);
    std::vector<std::shared_ptr<const prym::FiniteGroup>> pool = {
        cyclic_factors({6}),    cyclic_factors({12}),   cyclic_factors({2, 6}),
        cyclic_factors({2, 4}), dihedral(3),            dihedral(4),
        dihedral(5),            dihedral(6),            quaternion8(),
        alternating4()};
    std::vector<prym::CharacterTable> tabs;
    for (const auto& G : pool) tabs.push_back(prym::character_table(*G));

    std::uniform_int_distribution<size_t> pick_group(0, pool.size() - 1);
    std::uniform_int_distribution<int> pick_s(3, 8);
    while (res.cases < cases && res.ok()) {
        const size_t gi = pick_group(rng);
        const prym::FiniteGroup& G = *pool[gi];
        const int s = pick_s(rng);
        prym::MonodromyVector mv{&G, random_monodromy(G, s, rng)};

        prym::HodgeDecomposition hd = prym::chevalley_weil(mv, tabs[gi]);
        const long long rh = prym::genus_total(mv);
        long long assembled = 0;
        bool nonneg = true;
        for (size_t r = 0; r < hd.mu.size(); ++r) {
            assembled += static_cast<long long>(tabs[gi].degrees[r]) * hd.mu[r];
            nonneg = nonneg && hd.mu[r] >= 0;
        }
        if (hd.g_tilde != rh)
            detail::fail(res, "genus mismatch " + std::to_string(hd.g_tilde) + " vs " +
                                  std::to_string(rh) + " on " + detail::tuple_str(G, mv.entries));
        if (assembled != rh)
            detail::fail(res, "dimension sum " + std::to_string(assembled) + " != genus " +
                                  std::to_string(rh) + " on " + detail::tuple_str(G, mv.entries));
        if (!nonneg)
            detail::fail(res, "negative multiplicity on " + detail::tuple_str(G, mv.entries));
        if (hd.mu[static_cast<size_t>(tabs[gi].trivial_index)] != 0)
            detail::fail(res, "trivial row not zero on " + detail::tuple_str(G, mv.entries));
        ++res.cases;
    }
    return res;
}

// ---- Suite 2: abelian specialization ----------------------------------------

// For a product of cyclic groups every irreducible is a tuple n of residues,
// and the multiplicity has the line-cover closed form
//   mu_n = -1 + sum over entries with nonzero angle (1 - angle),
// where the angle of entry x under n is sum_j n_j x_j / f_j mod 1.  This
// recomputes every row with plain rational arithmetic, identifying rows by
// their values on the factor generators.
inline SuiteResult suite_abelian_specialization(long long cases) {
    SuiteResult res{"abelian multiplicity closed form", 0, {}};
    std::mt19937_64 rng(0x1002);
    std::vector<std::shared_ptr<const prym::FiniteGroup>> pool = {
        cyclic_factors({6}),    cyclic_factors({12}),    cyclic_factors({15}),
        cyclic_factors({2, 4}), cyclic_factors({2, 6}),  cyclic_factors({3, 6}),
        cyclic_factors({2, 2, 2})};
    std::vector<prym::CharacterTable> tabs;
    for (const auto& G : pool) tabs.push_back(prym::character_table(*G));

    // Map each table row to its dual tuple by matching generator values.
    std::vector<std::vector<std::vector<int>>> dual_tuples(pool.size());
    for (size_t gi = 0; gi < pool.size(); ++gi) {
        const prym::FiniteGroup& G = *pool[gi];
        const prym::CharacterTable& tab = tabs[gi];
        const std::vector<int>& f = G.factors();
        const int e = G.exponent();
        // Element index of the j-th factor generator (digit 1 in slot j).
        std::vector<int> gens(f.size());
        {
            int stride = 1;
            for (size_t j = f.size(); j-- > 0;) {
                gens[j] = stride;
                stride *= f[j];
            }
        }
        dual_tuples[gi].resize(static_cast<size_t>(tab.irrep_count));
        for (int r = 0; r < tab.irrep_count; ++r) {
            std::vector<int> n(f.size(), -1);
            for (size_t j = 0; j < f.size(); ++j) {
                const prym::Cyclotomic& val =
                    tab.values[static_cast<size_t>(r)]
                              [static_cast<size_t>(tab.classes.class_of[static_cast<size_t>(gens[j])])];
                for (int a = 0; a < f[j]; ++a)
                    if (val == prym::Cyclotomic::zeta_power(e, static_cast<long long>(e / f[j]) * a)) {
                        n[j] = a;
                        break;
                    }
                if (n[j] < 0)
                    detail::fail(res, "row " + std::to_string(r) + " of " + G.token() +
                                          " has no root-of-unity generator value");
            }
            dual_tuples[gi][static_cast<size_t>(r)] = std::move(n);
        }
    }
    if (!res.ok()) return res;

    std::uniform_int_distribution<size_t> pick_group(0, pool.size() - 1);
    while (res.cases < cases && res.ok()) {
        const size_t gi = pick_group(rng);
        const prym::FiniteGroup& G = *pool[gi];
        const std::vector<int>& f = G.factors();
        const int min_s = f.size() >= 3 ? 4 : 3;
        std::uniform_int_distribution<int> pick_s(min_s, 8);
        const int s = pick_s(rng);
        prym::MonodromyVector mv{&G, random_monodromy(G, s, rng)};
        prym::HodgeDecomposition hd = prym::chevalley_weil(mv, tabs[gi]);

        // Digits of each entry.
        std::vector<std::vector<int>> digits(static_cast<size_t>(s));
        for (int i = 0; i < s; ++i) {
            int x = mv.entries[static_cast<size_t>(i)];
            std::vector<int> d(f.size());
            for (size_t j = f.size(); j-- > 0;) {
                d[j] = x % f[j];
                x /= f[j];
            }
            digits[static_cast<size_t>(i)] = std::move(d);
        }

        long long total = 0;
        for (int r = 0; r < tabs[gi].irrep_count; ++r) {
            const std::vector<int>& n = dual_tuples[gi][static_cast<size_t>(r)];
            prym::Rational mu(-1);
            bool trivial = true;
            for (int i = 0; i < s; ++i) {
                prym::Rational angle(0);
                for (size_t j = 0; j < f.size(); ++j)
                    angle += prym::Rational(static_cast<long long>(n[j]) *
                                                digits[static_cast<size_t>(i)][j],
                                            f[j]);
                // Reduce mod 1.
                prym::BigInt num = boost::multiprecision::numerator(angle);
                prym::BigInt den = boost::multiprecision::denominator(angle);
                angle = prym::Rational(num % den, den);
                if (angle != 0) mu += prym::Rational(1) - angle;
                trivial = trivial && angle == 0;
            }
            if (trivial) mu = 0;
            if (prym::Rational(hd.mu[static_cast<size_t>(r)]) != mu) {
                std::ostringstream what;
                what << "row " << r << " of " << G.token() << ": closed form " << mu
                     << " vs table " << hd.mu[static_cast<size_t>(r)] << " on "
                     << detail::tuple_str(G, mv.entries);
                detail::fail(res, what.str());
            }
            total += hd.mu[static_cast<size_t>(r)];
        }
        if (total != hd.g_tilde)
            detail::fail(res, "linear rows do not sum to the genus on " +
                                  detail::tuple_str(G, mv.entries));
        ++res.cases;
    }
    return res;
}

// ---- Suite 3: braid / conjugation / reversal invariance ----------------------

// The full invariant record may not change under elementary braid moves,
// simultaneous conjugation, or orientation reversal.
inline SuiteResult suite_braid_invariance(long long cases) {
    SuiteResult res{"invariance under braid moves, conjugation, reversal", 0, {}};
    std::mt19937_64 rng(0x1003);
    std::vector<std::shared_ptr<const prym::FiniteGroup>> pool = {
        cyclic_factors({6}), cyclic_factors({2, 6}), dihedral(3),
        dihedral(4),         dihedral(6),            quaternion8(),
        alternating4()};
    std::vector<prym::CharacterTable> tabs;
    std::vector<std::vector<prym::NormalSubgroup>> ks(pool.size());
    for (size_t gi = 0; gi < pool.size(); ++gi) {
        tabs.push_back(prym::character_table(*pool[gi]));
        for (prym::NormalSubgroup& H : prym::all_normal_subgroups(*pool[gi], tabs[gi].classes))
            if (H.order() >= 2 && H.order() < pool[gi]->order()) ks[gi].push_back(std::move(H));
    }

    std::uniform_int_distribution<size_t> pick_group(0, pool.size() - 1);
    std::uniform_int_distribution<int> pick_s(3, 7);
    while (res.cases < cases && res.ok()) {
        const size_t gi = pick_group(rng);
        const prym::FiniteGroup& G = *pool[gi];
        const int s = pick_s(rng);
        std::vector<int> mv = random_monodromy(G, s, rng);
        const prym::NormalSubgroup& K =
            ks[gi][std::uniform_int_distribution<size_t>(0, ks[gi].size() - 1)(rng)];

        const prym::CoverInvariants base =
            prym::compute_invariants(prym::PrymDatum{&G, mv, K}, tabs[gi]);

        std::vector<int> moved = mv;
        std::uniform_int_distribution<int> pick_pos(1, s - 1);
        std::uniform_int_distribution<int> coin(0, 1);
        for (int step = 0; step < 12; ++step)
            moved = coin(rng) ? prym::braid_move(G, moved, pick_pos(rng))
                              : prym::braid_move_inverse(G, moved, pick_pos(rng));
        const int t = std::uniform_int_distribution<int>(0, G.order() - 1)(rng);
        for (int& x : moved) x = G.conj(t, x);
        if (coin(rng)) moved = prym::reversed_inverse(G, moved);

        const prym::CoverInvariants after =
            prym::compute_invariants(prym::PrymDatum{&G, moved, K}, tabs[gi]);
        if (after != base)
            detail::fail(res, "record changed along the orbit of " + detail::tuple_str(G, mv) +
                                  " (K order " + std::to_string(K.order()) + ")");
        ++res.cases;
    }
    return res;
}

// ---- Suite 4: character tables across the catalog ----------------------------

// Degree square sums and sampled exact inner products for every catalog
// group; the closed-form abelian path against the generic modular splitting;
// dihedral tables against hand-built values.
inline SuiteResult suite_table_orthogonality() {
    SuiteResult res{"character tables across the catalog", 0, {}};
    std::mt19937_64 rng(0x1004);

    for (const prym::CatalogEntry& entry : prym::builtin_catalog()) {
        const prym::FiniteGroup& G = *entry.group;
        prym::CharacterTable tab = prym::character_table(G);

        long long degsum = 0;
        for (int d : tab.degrees) degsum += static_cast<long long>(d) * d;
        if (degsum != G.order())
            detail::fail(res, "degree square sum " + std::to_string(degsum) + " for " + G.token());
        ++res.cases;

        // Exact inner products: all pairs for small tables, a sample otherwise.
        const int k = tab.irrep_count;
        std::vector<std::pair<int, int>> pairs;
        if (k <= 12) {
            for (int i = 0; i < k; ++i)
                for (int j = i; j < k; ++j) pairs.emplace_back(i, j);
        } else {
            std::uniform_int_distribution<int> pick(0, k - 1);
            for (int t = 0; t < 6; ++t) {
                const int i = pick(rng);
                pairs.emplace_back(i, i);
                pairs.emplace_back(i, pick(rng));
            }
        }
        for (const auto& [i, j] : pairs) {
            const prym::Rational got = prym::inner_product(
                tab, tab.values[static_cast<size_t>(i)], tab.values[static_cast<size_t>(j)]);
            if (got != prym::Rational(i == j ? 1 : 0))
                detail::fail(res, "inner product (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") = " + got.str() + " for " + G.token());
            ++res.cases;
        }

        // The production closed form must agree with the generic construction.
        if (G.kind() == prym::FiniteGroup::Kind::abelian) {
            prym::CharacterTable gen = prym::detail::character_table_generic(G);
            if (gen.degrees != tab.degrees || gen.values != tab.values ||
                gen.eigmult != tab.eigmult || gen.frobenius_schur != tab.frobenius_schur)
                detail::fail(res, "closed-form and generic tables differ for " + G.token());
            res.cases += tab.irrep_count;
        }
        if (!res.ok()) return res;
    }

    // Dihedral oracle: the table of D_m assembled from scratch.
    for (int m = 3; m <= 16; ++m) {
        auto Gp = dihedral(m);
        const prym::FiniteGroup& G = *Gp;
        prym::CharacterTable tab = prym::character_table(G);
        const int e = G.exponent();

        // Values indexed by element, then folded onto classes.
        // Elements: order of rot = m; identify rotation amounts and reflections
        // through the permutation images.
        std::vector<int> rot_amount(static_cast<size_t>(G.order()), -1);   // -1 = reflection
        for (int x = 0; x < G.order(); ++x) {
            const std::vector<int>& p = G.perm(x);
            bool is_rot = true;
            const int shift = p[0];
            for (int i = 0; i < m && is_rot; ++i) is_rot = p[static_cast<size_t>(i)] == (i + shift) % m;
            if (is_rot) rot_amount[static_cast<size_t>(x)] = shift;
        }

        std::vector<std::vector<prym::Cyclotomic>> oracle;
        auto value_row = [&](auto&& value_of) {
            std::vector<prym::Cyclotomic> row(static_cast<size_t>(tab.irrep_count));
            for (int c = 0; c < tab.classes.count; ++c)
                row[static_cast<size_t>(c)] =
                    value_of(tab.classes.representatives[static_cast<size_t>(c)]);
            return row;
        };
        // Trivial and sign-of-reflection characters.
        oracle.push_back(value_row([&](int x) {
            (void)x;
            return prym::Cyclotomic::from_integer(1, e);
        }));
        oracle.push_back(value_row([&](int x) {
            return prym::Cyclotomic::from_integer(rot_amount[static_cast<size_t>(x)] >= 0 ? 1 : -1, e);
        }));
        if (m % 2 == 0) {
            // Two more linear characters distinguishing rotation parity.
            for (int flip : {1, -1})
                oracle.push_back(value_row([&](int x) {
                    const int a = rot_amount[static_cast<size_t>(x)];
                    if (a >= 0) return prym::Cyclotomic::from_integer(a % 2 == 0 ? 1 : -1, e);
                    // Reflections split by the parity of the mirror.
                    const int mirror = G.perm(x)[0];
                    int sign = mirror % 2 == 0 ? 1 : -1;
                    return prym::Cyclotomic::from_integer(sign * flip, e);
                }));
        }
        for (int j = 1; 2 * j < m; ++j) {
            oracle.push_back(value_row([&](int x) {
                const int a = rot_amount[static_cast<size_t>(x)];
                if (a < 0) return prym::Cyclotomic(e);
                prym::Cyclotomic v = prym::Cyclotomic::zeta_power(e, static_cast<long long>(e / m) * j * a);
                v += prym::Cyclotomic::zeta_power(e, -static_cast<long long>(e / m) * j * a);
                return v;
            }));
        }

        // Compare as multisets of value rows.
        auto row_key = [&](const std::vector<prym::Cyclotomic>& row) {
            std::ostringstream out;
            for (const auto& v : row) out << v.str() << '|';
            return out.str();
        };
        std::multiset<std::string> want, got;
        for (const auto& row : oracle) want.insert(row_key(row));
        for (const auto& row : tab.values) got.insert(row_key(row));
        if (static_cast<int>(oracle.size()) != tab.irrep_count || want != got)
            detail::fail(res, "dihedral oracle disagrees for m = " + std::to_string(m));
        res.cases += tab.irrep_count;
        if (!res.ok()) return res;
    }
    return res;
}

// ---- Suite 5: pruned enumeration vs naive walk --------------------------------

inline SuiteResult suite_pruned_vs_unpruned(long long cases) {
    SuiteResult res{"pruned enumeration vs naive tuple walk", 0, {}};
    std::mt19937_64 rng(0x1005);
    std::vector<std::shared_ptr<const prym::FiniteGroup>> pool = {
        cyclic_factors({6}), dihedral(3), dihedral(5)};
    std::vector<int> pool_smax = {6, 6, 5};
    std::vector<prym::CharacterTable> tabs;
    for (const auto& G : pool) tabs.push_back(prym::character_table(*G));
    const prym::Criterion crits[] = {prym::Criterion::none, prym::Criterion::noninjective,
                                     prym::Criterion::constant, prym::Criterion::xiao};

    std::uniform_int_distribution<size_t> pick_group(0, pool.size() - 1);
    while (res.cases < cases && res.ok()) {
        const size_t gi = pick_group(rng);
        const int s = std::uniform_int_distribution<int>(3, pool_smax[gi])(rng);
        prym::EnumerateOptions opt;
        opt.gmax = std::uniform_int_distribution<int>(1, 10)(rng);
        opt.criterion = crits[std::uniform_int_distribution<int>(0, 3)(rng)];
        opt.jobs = std::uniform_int_distribution<int>(1, 2)(rng);

        opt.prune = true;
        std::vector<prym::Finding> pruned = prym::enumerate_block(pool[gi], tabs[gi], s, opt);
        opt.prune = false;
        std::vector<prym::Finding> naive = prym::enumerate_block(pool[gi], tabs[gi], s, opt);

        bool same = pruned.size() == naive.size();
        for (size_t i = 0; same && i < pruned.size(); ++i)
            same = pruned[i].mv == naive[i].mv && pruned[i].k_elements == naive[i].k_elements &&
                   pruned[i].inv == naive[i].inv && pruned[i].orbit_size == naive[i].orbit_size &&
                   pruned[i].key == naive[i].key;
        if (!same) {
            std::ostringstream what;
            what << "pruned (" << pruned.size() << ") vs naive (" << naive.size() << ") for "
                 << pool[gi]->token() << " s=" << s << " gmax=" << opt.gmax << " criterion "
                 << prym::criterion_name(opt.criterion);
            detail::fail(res, what.str());
        }
        ++res.cases;
    }
    return res;
}

// ---- Suite 6: degree-2 ramification closed form -------------------------------

// For |K| = 2 the ramification point count must equal the closed form
//   r = sum over entries whose cyclic span contains the involution of n/m_i,
// recomputed here directly from the definition of the entries.
inline SuiteResult suite_d2_ramification(long long cases) {
    SuiteResult res{"degree-2 ramification closed form", 0, {}};
    std::mt19937_64 rng(0x1006);
    std::vector<std::shared_ptr<const prym::FiniteGroup>> pool = {
        cyclic_factors({4}),    cyclic_factors({6}),    cyclic_factors({2, 2}),
        cyclic_factors({2, 4}), cyclic_factors({2, 6}), dihedral(4),
        dihedral(6),            quaternion8()};
    std::vector<prym::CharacterTable> tabs;
    std::vector<std::vector<prym::NormalSubgroup>> involutions(pool.size());
    for (size_t gi = 0; gi < pool.size(); ++gi) {
        tabs.push_back(prym::character_table(*pool[gi]));
        for (prym::NormalSubgroup& H : prym::all_normal_subgroups(*pool[gi], tabs[gi].classes))
            if (H.order() == 2) involutions[gi].push_back(std::move(H));
        if (involutions[gi].empty())
            detail::fail(res, "pool group without an order-2 normal subgroup: " +
                                  pool[gi]->token());
    }
    if (!res.ok()) return res;

    std::uniform_int_distribution<size_t> pick_group(0, pool.size() - 1);
    std::uniform_int_distribution<int> pick_s(3, 8);
    while (res.cases < cases && res.ok()) {
        const size_t gi = pick_group(rng);
        const prym::FiniteGroup& G = *pool[gi];
        const int s = pick_s(rng);
        std::vector<int> mv = random_monodromy(G, s, rng);
        const prym::NormalSubgroup& K =
            involutions[gi][std::uniform_int_distribution<size_t>(
                0, involutions[gi].size() - 1)(rng)];
        const int sigma = K.elements[1];

        long long closed = 0;
        for (int x : mv)
            if (prym::cyclic_subgroup_contains(G, x, sigma))
                closed += G.order() / G.element_order(x);

        prym::CoverInvariants inv = prym::compute_invariants(prym::PrymDatum{&G, mv, K}, tabs[gi]);
        if (inv.r != closed)
            detail::fail(res, "r = " + std::to_string(inv.r) + " but closed form gives " +
                                  std::to_string(closed) + " on " + detail::tuple_str(G, mv));
        ++res.cases;
    }
    return res;
}

} // namespace prop
