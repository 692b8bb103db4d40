#include "prym/families.hpp"
#include "prym/errors.hpp"

namespace prym {

namespace {

void check_parameters(int class_id, long long N) {
    if (class_id < 1 || class_id > 5) throw invalid_input("family class must be between 1 and 5");
    if (N < 1) throw invalid_input("family parameter N must be at least 1");
}

long long family_k(int class_id, long long N) {
    switch (class_id) {
        case 1: return 2 * N + 1;
        case 2: return 2 * N - 1;
        case 3: return N;
        default: return 2 * N;  // classes 4 and 5
    }
}

} // namespace

OwnedDatum family_datum(int class_id, long long N) {
    check_parameters(class_id, N);
    const long long k = family_k(class_id, N);
    OwnedDatum out;
    if (class_id == 5) {
        auto G = std::make_shared<FiniteGroup>(make_abelian({static_cast<int>(2 * k)}));
        auto el = [&](long long b) {
            return static_cast<int>(((b % (2 * k)) + 2 * k) % (2 * k));
        };
        out.mv = {el(1), el(1), el(k - 1), el(k - 1)};
        out.K = make_normal_subgroup(*G, {el(k)});
        out.group = std::move(G);
    } else {
        auto G = std::make_shared<FiniteGroup>(make_abelian({2, static_cast<int>(2 * k)}));
        auto el = [&](long long a, long long b) {
            const long long bb = ((b % (2 * k)) + 2 * k) % (2 * k);
            return static_cast<int>(((a % 2 + 2) % 2) * (2 * k) + bb);
        };
        switch (class_id) {
            case 1: out.mv = {el(1, 0), el(0, k), el(0, 2), el(1, k - 2)}; break;
            case 3: out.mv = {el(1, k - 1), el(1, k - 1), el(0, 1), el(0, 1)}; break;
            default: out.mv = {el(1, 0), el(0, k), el(0, 1), el(1, k - 1)}; break;  // 2 and 4
        }
        out.K = make_normal_subgroup(*G, {el(1, k)});
        out.group = std::move(G);
    }
    for (int x : out.mv)
        if (x == 0)
            throw invalid_input("family parameters give a trivial branch entry");
    return out;
}

FamilyPrediction family_prediction(int class_id, long long N) {
    check_parameters(class_id, N);
    FamilyPrediction p;
    p.k = family_k(class_id, N);
    switch (class_id) {
        case 1:
            p.g_tilde = 2 * p.k - 2;
            p.g = p.k - 1;
            p.r = 2;
            break;
        case 2:
        case 4:
            p.g_tilde = 2 * p.k - 1;
            p.g = p.k;
            p.r = 0;
            break;
        case 3:
            p.g_tilde = 4 * p.k - 3;
            p.g = 2 * p.k - 1;
            p.r = 0;
            break;
        default:  // class 5
            p.g_tilde = 2 * p.k - 1;
            p.g = p.k - 1;
            p.r = 4;
            break;
    }
    return p;
}

FamilyRow verify_family(int class_id, long long N) {
    FamilyRow row;
    row.class_id = class_id;
    row.N = N;
    row.pred = family_prediction(class_id, N);
    row.k = row.pred.k;
    OwnedDatum datum = family_datum(class_id, N);
    row.group_token = datum.group->token();
    row.inv = compute_invariants(datum.view());
    row.match = row.inv.d == row.pred.d && row.inv.s == row.pred.s &&
                row.inv.g_tilde == row.pred.g_tilde && row.inv.g == row.pred.g &&
                row.inv.r == row.pred.r && row.inv.Ntilde == N && row.inv.N == N &&
                row.inv.constant_prym;
    return row;
}

} // namespace prym
