#include <algorithm>
#include <set>

#include "madgad/decomp.hpp"
#include "madgad/designs.hpp"
#include "madgad/errors.hpp"
#include "madgad/formulas.hpp"
#include "madgad/mad.hpp"

namespace madgad {

PlaneCase plane_case(int which, std::int64_t q) {
    if (q < 2) throw DomainError("plane order must be >= 2");
    const std::int64_t q2 = q * q;
    const std::int64_t q3 = q2 * q;
    switch (which) {
        case 1: return {q2 + q + 1, q2 + q + 1, Rational((q2 + q + 1) * q)};
        case 2: return {q2 + q, q2, Rational((q + 1) * q * (q - 1))};
        case 3: return {q2 + q + 1, q2 + q, Rational(q3 + q2 - 1)};
        case 4: return {q2 + q, q2 - 1, Rational(q3 - 2 * q - 1)};
        case 5: return {q2 + q - 1, q2 - q, Rational(q3 - q2 - 2 * q + 1)};
        default: throw DomainError("plane case must be 1..5");
    }
}

Rational blow_stein_bound(std::int64_t v, std::int64_t r, std::int64_t n) {
    return Rational(v, r) * Rational(n - 1);
}

Rational triangular_bound(std::int64_t t, std::int64_t n) { return Rational((t + 1) * n, 2) - Rational(t); }

Rational plane_plus_r_bound(std::int64_t q, std::int64_t r, std::int64_t n) {
    const std::int64_t v = q * q + q + 1;
    return (Rational(q) + Rational(1, q + 1)) * Rational(n) + Rational(r * q * n, (q + 1) * v) - Rational(q + r);
}

Rational recursive_bound(const Rational& m_ab, std::int64_t b, std::int64_t t) {
    return Rational(t) * (m_ab + Rational(b)) - Rational(b);
}

namespace {

// Prime powers with a field available for plane constructions.
const std::vector<std::int64_t> kPlaneOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13};

Rational small_k_total(int k, int n, SmallKVariant variant) {
    const Decomposition d = construct_small_k(k, n, variant);
    Rational total(0);
    for (const auto& part : d.parts) total += mad_value(part);
    return total;
}

bool psts_feasible(std::int64_t n, std::int64_t t) {
    const std::int64_t triangles = max_triangle_packing_size(static_cast<int>(n));
    if (t % 2 == 0) return t / 2 <= triangles;
    if ((t - 1) / 2 < triangles) return true;
    // All triangles used: a P_3 survives only in the K_{1,3} or C_4 leaves.
    return (t - 1) / 2 == triangles && (n % 6 == 4 || n % 6 == 5);
}

void collect(std::int64_t k, std::int64_t n, std::vector<LowerBound>& out) {
    if (k < 1 || n < 2) return;
    if (k == 1) out.push_back({Rational(n - 1), "single-clique", true});
    if (k == 2 && n >= 3) out.push_back({m_two(n), "k2", true});
    if (k >= 3 && k <= 6 && n <= 400) {
        for (auto variant : {SmallKVariant::A, SmallKVariant::B}) {
            try {
                out.push_back({small_k_total(static_cast<int>(k), static_cast<int>(n), variant),
                               variant == SmallKVariant::A ? "small-k-A" : "small-k-B", false});
            } catch (const DomainError&) {
            }
        }
    }
    if (n >= 3 && (n % 6 == 1 || n % 6 == 3) && k * 6 == n * (n - 1))
        out.push_back({Rational(2 * k), "steiner-triple", true});
    for (std::int64_t q : kPlaneOrders)
        for (int which = 1; which <= 5; ++which) {
            const PlaneCase c = plane_case(which, q);
            if (c.k == k && c.n == n && k <= choose2(n)) out.push_back({c.value, "plane-" + std::to_string(which), false});
        }

    // Blown-up Steiner systems S(2,r,v) with v | n: STS and the planes.
    std::set<std::pair<std::int64_t, std::int64_t>> designs;
    for (std::int64_t v = 7; v <= n; ++v)
        if (v % 6 == 1 || v % 6 == 3) designs.insert({v, 3});
    for (std::int64_t q : kPlaneOrders) {
        designs.insert({q * q + q + 1, q + 1});
        if (q >= 3) designs.insert({q * q, q});
    }
    for (const auto& [v, r] : designs)
        if (v <= n && n % v == 0 && k * r * (r - 1) == v * (v - 1))
            out.push_back({blow_stein_bound(v, r, n), "blow-steiner(v=" + std::to_string(v) + ",r=" + std::to_string(r) + ")", false});

    for (std::int64_t q : kPlaneOrders) {
        const std::int64_t v = q * q + q + 1;
        const std::int64_t r = k - v;
        if (r >= 1 && r <= v && n % v == 0)
            out.push_back({plane_plus_r_bound(q, r, n), "plane+r(q=" + std::to_string(q) + ")", false});
    }
    for (std::int64_t t = 2; t * (t + 1) / 2 <= k; ++t)
        if (t * (t + 1) / 2 == k && n % t == 0) out.push_back({triangular_bound(t, n), "triangular", false});

    for (std::int64_t b = 3; 2 * b <= n; ++b) {
        if (n % b != 0) continue;
        const std::int64_t t = n / b;
        const std::int64_t a = k - b;
        if (a < 1 || a > choose2(b)) continue;
        const LowerBoundTable inner = lower_bound_table(a, b);
        if (!inner.best) continue;
        out.push_back({recursive_bound(inner.best->value, b, t),
                       "recursive(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",t=" + std::to_string(t) + ")",
                       false});
    }

    if (n >= 3) {
        const std::int64_t t = choose2(n) - k;
        if (t >= 0 && 3 * t <= (n - 1) * (n - 1) && psts_feasible(n, t))
            out.push_back({m_upper_range(n, t).value, "upper-range", true});
    }
}

}  // namespace

LowerBoundTable lower_bound_table(std::int64_t k, std::int64_t n) {
    LowerBoundTable table;
    collect(k, n, table.candidates);
    // A realized value meeting the list bound is the optimum.
    if (n >= 3 && k >= 2 && k <= choose2(n)) {
        const Rational upper = m_upper_bound(k, n);
        for (auto& c : table.candidates) c.exact = c.exact || c.value == upper;
    }
    std::stable_sort(table.candidates.begin(), table.candidates.end(),
                     [](const LowerBound& a, const LowerBound& b) {
                         if (a.value != b.value) return a.value > b.value;
                         return a.exact && !b.exact;
                     });
    if (!table.candidates.empty()) table.best = table.candidates.front();
    return table;
}

}  // namespace madgad
