#include "madgad/normalize.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "madgad/errors.hpp"
#include "madgad/mad.hpp"

namespace madgad {

ItemDescriptor describe(std::int64_t edges) {
    const auto [p, r] = clique_split(edges);
    return {p, r};
}

ItemType item_type(const ItemDescriptor& d) {
    if (d.r == 0) return ItemType::A;
    return 2 * d.r >= d.p - 1 ? ItemType::B : ItemType::C;
}

Rational item_mad(std::int64_t edges) { return edges == 0 ? Rational(0) : g_max_mad(edges); }

std::vector<ItemDescriptor> NormalizationState::descriptors() const {
    std::vector<ItemDescriptor> out;
    out.reserve(items.size());
    for (auto e : items) out.push_back(describe(e));
    return out;
}

Rational NormalizationState::mad_sum() const {
    Rational total(0);
    for (auto e : items) total += item_mad(e);
    return total;
}

std::int64_t NormalizationState::conserved_total() const {
    std::int64_t total = spare;
    for (auto e : items) total += e;
    return total;
}

NormalizationState to_representative_list(const std::vector<Graph>& graphs) {
    NormalizationState state;
    state.input_mad_sum = Rational(0);
    for (const auto& g : graphs) {
        state.items.push_back(g.size());
        state.input_mad_sum += mad_value(g);
    }
    return state;
}

NormalizationState to_representative_list(const GraphList& list) { return to_representative_list(expand(list)); }

namespace {

using Key = std::tuple<std::int64_t, std::int64_t, std::size_t>;

Key key_of(const std::vector<std::int64_t>& items, std::size_t i) {
    const ItemDescriptor d = describe(items[i]);
    return {d.p, d.r, i};
}

// p-value used for balancing: K_c counts as G_{c-1,c-1}.
std::int64_t balance_value(const ItemDescriptor& d) { return d.r == 0 ? d.p - 1 : d.p; }

class Rewriter {
public:
    explicit Rewriter(NormalizationState& state) : s_(state) {}

    // Applies the first applicable rule; false once terminal.
    bool step() {
        return strip_type_c() || transfer_between_b() || transfer_from_complete() || balance() ||
               fill_b() || grow_smallest() || place_residual();
    }

private:
    NormalizationState& s_;

    std::vector<std::size_t> indices_of(ItemType type) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < s_.items.size(); ++i)
            if (item_type(describe(s_.items[i])) == type) out.push_back(i);
        return out;
    }

    void record(const std::string& rule, const std::vector<std::pair<std::size_t, std::int64_t>>& updates,
                std::int64_t spare_after) {
        NormalizationStep entry;
        entry.rule = rule;
        entry.spare_before = s_.spare;
        for (const auto& [i, edges] : updates) {
            entry.changes.push_back({i, describe(s_.items[i]), describe(edges)});
            s_.items[i] = edges;
        }
        s_.spare = spare_after;
        entry.spare_after = s_.spare;
        entry.mad_sum = s_.mad_sum();
        s_.log.push_back(std::move(entry));
    }

    // Moves r' = min(r_i, p_j - r_j) edges from donor i to receiver j, with
    // the donor viewed as (p_i, r_i) and the receiver as (p_j, r_j).
    void transfer(const std::string& rule, std::size_t i, std::int64_t r_i, std::size_t j, std::int64_t p_j,
                  std::int64_t r_j) {
        const std::int64_t moved = std::min(r_i, p_j - r_j);
        if (moved <= 0) throw std::logic_error("normalization transfer moves no edges");
        record(rule, {{i, s_.items[i] - moved}, {j, s_.items[j] + moved}}, s_.spare);
    }

    bool strip_type_c() {
        const auto c = indices_of(ItemType::C);
        if (c.empty()) return false;
        const std::size_t i = *std::min_element(c.begin(), c.end(), [&](auto a, auto b) {
            return key_of(s_.items, a) < key_of(s_.items, b);
        });
        const ItemDescriptor d = describe(s_.items[i]);
        record("3a", {{i, choose2(d.p)}}, s_.spare + d.r);
        return true;
    }

    bool transfer_between_b() {
        const auto b = indices_of(ItemType::B);
        std::optional<std::pair<Key, Key>> best;
        for (auto i : b)
            for (auto j : b) {
                if (i == j) continue;
                const ItemDescriptor di = describe(s_.items[i]);
                const ItemDescriptor dj = describe(s_.items[j]);
                if (!(di.p > dj.p || (di.p == dj.p && di.r <= dj.r))) continue;
                const std::pair<Key, Key> candidate{key_of(s_.items, i), key_of(s_.items, j)};
                if (!best || candidate < *best) best = candidate;
            }
        if (!best) return false;
        const std::size_t i = std::get<2>(best->first);
        const std::size_t j = std::get<2>(best->second);
        const ItemDescriptor di = describe(s_.items[i]);
        const ItemDescriptor dj = describe(s_.items[j]);
        transfer("3b", i, di.r, j, dj.p, dj.r);
        return true;
    }

    bool transfer_from_complete() {
        const auto b = indices_of(ItemType::B);
        if (b.size() != 1) return false;
        const std::size_t j = b.front();
        const ItemDescriptor dj = describe(s_.items[j]);
        std::optional<Key> best;
        for (auto i : indices_of(ItemType::A)) {
            if (describe(s_.items[i]).p - 1 <= dj.p) continue;
            const Key key = key_of(s_.items, i);
            if (!best || key < *best) best = key;
        }
        if (!best) return false;
        const std::size_t i = std::get<2>(*best);
        const std::int64_t donor_p = describe(s_.items[i]).p - 1;
        transfer("3b-complete", i, donor_p, j, dj.p, dj.r);
        return true;
    }

    bool balance() {
        // Here C is empty and |B| <= 1.
        std::optional<std::size_t> hi, lo;
        std::int64_t hi_value = 0, lo_value = 0;
        for (std::size_t i = 0; i < s_.items.size(); ++i) {
            const std::int64_t v = balance_value(describe(s_.items[i]));
            if (!hi || v > hi_value) hi = i, hi_value = v;
            if (!lo || v < lo_value) lo = i, lo_value = v;
        }
        if (!hi || hi_value <= lo_value + 1) return false;
        const ItemDescriptor dh = describe(s_.items[*hi]);
        const ItemDescriptor dl = describe(s_.items[*lo]);
        if (item_type(dh) == ItemType::A && item_type(dl) == ItemType::A) {
            // K_a -> K_{a-1} and K_b -> K_{b+1}; the rest joins the spares.
            const std::int64_t a = dh.p, b = dl.p;
            record("3c", {{*hi, choose2(a - 1)}, {*lo, choose2(b + 1)}}, s_.spare + a - b - 1);
            return true;
        }
        if (item_type(dl) != ItemType::A) throw std::logic_error("normalization balance expects a complete receiver");
        // B donor, receiver K_b viewed as G_{b,0}.
        transfer("3c", *hi, dh.r, *lo, dl.p, 0);
        return true;
    }

    bool fill_b() {
        if (s_.spare == 0) return false;
        const auto b = indices_of(ItemType::B);
        if (b.empty()) return false;
        const std::size_t k = b.front();
        const ItemDescriptor d = describe(s_.items[k]);
        const std::int64_t added = std::min(s_.spare, d.p - d.r);
        record("3d-fill", {{k, s_.items[k] + added}}, s_.spare - added);
        return true;
    }

    std::optional<std::size_t> smallest_complete() const {
        std::optional<Key> best;
        for (auto i : indices_of(ItemType::A)) {
            const Key key = key_of(s_.items, i);
            if (!best || key < *best) best = key;
        }
        if (!best) return std::nullopt;
        return std::get<2>(*best);
    }

    bool grow_smallest() {
        const auto i = smallest_complete();
        if (!i) return false;
        const std::int64_t order = describe(s_.items[*i]).p;
        if (s_.spare < order) return false;
        record("3d-grow", {{*i, choose2(order + 1)}}, s_.spare - order);
        return true;
    }

    bool place_residual() {
        if (s_.spare == 0) return false;
        const auto i = smallest_complete();
        if (!i) throw std::logic_error("normalization left spares without a complete item");
        record("3e", {{*i, s_.items[*i] + s_.spare}}, 0);
        s_.terminal = true;
        return true;
    }
};

}  // namespace

NormalizationState normalize_state(NormalizationState state) {
    const std::int64_t n = static_cast<std::int64_t>(state.items.size()) + state.conserved_total() + 2;
    const std::int64_t cap = 16 * n * n * n;
    Rewriter rewriter(state);
    std::int64_t steps = 0;
    while (!state.terminal && rewriter.step())
        if (++steps > cap) throw std::logic_error("normalization exceeded its step cap");
    state.terminal = true;
    return state;
}

NormalizationState normalize(const std::vector<Graph>& graphs, std::int64_t k, std::int64_t n_edges) {
    if (static_cast<std::int64_t>(graphs.size()) != k) throw DomainError("list does not have k members");
    NormalizationState state = to_representative_list(graphs);
    if (state.conserved_total() != n_edges) throw DomainError("list edge total differs from N");
    return normalize_state(std::move(state));
}

NormalizationState normalize(const GraphList& list, std::int64_t k, std::int64_t n_edges) {
    return normalize(expand(list), k, n_edges);
}

bool has_terminal_shape(const NormalizationState& state) {
    if (state.spare != 0) return false;
    const std::int64_t k = static_cast<std::int64_t>(state.items.size());
    const std::int64_t n_edges = state.conserved_total();
    if (k == 0) return n_edges == 0;
    ParamTriple t{1, n_edges, 0};
    if (n_edges >= k) t = param_triple(k, n_edges);
    std::int64_t small = 0, large = 0, partial = 0;
    for (const auto& d : state.descriptors()) {
        if (d == ItemDescriptor{t.p, 0}) ++small;
        else if (d == ItemDescriptor{t.p + 1, 0}) ++large;
        else if (t.r > 0 && d == ItemDescriptor{t.p, t.r}) ++partial;
        else return false;
    }
    if (t.r == 0) return large == t.q && small == k - t.q;
    return partial == 1 && large == t.q && small == k - t.q - 1;
}

Json state_to_json(const NormalizationState& state) {
    auto descriptor_json = [](const ItemDescriptor& d) { return Json::array({d.p, d.r}); };
    Json items = Json::array();
    for (auto e : state.items) {
        const ItemDescriptor d = describe(e);
        const ItemType type = item_type(d);
        items.push_back({{"p", d.p},
                         {"r", d.r},
                         {"edges", e},
                         {"type", type == ItemType::A ? "A" : type == ItemType::B ? "B" : "C"},
                         {"mad", rational_to_json(item_mad(e))}});
    }
    Json steps = Json::array();
    for (const auto& s : state.log) {
        Json changes = Json::array();
        for (const auto& c : s.changes)
            changes.push_back({{"index", c.index}, {"before", descriptor_json(c.before)}, {"after", descriptor_json(c.after)}});
        steps.push_back({{"rule", s.rule},
                         {"changes", changes},
                         {"spare_before", s.spare_before},
                         {"spare_after", s.spare_after},
                         {"mad_sum", rational_to_json(s.mad_sum)}});
    }
    return {{"items", items},
            {"spare", state.spare},
            {"mad_sum", rational_to_json(state.mad_sum())},
            {"input_mad_sum", rational_to_json(state.input_mad_sum)},
            {"terminal", state.terminal},
            {"steps", steps}};
}

}  // namespace madgad
