#include "madgad/designs.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <string>

#include "madgad/errors.hpp"

namespace madgad {

const char* source_name(DesignSource source) {
    switch (source) {
        case DesignSource::Bose: return "BOSE";
        case DesignSource::Skolem: return "SKOLEM";
        case DesignSource::Projective: return "PG";
        case DesignSource::Affine: return "AG";
        case DesignSource::Truncated: return "TRUNCATED";
        case DesignSource::DifferenceSet: return "DIFFERENCE_SET";
        case DesignSource::Greedy: return "GREEDY";
        case DesignSource::Input: return "INPUT";
    }
    return "?";
}

namespace {

DesignSource source_from_name(const std::string& name) {
    for (auto s : {DesignSource::Bose, DesignSource::Skolem, DesignSource::Projective, DesignSource::Affine,
                   DesignSource::Truncated, DesignSource::DifferenceSet, DesignSource::Greedy,
                   DesignSource::Input})
        if (name == source_name(s)) return s;
    throw DomainError("unknown design source '" + name + "'");
}

void sort_blocks(BlockDesign& d) {
    for (auto& b : d.blocks) std::sort(b.begin(), b.end());
    std::sort(d.blocks.begin(), d.blocks.end());
}

}  // namespace

void validate_design(const BlockDesign& d) {
    const int v = d.points;
    std::vector<char> covered(static_cast<std::size_t>(v) * v, 0);
    for (const auto& block : d.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (block[i] < 0 || block[i] >= v) throw ValidationError("block point out of range");
            for (std::size_t j = i + 1; j < block.size(); ++j) {
                const Edge e = make_edge(block[i], block[j]);
                if (e.first == e.second) throw ValidationError("repeated point in a block");
                char& c = covered[static_cast<std::size_t>(e.first) * v + e.second];
                if (c)
                    throw ValidationError("pair {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                                          "} covered twice");
                c = 1;
            }
        }
    }
    if (!d.complete) return;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            if (!covered[static_cast<std::size_t>(a) * v + b])
                throw ValidationError("pair {" + std::to_string(a) + "," + std::to_string(b) +
                                      "} not covered");
}

std::vector<std::int64_t> block_size_census(const BlockDesign& d) {
    std::vector<std::int64_t> census;
    for (const auto& b : d.blocks) {
        if (census.size() <= b.size()) census.resize(b.size() + 1, 0);
        ++census[b.size()];
    }
    return census;
}

BlockDesign steiner_triple_system(int n) {
    if (n < 3 || (n % 6 != 1 && n % 6 != 3))
        throw DomainError("Steiner triple systems exist only for n = 1 or 3 (mod 6), n >= 3");
    BlockDesign d;
    d.points = n;
    d.complete = true;
    if (n % 6 == 3) {
        // Points (x, i) -> x + i*v over Z_v x Z_3 with v = 2t+1; the
        // idempotent commutative quasigroup is x o y = (x+y)(t+1) mod v.
        d.source = DesignSource::Bose;
        const int t = (n - 3) / 6;
        const int v = 2 * t + 1;
        const auto op = [&](int x, int y) { return ((x + y) * (t + 1)) % v; };
        const auto pt = [&](int x, int i) { return x + (i % 3) * v; };
        for (int x = 0; x < v; ++x) d.blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
        for (int i = 0; i < 3; ++i)
            for (int x = 0; x < v; ++x)
                for (int y = x + 1; y < v; ++y) d.blocks.push_back({pt(x, i), pt(y, i), pt(op(x, y), i + 1)});
    } else {
        // Points (x, i) -> x + i*2t over Z_2t x Z_3 plus infinity = 6t. The
        // half-idempotent quasigroup renames the sums of Z_2t by 2k -> k,
        // 2k+1 -> t+k.
        d.source = DesignSource::Skolem;
        const int t = (n - 1) / 6;
        const int m = 2 * t;
        const int inf = 6 * t;
        const auto op = [&](int x, int y) {
            const int s = (x + y) % m;
            return s % 2 == 0 ? s / 2 : t + s / 2;
        };
        const auto pt = [&](int x, int i) { return x + (i % 3) * m; };
        for (int x = 0; x < t; ++x) d.blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
        for (int x = 0; x < t; ++x)
            for (int i = 0; i < 3; ++i) d.blocks.push_back({inf, pt(x + t, i), pt(x, i + 1)});
        for (int i = 0; i < 3; ++i)
            for (int x = 0; x < m; ++x)
                for (int y = x + 1; y < m; ++y) d.blocks.push_back({pt(x, i), pt(y, i), pt(op(x, y), i + 1)});
    }
    sort_blocks(d);
    validate_design(d);
    return d;
}

std::int64_t max_triangle_packing_size(int n) {
    if (n < 3) return 0;
    const std::int64_t pairs = choose2(n);
    switch (n % 6) {
        case 1:
        case 3: return pairs / 3;
        case 0:
        case 2: return (pairs - n / 2) / 3;
        case 4: return (pairs - (n + 2) / 2) / 3;
        default: return (pairs - 4) / 3;
    }
}

bool leave_matches_table(int n, const Graph& leave) {
    if (leave.order() != n) return false;
    std::vector<int> degrees(n);
    for (int v = 0; v < n; ++v) degrees[v] = leave.degree(v);
    const auto count = [&](int d) { return std::count(degrees.begin(), degrees.end(), d); };
    if (n < 3) return leave.size() == choose2(n);
    switch (n % 6) {
        case 1:
        case 3: return leave.size() == 0;
        case 0:
        case 2: return count(1) == n;
        case 4: return count(3) == 1 && count(1) == n - 1;
        default: {
            if (count(2) != 4 || count(0) != n - 4 || leave.size() != 4) return false;
            return is_connected(induced(leave, non_isolated(leave)));
        }
    }
}

namespace {

Graph leave_graph(const BlockDesign& d) {
    std::vector<Edge> covered;
    for (const auto& b : d.blocks)
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j) covered.push_back(make_edge(b[i], b[j]));
    return complement(Graph(d.points, std::move(covered)));
}

// Stinson-style hill-climbing towards `target` edge-disjoint triangles.
BlockDesign hill_climb_packing(int n, std::int64_t target, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::array<int, 3>> blocks;
    std::vector<int> owner(static_cast<std::size_t>(n) * n, -1);
    std::vector<std::vector<int>> free_nbrs(n);  // uncovered pairs, unordered
    std::vector<int> free_slot(static_cast<std::size_t>(n) * n, -1);
    const auto idx = [n](int a, int b) { return static_cast<std::size_t>(a) * n + b; };
    const auto add_free = [&](int a, int b) {
        free_slot[idx(a, b)] = static_cast<int>(free_nbrs[a].size());
        free_nbrs[a].push_back(b);
    };
    const auto drop_free = [&](int a, int b) {
        const int slot = free_slot[idx(a, b)];
        const int last = free_nbrs[a].back();
        free_nbrs[a][slot] = last;
        free_slot[idx(a, last)] = slot;
        free_nbrs[a].pop_back();
        free_slot[idx(a, b)] = -1;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) add_free(a, b);
    std::int64_t live = 0;
    const auto set_pair = [&](int a, int b, int block) {
        owner[idx(a, b)] = owner[idx(b, a)] = block;
        if (block >= 0) {
            drop_free(a, b);
            drop_free(b, a);
        } else {
            add_free(a, b);
            add_free(b, a);
        }
    };
    std::vector<int> holes;
    const auto insert = [&](int x, int y, int z) {
        int id;
        if (!holes.empty()) {
            id = holes.back();
            holes.pop_back();
            blocks[id] = {x, y, z};
        } else {
            id = static_cast<int>(blocks.size());
            blocks.push_back({x, y, z});
        }
        set_pair(x, y, id);
        set_pair(x, z, id);
        set_pair(y, z, id);
        ++live;
    };
    const auto erase = [&](int id) {
        const auto [x, y, z] = blocks[id];
        set_pair(x, y, -1);
        set_pair(x, z, -1);
        set_pair(y, z, -1);
        blocks[id] = {-1, -1, -1};
        holes.push_back(id);
        --live;
    };

    const std::int64_t step_cap = 2000000LL + 2000LL * n * n;
    std::uniform_int_distribution<int> pick_point(0, n - 1);
    for (std::int64_t step = 0; live < target; ++step) {
        if (step > step_cap) throw std::runtime_error("triangle packing search did not converge");
        const int x = pick_point(rng);
        if (free_nbrs[x].size() < 2) continue;
        std::uniform_int_distribution<std::size_t> pick(0, free_nbrs[x].size() - 1);
        const int y = free_nbrs[x][pick(rng)];
        int z = y;
        while (z == y) z = free_nbrs[x][pick(rng)];
        const int existing = owner[idx(y, z)];
        if (existing >= 0) erase(existing);
        insert(x, y, z);
    }
    BlockDesign d;
    d.points = n;
    d.source = DesignSource::Greedy;
    for (const auto& b : blocks)
        if (b[0] >= 0) d.blocks.push_back({b[0], b[1], b[2]});
    sort_blocks(d);
    return d;
}

}  // namespace

PackingResult max_partial_triple_system(int n, std::uint64_t seed) {
    if (n < 3) throw DomainError("triangle packings need n >= 3");
    BlockDesign d;
    switch (n % 6) {
        case 1:
        case 3: d = steiner_triple_system(n); break;
        case 0:
        case 2: {
            // Delete the last point of STS(n+1); its blocks leave a perfect matching.
            const BlockDesign full = steiner_triple_system(n + 1);
            d.points = n;
            d.source = full.source;
            for (const auto& b : full.blocks)
                if (b.back() != n) d.blocks.push_back(b);
            break;
        }
        default: d = hill_climb_packing(n, max_triangle_packing_size(n), seed); break;
    }
    d.complete = false;
    validate_design(d);
    if (static_cast<std::int64_t>(d.blocks.size()) != max_triangle_packing_size(n))
        throw std::logic_error("triangle packing has the wrong size");
    Graph leave = leave_graph(d);
    if (!leave_matches_table(n, leave)) throw std::logic_error("triangle packing leave has an unexpected shape");
    return {std::move(d), std::move(leave)};
}

namespace {

// GF(q) for q = p^e, elements encoded as base-p digit vectors of a
// polynomial reduced modulo a fixed irreducible of degree e.
class GaloisField {
public:
    explicit GaloisField(int q) : q_(q) {
        static const std::map<int, std::pair<int, std::vector<int>>> kIrreducible = {
            // q -> (p, coefficients of the monic irreducible, low degree first)
            {4, {2, {1, 1, 1}}},     // x^2 + x + 1
            {8, {2, {1, 1, 0, 1}}},  // x^3 + x + 1
            {9, {3, {1, 0, 1}}},     // x^2 + 1
        };
        const auto it = kIrreducible.find(q);
        if (it != kIrreducible.end()) {
            p_ = it->second.first;
            modulus_ = it->second.second;
        } else {
            p_ = q;
            modulus_ = {0, 1};
        }
        add_.assign(q * q, 0);
        mul_.assign(q * q, 0);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                add_[a * q + b] = encode(add_poly(decode(a), decode(b)));
                mul_[a * q + b] = encode(mul_poly(decode(a), decode(b)));
            }
    }

    int size() const { return q_; }
    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }

private:
    int degree() const { return static_cast<int>(modulus_.size()) - 1; }

    std::vector<int> decode(int a) const {
        std::vector<int> out(degree(), 0);
        for (int i = 0; i < degree(); ++i, a /= p_) out[i] = a % p_;
        return out;
    }
    int encode(const std::vector<int>& poly) const {
        int a = 0;
        for (int i = degree() - 1; i >= 0; --i) a = a * p_ + poly[i];
        return a;
    }
    std::vector<int> add_poly(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> out(degree());
        for (int i = 0; i < degree(); ++i) out[i] = (a[i] + b[i]) % p_;
        return out;
    }
    std::vector<int> mul_poly(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> prod(2 * degree(), 0);
        for (int i = 0; i < degree(); ++i)
            for (int j = 0; j < degree(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
        // x^e = -(lower terms of the modulus).
        for (int top = 2 * degree() - 1; top >= degree(); --top) {
            const int c = prod[top];
            if (c == 0) continue;
            prod[top] = 0;
            for (int i = 0; i < degree(); ++i)
                prod[top - degree() + i] = ((prod[top - degree() + i] - c * modulus_[i]) % p_ + p_) % p_;
        }
        prod.resize(degree());
        return prod;
    }

    int q_;
    int p_ = 0;
    std::vector<int> modulus_;
    std::vector<int> add_;
    std::vector<int> mul_;
};

void require_plane_order(int q) {
    if (!plane_order_supported(q))
        throw DomainError("plane order " + std::to_string(q) +
                          " unsupported: use a prime in {2,3,5,7,11,13} or q in {4,8,9}");
}

}  // namespace

bool plane_order_supported(int q) {
    switch (q) {
        case 2: case 3: case 4: case 5: case 7: case 8: case 9: case 11: case 13: return true;
        default: return false;
    }
}

BlockDesign projective_plane(int q) {
    require_plane_order(q);
    const GaloisField f(q);
    // Normalized homogeneous triples: (1,a,b), (0,1,b), (0,0,1).
    std::vector<std::array<int, 3>> vecs;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) vecs.push_back({1, a, b});
    for (int b = 0; b < q; ++b) vecs.push_back({0, 1, b});
    vecs.push_back({0, 0, 1});
    BlockDesign d;
    d.points = static_cast<int>(vecs.size());
    d.source = DesignSource::Projective;
    d.complete = true;
    d.plane_order = q;
    for (const auto& line : vecs) {
        VertexSet block;
        for (int i = 0; i < d.points; ++i) {
            const auto& pt = vecs[i];
            const int dot = f.add(f.add(f.mul(line[0], pt[0]), f.mul(line[1], pt[1])), f.mul(line[2], pt[2]));
            if (dot == 0) block.push_back(i);
        }
        d.blocks.push_back(std::move(block));
    }
    sort_blocks(d);
    validate_design(d);
    return d;
}

BlockDesign affine_plane(int q) {
    require_plane_order(q);
    const GaloisField f(q);
    BlockDesign d;
    d.points = q * q;
    d.source = DesignSource::Affine;
    d.complete = true;
    d.plane_order = q;
    const auto pt = [q](int x, int y) { return x * q + y; };
    for (int m = 0; m < q; ++m)
        for (int b = 0; b < q; ++b) {
            VertexSet block;
            for (int x = 0; x < q; ++x) block.push_back(pt(x, f.add(f.mul(m, x), b)));
            d.blocks.push_back(std::move(block));
        }
    for (int c = 0; c < q; ++c) {
        VertexSet block;
        for (int y = 0; y < q; ++y) block.push_back(pt(c, y));
        d.blocks.push_back(std::move(block));
    }
    sort_blocks(d);
    validate_design(d);
    return d;
}

BlockDesign truncate_plane(const BlockDesign& d, TruncateMode mode) {
    if (d.source != DesignSource::Projective && d.source != DesignSource::Affine &&
        d.source != DesignSource::DifferenceSet)
        throw DomainError("truncate_plane needs a projective or affine plane");
    if (mode == TruncateMode::DeleteLine && d.source != DesignSource::Affine)
        throw DomainError("line deletion is defined for affine planes only");
    std::vector<char> removed(d.points, 0);
    std::vector<VertexSet> kept;
    if (mode == TruncateMode::DeletePoint) {
        removed[0] = 1;
        kept = d.blocks;
    } else {
        for (int v : d.blocks.front()) removed[v] = 1;
        kept.assign(d.blocks.begin() + 1, d.blocks.end());
    }
    std::vector<int> relabel(d.points, -1);
    int next = 0;
    for (int v = 0; v < d.points; ++v)
        if (!removed[v]) relabel[v] = next++;
    BlockDesign out;
    out.points = next;
    out.source = DesignSource::Truncated;
    out.complete = true;
    out.plane_order = d.plane_order;
    for (const auto& block : kept) {
        VertexSet b;
        for (int v : block)
            if (!removed[v]) b.push_back(relabel[v]);
        if (b.size() >= 2) out.blocks.push_back(std::move(b));
    }
    sort_blocks(out);
    validate_design(out);
    return out;
}

bool is_perfect_difference_set(const std::vector<int>& d, int v) {
    std::vector<int> hits(v, 0);
    for (int a : d)
        for (int b : d)
            if (a != b) ++hits[((a - b) % v + v) % v];
    if (hits[0] != 0) return false;
    for (int r = 1; r < v; ++r)
        if (hits[r] != 1) return false;
    return true;
}

CyclicPlane cyclic_plane_difference_set(int q) {
    static const std::map<int, std::vector<int>> kSets = {
        {2, {1, 2, 4}},
        {3, {0, 1, 3, 9}},
        {4, {0, 1, 4, 14, 16}},
        {5, {1, 5, 11, 24, 25, 27}},
        {7, {0, 1, 3, 13, 32, 36, 43, 52}},
        {8, {1, 2, 4, 8, 16, 32, 37, 55, 64}},
    };
    const auto it = kSets.find(q);
    if (it == kSets.end())
        throw DomainError("no stored difference set for q = " + std::to_string(q) + "; supported: 2,3,4,5,7,8");
    const int v = q * q + q + 1;
    // Translate so that 0 is in D, hence i lies on line D + i.
    std::vector<int> ds;
    for (int a : it->second) ds.push_back(((a - it->second.front()) % v + v) % v);
    std::sort(ds.begin(), ds.end());
    if (!is_perfect_difference_set(ds, v)) throw std::logic_error("stored difference set is not perfect");
    CyclicPlane out;
    out.difference_set = ds;
    out.design.points = v;
    out.design.source = DesignSource::DifferenceSet;
    out.design.complete = true;
    out.design.plane_order = q;
    for (int i = 0; i < v; ++i) {
        VertexSet block;
        for (int a : ds) block.push_back((a + i) % v);
        std::sort(block.begin(), block.end());
        out.design.blocks.push_back(std::move(block));
    }
    validate_design(out.design);
    return out;
}

Json design_to_json(const BlockDesign& d) {
    return {{"points", d.points},
            {"source", source_name(d.source)},
            {"complete", d.complete},
            {"plane_order", d.plane_order},
            {"blocks", d.blocks}};
}

BlockDesign design_from_json(const Json& j) {
    try {
        BlockDesign d;
        d.points = j.at("points").get<int>();
        d.source = j.contains("source") ? source_from_name(j.at("source").get<std::string>()) : DesignSource::Input;
        d.complete = j.value("complete", false);
        d.plane_order = j.value("plane_order", 0);
        d.blocks = j.at("blocks").get<std::vector<VertexSet>>();
        for (auto& b : d.blocks) std::sort(b.begin(), b.end());
        validate_design(d);
        return d;
    } catch (const Json::exception& ex) {
        throw DomainError(std::string("malformed design JSON: ") + ex.what());
    }
}

}  // namespace madgad
