#include "grconv/distance.hpp"

#include <cstdlib>
#include <functional>
#include <queue>
#include <unordered_map>

namespace grconv {

long long default_node_budget() {
    if (const char* env = std::getenv("GRCONV_NODE_BUDGET")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 10'000'000;
}

namespace {

// Symbol-indexed view of an encoder: per-exponent k x n matrices with
// entries replaced by field enumeration indices, plus add/mul tables.
struct FastEncoder {
    long long q = 0;
    int k = 0, n = 0, memory = 0;
    long long ucount = 0;            // q^k input blocks
    std::vector<uint8_t> add, mul;   // q x q
    std::vector<std::vector<uint64_t>> block_out;  // [e][u] packed n-vector, 4 bits/symbol
    std::vector<int> out0_weight;    // weight of block_out[0][u]

    // weight table W[carry_index * ucount + u] when q^n is small enough
    bool have_wtable = false;
    std::vector<uint8_t> wtable;

    int weight_of_packed(uint64_t v) const {
        int w = 0;
        for (int i = 0; i < n; ++i)
            if ((v >> (4 * i)) & 0xF) ++w;
        return w;
    }
    uint64_t add_packed(uint64_t a, uint64_t b) const {
        uint64_t r = 0;
        for (int i = 0; i < n; ++i) {
            uint8_t s = add[((a >> (4 * i)) & 0xF) * q + ((b >> (4 * i)) & 0xF)];
            r |= (uint64_t)s << (4 * i);
        }
        return r;
    }
    long long carry_index(uint64_t packed) const {
        long long idx = 0;
        for (int i = n - 1; i >= 0; --i) idx = idx * q + ((packed >> (4 * i)) & 0xF);
        return idx;
    }
    int edge_weight(long long cidx, uint64_t carry, long long u) const {
        if (have_wtable) return wtable[cidx * ucount + u];
        return weight_of_packed(add_packed(block_out[0][u], carry));
    }
};

FastEncoder build_encoder(const ConvCode& code) {
    if (!code.field->is_finite())
        throw std::invalid_argument("distance search requires a finite field");
    FastEncoder fe;
    fe.q = code.field->order();
    if (fe.q > 16) throw std::invalid_argument("distance search supports field order <= 16");
    fe.k = code.k;
    fe.n = code.n;
    if (fe.n > 16) throw std::invalid_argument("distance search supports length <= 16");

    PolyMatrix G = code.G;
    if (!G.is_zero() && G.min_exp() < 0) G = G.shifted(-G.min_exp());
    fe.memory = G.is_zero() ? 0 : G.max_exp();

    const auto& f = code.field;
    fe.add.resize(fe.q * fe.q);
    fe.mul.resize(fe.q * fe.q);
    for (long long a = 0; a < fe.q; ++a) {
        FieldElement ea = f->element_at(a);
        for (long long b = 0; b < fe.q; ++b) {
            FieldElement eb = f->element_at(b);
            fe.add[a * fe.q + b] = (uint8_t)f->index_of(ea + eb);
            fe.mul[a * fe.q + b] = (uint8_t)f->index_of(ea * eb);
        }
    }

    fe.ucount = 1;
    for (int i = 0; i < fe.k; ++i) {
        fe.ucount *= fe.q;
        if (fe.ucount > (1 << 20)) throw search_budget_error("input block space too large");
    }

    std::vector<std::vector<uint8_t>> gm(fe.memory + 1, std::vector<uint8_t>(fe.k * fe.n, 0));
    for (const auto& [e, m] : G.terms())
        for (int i = 0; i < fe.k; ++i)
            for (int j = 0; j < fe.n; ++j) gm[e][i * fe.n + j] = (uint8_t)f->index_of(m.at(i, j));

    fe.block_out.assign(fe.memory + 1, std::vector<uint64_t>(fe.ucount, 0));
    std::vector<uint8_t> acc(fe.n);
    for (int e = 0; e <= fe.memory; ++e) {
        for (long long u = 0; u < fe.ucount; ++u) {
            long long uu = u;
            std::fill(acc.begin(), acc.end(), 0);
            for (int i = 0; i < fe.k; ++i) {
                uint8_t d = (uint8_t)(uu % fe.q);
                uu /= fe.q;
                if (d == 0) continue;
                for (int j = 0; j < fe.n; ++j) {
                    uint8_t prod = fe.mul[d * fe.q + gm[e][i * fe.n + j]];
                    acc[j] = fe.add[acc[j] * fe.q + prod];
                }
            }
            uint64_t out = 0;
            for (int j = 0; j < fe.n; ++j) out |= (uint64_t)acc[j] << (4 * j);
            fe.block_out[e][u] = out;
        }
    }
    fe.out0_weight.resize(fe.ucount);
    for (long long u = 0; u < fe.ucount; ++u) fe.out0_weight[u] = fe.weight_of_packed(fe.block_out[0][u]);

    long long carry_space = 1;
    bool small = true;
    for (int i = 0; i < fe.n; ++i) {
        carry_space *= fe.q;
        if (carry_space > (1 << 21)) {
            small = false;
            break;
        }
    }
    if (small && carry_space * fe.ucount <= (1LL << 26)) {
        fe.have_wtable = true;
        fe.wtable.assign(carry_space * fe.ucount, 0);
        std::vector<uint8_t> digits(fe.n, 0);
        for (long long c = 0; c < carry_space; ++c) {
            uint64_t packed = 0;
            for (int j = 0; j < fe.n; ++j) packed |= (uint64_t)digits[j] << (4 * j);
            for (long long u = 0; u < fe.ucount; ++u)
                fe.wtable[c * fe.ucount + u] =
                    (uint8_t)fe.weight_of_packed(fe.add_packed(fe.block_out[0][u], packed));
            for (int j = 0; j < fe.n; ++j) {
                if (++digits[j] < fe.q) break;
                digits[j] = 0;
            }
        }
    }
    return fe;
}

struct DfsResult {
    int best;                        // init_best if nothing better found
    std::vector<long long> blocks;   // nonempty iff improved
    long long nodes = 0;
    bool budget_hit = false;
};

// Exhaustive weight-pruned enumeration of inputs with degree <= D and a
// nonzero leading block; returns the minimum total weight below init_best.
DfsResult dfs_min_weight(const FastEncoder& fe, int D, int init_best, long long node_budget) {
    const int M = fe.memory;
    DfsResult res;
    res.best = init_best;
    std::vector<long long> blocks(D + 1, 0);

    auto flush_weight = [&](int partial) {
        int w = partial;
        for (int step = D + 1; step <= D + M; ++step) {
            uint64_t carry = 0;
            for (int e = 1; e <= M; ++e) {
                int t = step - e;
                if (t < 0 || t > D) continue;
                if (blocks[t]) carry = fe.add_packed(carry, fe.block_out[e][blocks[t]]);
            }
            w += fe.weight_of_packed(carry);
            if (w >= res.best) return w;
        }
        return w;
    };

    std::function<void(int, int)> walk = [&](int t, int partial) {
        if (res.budget_hit) return;
        if (++res.nodes > node_budget) {
            res.budget_hit = true;
            return;
        }
        if (t > D) {
            int total = flush_weight(partial);
            if (total < res.best) {
                res.best = total;
                res.blocks = blocks;
            }
            return;
        }
        long long from = t == 0 ? 1 : 0;
        for (long long u = from; u < fe.ucount; ++u) {
            blocks[t] = u;
            uint64_t out = fe.block_out[0][u];
            for (int e = 1; e <= M; ++e) {
                int tp = t - e;
                if (tp < 0) break;
                if (blocks[tp]) out = fe.add_packed(out, fe.block_out[e][blocks[tp]]);
            }
            int w = partial + fe.weight_of_packed(out);
            if (w < res.best) walk(t + 1, w);
        }
        blocks[t] = 0;
    };
    walk(0, 0);
    return res;
}

std::vector<ScalarPoly> input_blocks_to_polys(const ConvCode& code, const FastEncoder& fe,
                                              const std::vector<long long>& blocks) {
    std::vector<ScalarPoly> u(code.k, ScalarPoly(code.field));
    for (size_t t = 0; t < blocks.size(); ++t) {
        long long b = blocks[t];
        for (int i = 0; i < code.k; ++i) {
            uint8_t d = (uint8_t)(b % fe.q);
            b /= fe.q;
            if (d != 0) u[i].set_coeff((int)t, code.field->element_at(d));
        }
    }
    return u;
}

DistanceReport finish_report(const ConvCode& code, const FastEncoder& fe,
                             const std::vector<long long>& blocks, int value, DistanceMode mode,
                             long long explored, std::optional<int> cap_used) {
    DistanceReport rep;
    rep.value = value;
    rep.mode = mode;
    rep.explored_states = explored;
    rep.cap_used = cap_used;
    rep.witness_input = input_blocks_to_polys(code, fe, blocks);
    rep.witness_codeword = encode(code, rep.witness_input);
    if (codeword_weight(rep.witness_codeword) != value)
        throw std::logic_error("witness weight does not match reported distance");
    return rep;
}

}  // namespace

DistanceReport free_distance_exact(const ConvCode& code, SearchOptions opts) {
    if (opts.weight_cap < 1) throw std::invalid_argument("weight cap must be >= 1");
    auto noncat = is_noncatastrophic(code);
    if (!noncat.yes)
        throw catastrophic_encoder_error("exact free distance requires a noncatastrophic encoder (" +
                                         noncat.detail + ")");
    long long budget = opts.node_budget > 0 ? opts.node_budget : default_node_budget();
    FastEncoder fe = build_encoder(code);
    const int M = fe.memory;

    // upper bound: best single-block codeword, then a short enumeration probe
    int ub = opts.weight_cap + 1;
    std::vector<long long> ub_blocks = {0};
    for (long long u = 1; u < fe.ucount; ++u) {
        int w = 0;
        for (int e = 0; e <= M; ++e) w += fe.weight_of_packed(fe.block_out[e][u]);
        if (w < ub) {
            ub = w;
            ub_blocks = {u};
        }
    }

    if (M == 0) {
        if (ub > opts.weight_cap) throw no_codeword_under_cap("no codeword of weight <= cap");
        return finish_report(code, fe, ub_blocks, ub, DistanceMode::exact, fe.ucount - 1,
                             std::nullopt);
    }

    DfsResult probe = dfs_min_weight(fe, M + 2, ub, std::min<long long>(budget / 4, 2'000'000));
    if (probe.best < ub && !probe.blocks.empty()) {
        ub = probe.best;
        ub_blocks = probe.blocks;
    }

    int bound = std::min(ub, opts.weight_cap + 1);

    int bbits = 1;
    while ((1LL << bbits) < fe.ucount) ++bbits;
    if (bbits * M > 62) throw search_budget_error("state space too wide for the exact search");
    const uint64_t block_mask = (1ULL << bbits) - 1;
    const uint64_t state_mask = bbits * M >= 64 ? ~0ULL : (1ULL << (bbits * M)) - 1;

    using QE = std::pair<int, uint64_t>;
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
    std::unordered_map<uint64_t, int> dist;
    std::unordered_map<uint64_t, std::pair<uint64_t, uint32_t>> parent;

    for (long long u = 1; u < fe.ucount; ++u) {
        int w = fe.out0_weight[u];
        if (w >= bound) continue;
        uint64_t s = (uint64_t)u;
        auto it = dist.find(s);
        if (it == dist.end() || w < it->second) {
            dist[s] = w;
            parent[s] = {~0ULL, (uint32_t)u};
            pq.push({w, s});
        }
    }

    long long pops = 0;
    long long pushes = (long long)pq.size();
    auto out_of_budget = [&] { return pops > budget || pushes > 4 * budget || (long long)dist.size() > budget; };

    while (!pq.empty()) {
        auto [w, s] = pq.top();
        pq.pop();
        auto dit = dist.find(s);
        if (dit == dist.end() || dit->second != w) continue;  // stale entry
        if (s == 0) {
            std::vector<long long> rev_blocks;
            uint64_t cur = s;
            while (true) {
                auto pit = parent.find(cur);
                if (pit == parent.end()) break;
                rev_blocks.push_back(pit->second.second);
                if (pit->second.first == ~0ULL) break;
                cur = pit->second.first;
            }
            std::vector<long long> blocks(rev_blocks.rbegin(), rev_blocks.rend());
            return finish_report(code, fe, blocks, w, DistanceMode::exact, pops, std::nullopt);
        }
        if (out_of_budget()) {
            if (ub > opts.weight_cap)
                throw no_codeword_under_cap("budget exhausted with no codeword under the cap");
            return finish_report(code, fe, ub_blocks, ub, DistanceMode::upper_bound, pops,
                                 opts.weight_cap);
        }
        ++pops;
        uint64_t carry = 0;
        for (int e = 1; e <= M; ++e) {
            uint64_t block = (s >> ((e - 1) * bbits)) & block_mask;
            if (block) carry = fe.add_packed(carry, fe.block_out[e][block]);
        }
        long long cidx = fe.have_wtable ? fe.carry_index(carry) : 0;
        for (long long u = 0; u < fe.ucount; ++u) {
            int nw = w + fe.edge_weight(cidx, carry, u);
            if (nw >= bound) continue;
            uint64_t ns = ((s << bbits) | (uint64_t)u) & state_mask;
            auto it = dist.find(ns);
            if (it == dist.end() || nw < it->second) {
                dist[ns] = nw;
                parent[ns] = {s, (uint32_t)u};
                pq.push({nw, ns});
                ++pushes;
            }
        }
    }

    // frontier exhausted below `bound`: every other codeword weighs >= ub
    if (ub > opts.weight_cap) throw no_codeword_under_cap("no codeword of weight <= cap");
    return finish_report(code, fe, ub_blocks, ub, DistanceMode::exact, pops, std::nullopt);
}

DistanceReport free_distance_bounded(const ConvCode& code, int max_input_degree,
                                     SearchOptions opts) {
    if (max_input_degree < 0) throw std::invalid_argument("max input degree must be >= 0");
    long long budget = 20 * (opts.node_budget > 0 ? opts.node_budget : default_node_budget());
    FastEncoder fe = build_encoder(code);
    DfsResult res = dfs_min_weight(fe, max_input_degree, opts.weight_cap + 1, budget);
    if (res.budget_hit) throw search_budget_error("enumeration budget exceeded; lower the degree");
    if (res.best > opts.weight_cap) throw no_codeword_under_cap("no codeword of weight <= cap");
    res.blocks.resize(max_input_degree + 1, 0);
    return finish_report(code, fe, res.blocks, res.best, DistanceMode::upper_bound, res.nodes,
                         opts.weight_cap);
}

int block_min_distance(const Mat& m) {
    const auto& f = m.field();
    if (!f->is_finite()) throw std::invalid_argument("block distance requires a finite field");
    long long q = f->order();
    int k = m.rows(), n = m.cols();
    long long total = 1;
    for (int i = 0; i < k; ++i) {
        total *= q;
        if (total > (1LL << 22)) throw search_budget_error("message space too large to enumerate");
    }
    std::vector<uint8_t> sym(k * n);
    std::vector<uint8_t> add(q * q), mul(q * q);
    for (long long a = 0; a < q; ++a)
        for (long long b = 0; b < q; ++b) {
            add[a * q + b] = (uint8_t)f->index_of(f->element_at(a) + f->element_at(b));
            mul[a * q + b] = (uint8_t)f->index_of(f->element_at(a) * f->element_at(b));
        }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) sym[i * n + j] = (uint8_t)f->index_of(m.at(i, j));
    int best = n + 1;
    std::vector<uint8_t> acc(n);
    for (long long msg = 1; msg < total; ++msg) {
        std::fill(acc.begin(), acc.end(), 0);
        long long mm = msg;
        for (int i = 0; i < k; ++i) {
            uint8_t d = (uint8_t)(mm % q);
            mm /= q;
            if (!d) continue;
            for (int j = 0; j < n; ++j) acc[j] = add[acc[j] * q + mul[d * q + sym[i * n + j]]];
        }
        int w = 0;
        for (int j = 0; j < n; ++j) w += acc[j] != 0;
        if (w && w < best) best = w;
    }
    return best == n + 1 ? 0 : best;
}

int block_dual_distance(const Mat& m) {
    auto basis = m.null_space();
    if (basis.empty()) return 0;  // dual code is trivial
    Mat dual_gen(m.field(), (int)basis.size(), m.cols());
    for (size_t i = 0; i < basis.size(); ++i)
        for (int j = 0; j < m.cols(); ++j) dual_gen.at((int)i, j) = basis[i][j];
    return block_min_distance(dual_gen);
}

ConvCode specialize_code(const ConvCode& code, long long p) {
    FieldPtr gfp = Field::finite(p);
    auto map_matrix = [&](const Mat& m) {
        Mat out(gfp, m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) out.at(i, j) = specialize_cyclotomic(m.at(i, j), gfp);
        return out;
    };
    auto map_poly = [&](const PolyMatrix& pm) {
        PolyMatrix out(gfp, pm.rows(), pm.cols());
        for (const auto& [e, m] : pm.terms()) out.set_coeff(e, map_matrix(m));
        return out;
    };
    ConvCode out;
    out.n = code.n;
    out.k = code.k;
    out.field = gfp;
    out.G = map_poly(code.G);
    out.H = map_poly(code.H);
    out.h_shift = code.h_shift;
    out.H_poly = map_poly(code.H_poly);
    if (code.full_f) out.full_f = map_poly(*code.full_f);
    if (code.full_g) out.full_g = map_poly(*code.full_g);
    out.rows = code.rows;
    out.t = code.t;
    out.provenance = code.provenance + " | specialized at p=" + std::to_string(p);
    return out;
}

DistanceReport char0_distance_via_specialization(const ConvCode& code, long long p,
                                                 SearchOptions opts) {
    if (code.field->is_finite())
        throw specialization_error("code is already over a finite field");
    ConvCode spec = specialize_code(code, p);
    return free_distance_exact(spec, opts);
}

LiftedWitness lift_specialized_witness(const ConvCode& char0_code, const DistanceReport& report) {
    LiftedWitness out;
    const FieldPtr& f0 = char0_code.field;
    for (const auto& u : report.witness_input) {
        ScalarPoly lifted(f0);
        for (const auto& [e, c] : u.terms()) lifted.set_coeff(e, f0->from_integer(c.as_integer()));
        out.input.push_back(std::move(lifted));
    }
    out.codeword = encode(char0_code, out.input);
    out.weight = codeword_weight(out.codeword);
    return out;
}

}  // namespace grconv
