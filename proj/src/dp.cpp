#include "towns/dp.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <set>
#include <thread>
#include <unordered_map>

#include "towns/oracle.hpp"

namespace towns {

int default_width_limit(int n_target) {
    return static_cast<int>(2.0 * std::sqrt(static_cast<double>(n_target))) + 5;
}

namespace dp_detail {

std::int64_t transition_increment(Objective objective, int w, int cc, int c,
                                  const Interface& it) {
    std::int64_t cl = c;
    std::int64_t town = (it.d_up_left + it.d_down_left) * cl +
                        (it.n_up + it.n_down) * (cl * (cl - 1) / 2) +
                        (cl + 1) * cl * (cl - 1) / 6 * (2 * w + 1) +
                        cl * cl * (std::int64_t(w) * (w + 1) / 2);
    if (objective == Objective::town) return town;
    // city scale is 6x; the extra terms square the new column and the rows
    // that just became final (length w, one per unit of height lost)
    return town * 6 + cl * cl + std::int64_t(cc - c) * w * w;
}

ShrinkSide shrink_side(int c_from) {
    return (c_from % 2 != 0) ? ShrinkSide::top : ShrinkSide::bottom;
}

void shrink_column(Interface& it, int w, int c_from) {
    if (c_from <= 0) throw std::invalid_argument("shrink_column: c_from must be positive");
    std::int64_t toward_left = std::int64_t(w) * (w + 1) / 2;
    std::int64_t toward_right = std::int64_t(w) * (w - 1) / 2;
    if (shrink_side(c_from) == ShrinkSide::top) {
        it.n_up += w;
        it.d_up_left += it.n_up + toward_left;
        it.d_up_right += it.n_up + toward_right;
    } else {
        it.n_down += w;
        it.d_down_left += it.n_down + toward_left;
        it.d_down_right += it.n_down + toward_right;
    }
}

}  // namespace dp_detail

namespace {

using dp_detail::Interface;

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

struct DpState {
    std::uint16_t d_up_left = 0;
    std::uint16_t d_down_left = 0;
    std::uint16_t d_up_right = 0;
    std::uint16_t d_down_right = 0;
    std::uint16_t n_up = 0;
    std::uint16_t n_down = 0;
    friend bool operator==(const DpState&, const DpState&) = default;
};

struct DpStateHash {
    std::size_t operator()(const DpState& s) const {
        std::uint64_t a = (std::uint64_t(s.d_up_left) << 48) |
                          (std::uint64_t(s.d_down_left) << 32) |
                          (std::uint64_t(s.d_up_right) << 16) | s.d_down_right;
        std::uint64_t x = a ^ ((std::uint64_t(s.n_up) << 16 | s.n_down) * 0x9E3779B97F4A7C15ull);
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ull;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBull;
        x ^= x >> 31;
        return static_cast<std::size_t>(x);
    }
};

using LayerMap = std::unordered_map<DpState, std::int64_t, DpStateHash>;

std::uint16_t narrow16(std::int64_t v) {
    if (v < 0 || v >= 65536) throw std::logic_error("dp: interface field out of range");
    return static_cast<std::uint16_t>(v);
}

// The successor state is stored mirrored about the vertical axis, so the next
// column is again added on the left; left and right corner sums swap roles.
DpState pack_exchanged(const Interface& it) {
    DpState s;
    s.d_up_left = narrow16(it.d_up_right);
    s.d_down_left = narrow16(it.d_down_right);
    s.d_up_right = narrow16(it.d_up_left);
    s.d_down_right = narrow16(it.d_down_left);
    s.n_up = narrow16(it.n_up);
    s.n_down = narrow16(it.n_down);
    return s;
}

Interface unpack(const DpState& s) {
    return Interface{s.d_up_left, s.d_down_left, s.d_up_right,
                     s.d_down_right, s.n_up, s.n_down};
}

struct EdgeRecord {
    std::uint16_t src_w = 0, src_cc = 0;
    DpState src;
    std::int64_t src_cost = 0;
    std::uint16_t dst_w = 0, dst_c = 0;
    DpState dst;
    std::int64_t dst_cost = 0;
};

constexpr std::size_t kEdgeRecordBytes = 48;

void put16(std::vector<unsigned char>& b, std::uint16_t v) {
    b.push_back(static_cast<unsigned char>(v & 0xff));
    b.push_back(static_cast<unsigned char>(v >> 8));
}

void put64(std::vector<unsigned char>& b, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) b.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xff));
}

void put_state(std::vector<unsigned char>& b, const DpState& s) {
    put16(b, s.d_up_left);
    put16(b, s.d_down_left);
    put16(b, s.d_up_right);
    put16(b, s.d_down_right);
    put16(b, s.n_up);
    put16(b, s.n_down);
}

std::uint16_t get16(const unsigned char* p) { return std::uint16_t(p[0] | (p[1] << 8)); }

std::uint64_t get64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(p[i]) << (8 * i);
    return v;
}

const unsigned char* get_state(const unsigned char* p, DpState& s) {
    s.d_up_left = get16(p);
    s.d_down_left = get16(p + 2);
    s.d_up_right = get16(p + 4);
    s.d_down_right = get16(p + 6);
    s.n_up = get16(p + 8);
    s.n_down = get16(p + 10);
    return p + 12;
}

EdgeRecord decode_edge(const unsigned char* p) {
    EdgeRecord e;
    e.src_w = get16(p);
    e.src_cc = get16(p + 2);
    p = get_state(p + 4, e.src);
    e.src_cost = static_cast<std::int64_t>(get64(p));
    e.dst_w = get16(p + 8);
    e.dst_c = get16(p + 10);
    p = get_state(p + 12, e.dst);
    e.dst_cost = static_cast<std::int64_t>(get64(p));
    return e;
}

// Append-only binary log of min-achieving transitions, one section per outer
// column index. Replayed backwards to rebuild every optimal column sequence
// without keeping the layer maps alive.
class ParentLog {
public:
    ParentLog() = default;
    ~ParentLog() {
        if (file_) std::fclose(file_);
        if (!path_.empty()) {
            std::error_code ec;
            std::filesystem::remove(path_, ec);
        }
    }
    ParentLog(const ParentLog&) = delete;
    ParentLog& operator=(const ParentLog&) = delete;

    void open(std::filesystem::path dir) {
        if (dir.empty()) dir = std::filesystem::temp_directory_path();
        std::filesystem::create_directories(dir);
        static std::atomic<unsigned> counter{0};
        auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
        path_ = dir / ("ntowns-parents-" + std::to_string(stamp) + "-" +
                       std::to_string(counter.fetch_add(1)) + ".bin");
        file_ = std::fopen(path_.string().c_str(), "wb+");
        if (!file_) throw std::runtime_error("dp: cannot create parent log " + path_.string());
        const unsigned char header[8] = {'N', 'T', 'P', 'L', 1, 0, 0, 0};  // magic + version
        if (std::fwrite(header, 1, 8, file_) != 8)
            throw std::runtime_error("dp: cannot write parent log header");
        offset_ = 8;
    }

    bool is_open() const { return file_ != nullptr; }

    void begin_section() { sections_.push_back(offset_); }

    void append(const std::vector<EdgeRecord>& edges) {
        if (edges.empty()) return;
        buf_.clear();
        buf_.reserve(edges.size() * kEdgeRecordBytes);
        for (const auto& e : edges) {
            put16(buf_, e.src_w);
            put16(buf_, e.src_cc);
            put_state(buf_, e.src);
            put64(buf_, static_cast<std::uint64_t>(e.src_cost));
            put16(buf_, e.dst_w);
            put16(buf_, e.dst_c);
            put_state(buf_, e.dst);
            put64(buf_, static_cast<std::uint64_t>(e.dst_cost));
        }
        if (std::fwrite(buf_.data(), 1, buf_.size(), file_) != buf_.size())
            throw std::runtime_error("dp: short write to parent log");
        offset_ += buf_.size();
    }

    int section_count() const { return static_cast<int>(sections_.size()); }

    template <class Fn>
    void scan_section(int idx, Fn&& fn) const {
        std::uint64_t from = sections_[idx];
        std::uint64_t to = idx + 1 < section_count() ? sections_[idx + 1] : offset_;
        std::fflush(file_);
        if (std::fseek(file_, static_cast<long>(from), SEEK_SET) != 0)
            throw std::runtime_error("dp: parent log seek failed");
        std::vector<unsigned char> chunk(kEdgeRecordBytes * 16384);
        std::uint64_t remaining = to - from;
        while (remaining > 0) {
            std::size_t want = std::min<std::uint64_t>(remaining, chunk.size());
            if (std::fread(chunk.data(), 1, want, file_) != want)
                throw std::runtime_error("dp: short read from parent log");
            for (std::size_t off = 0; off < want; off += kEdgeRecordBytes)
                fn(decode_edge(chunk.data() + off));
            remaining -= want;
        }
    }

private:
    std::FILE* file_ = nullptr;
    std::filesystem::path path_;
    std::uint64_t offset_ = 0;
    std::vector<std::uint64_t> sections_;
    std::vector<unsigned char> buf_;
};

struct Completion {
    std::uint16_t w = 0, cc = 0;
    DpState state;
    std::int64_t state_cost = 0;
};

struct OptCell {
    std::int64_t cost = kInf;
    std::vector<Completion> refs;
};

struct ExpandCtx {
    const DpConfig* cfg = nullptr;
    std::int64_t ub = kInf;  // in the objective's own scale
    bool keep_parents = false;
};

void merge_opt(std::vector<OptCell>& into, std::vector<OptCell>& from) {
    for (std::size_t n = 0; n < into.size(); ++n) {
        if (from[n].cost < into[n].cost) {
            into[n].cost = from[n].cost;
            into[n].refs = std::move(from[n].refs);
        } else if (from[n].cost == into[n].cost && from[n].cost < kInf) {
            into[n].refs.insert(into[n].refs.end(), from[n].refs.begin(), from[n].refs.end());
        }
    }
}

void expand_entry(const ExpandCtx& ctx, int w, int cc, const DpState& src,
                  std::int64_t src_cost, std::vector<LayerMap>& out_layers,
                  std::vector<OptCell>& out_opt, std::vector<EdgeRecord>* out_edges) {
    const DpConfig& cfg = *ctx.cfg;
    Interface it = unpack(src);
    it.d_up_left += it.n_up;  // the left corners move one unit away from the new column
    it.d_down_left += it.n_down;
    for (int c = cc; c >= 0; --c) {
        std::int64_t pts = it.n_up + it.n_down + std::int64_t(w + 1) * c;
        if (pts <= cfg.n_target) {
            std::int64_t new_cost =
                src_cost + dp_detail::transition_increment(cfg.objective, w, cc, c, it);
            if (c == 0) {
                if (pts >= 1 && new_cost <= ctx.ub) {
                    OptCell& cell = out_opt[pts];
                    if (new_cost < cell.cost) {
                        cell.cost = new_cost;
                        cell.refs.clear();
                    }
                    if (new_cost == cell.cost && ctx.keep_parents)
                        cell.refs.push_back(
                            {std::uint16_t(w), std::uint16_t(cc), src, src_cost});
                }
            } else if (w + 1 <= cfg.width_limit && new_cost <= ctx.ub &&
                       !(cfg.balance_cut &&
                         std::abs(it.n_up - it.n_down) > cfg.width_limit)) {
                DpState dst = pack_exchanged(it);
                auto [pos, fresh] = out_layers[c].try_emplace(dst, new_cost);
                bool improves_or_ties = fresh || new_cost <= pos->second;
                if (!fresh && new_cost < pos->second) pos->second = new_cost;
                if (improves_or_ties && out_edges)
                    out_edges->push_back({std::uint16_t(w), std::uint16_t(cc), src, src_cost,
                                          std::uint16_t(w + 1), std::uint16_t(c), dst,
                                          new_cost});
            }
        }
        if (c > 0) dp_detail::shrink_column(it, w, c);
    }
}

void expand_layer(const ExpandCtx& ctx, int w, int cc, const LayerMap& layer,
                  std::vector<LayerMap>& next, std::vector<OptCell>& opt, ParentLog* log) {
    int threads = ctx.cfg->threads;
    if (threads > 1 && layer.size() < 512) threads = 1;
    if (threads == 1) {
        std::vector<EdgeRecord> edges;
        for (const auto& [s, cost] : layer)
            expand_entry(ctx, w, cc, s, cost, next, opt, log ? &edges : nullptr);
        if (log) log->append(edges);
        return;
    }

    std::vector<std::pair<DpState, std::int64_t>> entries(layer.begin(), layer.end());
    struct WorkerOut {
        std::vector<LayerMap> layers;
        std::vector<OptCell> opt;
        std::vector<EdgeRecord> edges;
    };
    std::vector<WorkerOut> outs(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        outs[t].layers.resize(next.size());
        outs[t].opt.resize(opt.size());
        pool.emplace_back([&, t] {
            std::size_t lo = entries.size() * t / threads;
            std::size_t hi = entries.size() * (t + 1) / threads;
            for (std::size_t i = lo; i < hi; ++i)
                expand_entry(ctx, w, cc, entries[i].first, entries[i].second, outs[t].layers,
                             outs[t].opt, log ? &outs[t].edges : nullptr);
        });
    }
    for (auto& th : pool) th.join();

    for (auto& wo : outs) {
        for (std::size_t c = 0; c < wo.layers.size(); ++c)
            for (const auto& [s, cost] : wo.layers[c]) {
                auto [pos, fresh] = next[c].try_emplace(s, cost);
                if (!fresh && cost < pos->second) pos->second = cost;
            }
        merge_opt(opt, wo.opt);
        if (log) log->append(wo.edges);
    }
}

Town build_town(const std::vector<int>& heights) {
    std::vector<GridPoint> pts;
    for (std::size_t k = 0; k < heights.size(); ++k) {
        // columns alternate around the first one: 0, -1, +1, -2, +2, ...
        int x = (k % 2 == 0) ? static_cast<int>(k) / 2 : -(static_cast<int>(k) + 1) / 2;
        int h = heights[k];
        int top = (h - 1) / 2;
        for (int y = top - h + 1; y <= top; ++y) pts.push_back({x, y});
    }
    return Town(std::move(pts));
}

struct NodeKey {
    std::uint16_t w = 0, cc = 0;
    DpState s;
    friend bool operator==(const NodeKey&, const NodeKey&) = default;
};

struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const {
        return DpStateHash{}(k.s) ^ (std::uint64_t(k.w) << 40) ^ (std::uint64_t(k.cc) << 24);
    }
};

struct Node {
    std::int64_t cost = 0;
    std::vector<NodeKey> parents;
};

using NodeMap = std::unordered_map<NodeKey, Node, NodeKeyHash>;

void walk_paths(const NodeMap& nodes, const NodeKey& key, std::vector<int>& heights_rev,
                std::set<Town>& shapes) {
    if (key.w == 0) {
        std::vector<int> heights(heights_rev.rbegin(), heights_rev.rend());
        shapes.insert(canonical_form(build_town(heights)));
        return;
    }
    heights_rev.push_back(key.cc);
    const Node& node = nodes.at(key);
    if (node.parents.empty()) throw std::logic_error("dp: parent links missing for a state");
    for (const NodeKey& p : node.parents) walk_paths(nodes, p, heights_rev, shapes);
    heights_rev.pop_back();
}

void reconstruct_shapes(const DpConfig& cfg, const ParentLog& log,
                        const std::vector<OptCell>& opt, SolveOutput& out) {
    NodeMap nodes;
    for (int n = 1; n <= cfg.n_target; ++n)
        for (const Completion& ref : opt[n].refs)
            nodes.try_emplace(NodeKey{ref.w, ref.cc, ref.state}, Node{ref.state_cost, {}});

    // Sections hold the edges out of one outer column index; scanning them
    // backwards meets every needed state after all its uses.
    for (int sec = log.section_count() - 1; sec >= 0; --sec) {
        log.scan_section(sec, [&](const EdgeRecord& e) {
            auto it = nodes.find(NodeKey{e.dst_w, e.dst_c, e.dst});
            if (it == nodes.end() || it->second.cost != e.dst_cost) return;
            NodeKey parent{e.src_w, e.src_cc, e.src};
            nodes.try_emplace(parent, Node{e.src_cost, {}});
            it->second.parents.push_back(parent);
        });
    }

    for (int n = 1; n <= cfg.n_target; ++n) {
        std::set<Town> shapes;
        std::vector<int> heights_rev;
        for (const Completion& ref : opt[n].refs)
            walk_paths(nodes, NodeKey{ref.w, ref.cc, ref.state}, heights_rev, shapes);
        if (shapes.empty()) throw std::logic_error("dp: no shape reconstructed");
        for (const Town& t : shapes) {
            if (t.size() != n) throw std::logic_error("dp: reconstructed shape has wrong size");
            std::int64_t scaled = cfg.objective == Objective::town
                                      ? town_cost(t)
                                      : block_city_cost(t).thirds * 2;
            if (scaled != opt[n].cost)
                throw std::logic_error("dp: reconstructed shape cost mismatch");
        }
        out.results[n].shapes.assign(shapes.begin(), shapes.end());
    }
}

}  // namespace

SolveOutput solve_all(const DpConfig& config) {
    DpConfig cfg = config;
    if (cfg.n_target < 1) throw std::invalid_argument("solve_all: n_target must be >= 1");
    if (cfg.n_target > 300) throw std::invalid_argument("solve_all: n_target above supported range");
    int safe_limit = default_width_limit(cfg.n_target);
    if (cfg.width_limit == 0) cfg.width_limit = safe_limit;
    if (cfg.width_limit < safe_limit)
        throw std::invalid_argument("solve_all: width_limit below the safe bound");
    if (cfg.threads < 1) cfg.threads = 1;
    const int limit = cfg.width_limit;

    ExpandCtx ctx;
    ctx.cfg = &cfg;
    ctx.keep_parents = cfg.reconstruct;
    if (cfg.upper_bound_cut) {
        auto [bound_cost, shape] = greedy_upper_bound(cfg.n_target, cfg.objective);
        ctx.ub = cfg.objective == Objective::town ? bound_cost.units() : bound_cost.thirds * 2;
    }

    ParentLog log;
    if (cfg.reconstruct) log.open(cfg.spill_dir);

    std::vector<LayerMap> cur(limit + 1), next(limit + 1);
    cur[limit].emplace(DpState{}, 0);
    std::vector<OptCell> opt(cfg.n_target + 1);

    for (int w = 0; w <= limit; ++w) {
        if (cfg.reconstruct) log.begin_section();
        for (int cc = limit; cc >= 1; --cc) {
            LayerMap layer = std::move(cur[cc]);
            cur[cc] = LayerMap();  // release before expanding the next one
            if (layer.empty()) continue;
            expand_layer(ctx, w, cc, layer, next, opt, cfg.reconstruct ? &log : nullptr);
            std::uint64_t live = 0;
            for (const auto& m : cur) live += m.size();
            for (const auto& m : next) live += m.size();
            if (live > cfg.max_states)
                throw ResourceLimitError("solve_all: state count exceeded max_states (" +
                                         std::to_string(cfg.max_states) + ")");
        }
        std::swap(cur, next);
    }

    SolveOutput out;
    out.config = cfg;
    out.results.resize(cfg.n_target + 1);
    for (int n = 1; n <= cfg.n_target; ++n) {
        if (opt[n].cost >= kInf) throw std::logic_error("solve_all: no completed shape for n");
        OptResult& r = out.results[n];
        r.n = n;
        r.objective = cfg.objective;
        r.cost = cfg.objective == Objective::town ? CostThirds::from_units(opt[n].cost)
                                                  : CostThirds::from_sixths(opt[n].cost);
    }
    if (cfg.reconstruct) reconstruct_shapes(cfg, log, opt, out);
    return out;
}

}  // namespace towns
