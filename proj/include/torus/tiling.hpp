#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "torus/algebra.hpp"

namespace torus {

// A boundary word lists, in walk order from the root leaf, the number of
// sectors seen from each boundary region. It is the corner word of the dual
// square-tiled disk.
using Word = std::vector<int>;

namespace tiling_detail {

struct Shape {
    bool closed = false;
    long area = 0;
};

// Unit sides; at region i turn left by (2 - k_i) quarter turns.
inline Shape shape_of(const Word& w) {
    static const int dx[4] = {1, 0, -1, 0};
    static const int dy[4] = {0, 1, 0, -1};
    long x = 0, y = 0, twice_area = 0;
    int dir = 0;
    long turn = 0;
    for (int k : w) {
        long nx = x + dx[dir], ny = y + dy[dir];
        twice_area += x * ny - nx * y;
        x = nx;
        y = ny;
        dir = ((dir + 2 - k) % 4 + 4) % 4;
        turn += 2 - k;
    }
    Shape s;
    s.closed = (x == 0 && y == 0 && turn == 4);
    if (s.closed && twice_area % 2 == 0) s.area = twice_area / 2;
    else s.closed = false;
    return s;
}

inline bool is_lone_edge(const Word& w) { return w.size() == 2 && w[0] == 0 && w[1] == 0; }

// Necessary conditions for the word to bound a square-tiled disk.
inline bool admissible(const Word& w, long* area = nullptr) {
    std::size_t n = w.size();
    if (n < 4 || n % 2 != 0) return false;
    long sum = 0;
    for (int k : w) {
        if (k < 1) return false;
        sum += k;
    }
    if (sum != 2 * static_cast<long>(n) - 4) return false;
    Shape s = shape_of(w);
    if (!s.closed || s.area < 1) return false;
    if (static_cast<long>(n) > 2 * s.area + 2) return false;
    if (area) *area = s.area;
    return true;
}

inline Word rotate_min(const Word& w) {
    Word best = w;
    Word cur = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

inline std::string key_of(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (int k : w) s += static_cast<char>(k + 1);
    return s;
}

inline Word cat(std::initializer_list<Word> parts) {
    Word out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

inline Word slice(const Word& w, std::size_t from, std::size_t to) {
    if (from >= to) return {};
    return Word(w.begin() + from, w.begin() + to);
}

}  // namespace tiling_detail

// Number of rooted tiling patterns (centered) with boundary word w.
inline std::uint64_t count_word(const Word& w) {
    using namespace tiling_detail;
    if (is_lone_edge(w)) return 1;
    if (!admissible(w)) return 0;
    thread_local std::unordered_map<std::string, std::uint64_t> memo;
    std::string key = key_of(rotate_min(w));
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const std::size_t n = w.size();
    const int k1 = w[0], kn = w[n - 1];
    std::uint64_t total = 0;
    // Both neighbours of the root vertex interior.
    total += count_word(cat({{k1 - 1}, slice(w, 1, n - 1), {kn - 1, 3, 3}}));
    for (std::size_t j = 1; j + 1 < n; ++j) {
        for (int p = 0; p < w[j]; ++p) {
            // Second sector on the boundary.
            std::uint64_t a = count_word(cat({{k1 - 1}, slice(w, 1, j), {p}}));
            if (a) total += a * count_word(cat({{w[j] - 1 - p}, slice(w, j + 1, n - 1), {kn - 1, 3}}));
            // Third sector on the boundary.
            a = count_word(cat({{k1 - 1}, slice(w, 1, j), {p, 3}}));
            if (a) total += a * count_word(cat({{w[j] - 1 - p}, slice(w, j + 1, n - 1), {kn - 1}}));
        }
    }
    for (std::size_t j = 1; j + 1 < n; ++j)
        for (std::size_t l = j + 1; l + 1 < n; ++l)
            for (int p = 0; p < w[j]; ++p) {
                std::uint64_t a = count_word(cat({{k1 - 1}, slice(w, 1, j), {p}}));
                if (!a) continue;
                for (int q = 0; q < w[l]; ++q) {
                    std::uint64_t b = count_word(cat({{w[j] - 1 - p}, slice(w, j + 1, l), {q}}));
                    if (!b) continue;
                    total += a * b * count_word(cat({{w[l] - 1 - q}, slice(w, l + 1, n - 1), {kn - 1}}));
                }
            }
    memo.emplace(std::move(key), total);
    return total;
}

// Area (number of 4-valent vertices) of an admissible word, 0 otherwise.
inline long word_area(const Word& w) {
    long a = 0;
    return tiling_detail::admissible(w, &a) ? a : 0;
}

// Rotation system: vertex v owns half-edges 4v..4v+3 in counterclockwise
// order sigma(4v+j) = 4v+(j+1)%4. alpha pairs half-edges, -1 marks a leaf.
// Sector (h, sigma h) carries a label; labels drop by one along sigma.
struct DiskMap {
    int V = 0;
    std::vector<int> alpha;
    std::vector<int> leaves;  // boundary leaves L_0..L_{n-1} in walk order
    bool lone = false;
};

// Every rooted pattern with boundary word w; the root is half-edge 0.
inline const std::vector<DiskMap>& build_word(const Word& w) {
    using namespace tiling_detail;
    thread_local std::map<Word, std::vector<DiskMap>> memo;
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    std::vector<DiskMap> out;
    if (is_lone_edge(w)) {
        DiskMap m;
        m.lone = true;
        out.push_back(m);
    } else if (admissible(w)) {
        const std::size_t n = w.size();
        const int k1 = w[0], kn = w[n - 1];
        auto place = [](DiskMap& M, const DiskMap& P) {
            int off = 4 * M.V;
            for (int a : P.alpha) M.alpha.push_back(a < 0 ? -1 : a + off);
            M.V += P.V;
            return off;
        };
        auto glue = [](DiskMap& M, int e, const DiskMap& P, int off, int idx) {
            if (P.lone) return;
            int h = P.leaves[idx] + off;
            M.alpha[e] = h;
            M.alpha[h] = e;
        };
        auto leaf = [](const DiskMap& P, int off, int idx, int e) { return P.lone ? e : P.leaves[idx] + off; };
        auto root = [] {
            DiskMap M;
            M.V = 1;
            M.alpha = {-1, -1, -1, -1};
            M.leaves = {0};
            return M;
        };
        for (const auto& P : build_word(cat({{k1 - 1}, slice(w, 1, n - 1), {kn - 1, 3, 3}}))) {
            DiskMap M = root();
            int off = place(M, P);
            int N = static_cast<int>(n) + 2;
            glue(M, 1, P, off, 0);
            glue(M, 3, P, off, N - 2);
            glue(M, 2, P, off, N - 1);
            for (std::size_t t = 1; t < n; ++t) M.leaves.push_back(P.leaves[t] + off);
            out.push_back(std::move(M));
        }
        for (std::size_t j = 1; j + 1 < n; ++j) {
            for (int p = 0; p < w[j]; ++p) {
                const auto& As = build_word(cat({{k1 - 1}, slice(w, 1, j), {p}}));
                if (!As.empty()) {
                    const auto& Bs = build_word(cat({{w[j] - 1 - p}, slice(w, j + 1, n - 1), {kn - 1, 3}}));
                    for (const auto& A : As)
                        for (const auto& B : Bs) {
                            DiskMap M = root();
                            int oa = place(M, A), ob = place(M, B);
                            glue(M, 1, A, oa, 0);
                            glue(M, 2, B, ob, 0);
                            glue(M, 3, B, ob, static_cast<int>(n - j));
                            for (std::size_t t = 1; t <= j; ++t) M.leaves.push_back(leaf(A, oa, int(t), 1));
                            for (std::size_t t = 1; t + j < n; ++t) M.leaves.push_back(leaf(B, ob, int(t), 2));
                            out.push_back(std::move(M));
                        }
                }
                const auto& As2 = build_word(cat({{k1 - 1}, slice(w, 1, j), {p, 3}}));
                if (!As2.empty()) {
                    const auto& Bs = build_word(cat({{w[j] - 1 - p}, slice(w, j + 1, n - 1), {kn - 1}}));
                    for (const auto& A : As2)
                        for (const auto& B : Bs) {
                            DiskMap M = root();
                            int oa = place(M, A), ob = place(M, B);
                            glue(M, 1, A, oa, 0);
                            glue(M, 2, A, oa, static_cast<int>(j + 1));
                            glue(M, 3, B, ob, 0);
                            for (std::size_t t = 1; t <= j; ++t) M.leaves.push_back(A.leaves[t] + oa);
                            for (std::size_t t = 1; t + j < n; ++t) M.leaves.push_back(leaf(B, ob, int(t), 3));
                            out.push_back(std::move(M));
                        }
                }
            }
        }
        for (std::size_t j = 1; j + 1 < n; ++j)
            for (std::size_t l = j + 1; l + 1 < n; ++l)
                for (int p = 0; p < w[j]; ++p) {
                    const auto& As = build_word(cat({{k1 - 1}, slice(w, 1, j), {p}}));
                    if (As.empty()) continue;
                    for (int q = 0; q < w[l]; ++q) {
                        const auto& Bs = build_word(cat({{w[j] - 1 - p}, slice(w, j + 1, l), {q}}));
                        if (Bs.empty()) continue;
                        const auto& Cs = build_word(cat({{w[l] - 1 - q}, slice(w, l + 1, n - 1), {kn - 1}}));
                        for (const auto& A : As)
                            for (const auto& B : Bs)
                                for (const auto& C : Cs) {
                                    DiskMap M = root();
                                    int oa = place(M, A), ob = place(M, B), oc = place(M, C);
                                    glue(M, 1, A, oa, 0);
                                    glue(M, 2, B, ob, 0);
                                    glue(M, 3, C, oc, 0);
                                    for (std::size_t t = 1; t <= j; ++t) M.leaves.push_back(leaf(A, oa, int(t), 1));
                                    for (std::size_t t = 1; t <= l - j; ++t) M.leaves.push_back(leaf(B, ob, int(t), 2));
                                    for (std::size_t t = 1; t + l < n; ++t) M.leaves.push_back(leaf(C, oc, int(t), 3));
                                    out.push_back(std::move(M));
                                }
                    }
                }
    }
    return memo.emplace(w, std::move(out)).first->second;
}

enum class ChainSide { none, left, right };

inline const char* to_string(ChainSide s) {
    switch (s) {
        case ChainSide::left: return "left";
        case ChainSide::right: return "right";
        default: return "none";
    }
}

struct TilingPattern {
    int vertices = 0;
    std::vector<int> half_edges;  // alpha
    int root = 0;
    ChainSide chain_side = ChainSide::none;
    int chain_count = 0;
    int seed_label = 4;       // label of sector (root, sigma root)
    std::vector<int> labels;  // optional explicit labels per sector; empty means derived

    friend bool operator==(const TilingPattern&, const TilingPattern&) = default;
    friend bool operator<(const TilingPattern& x, const TilingPattern& y) {
        return std::tie(x.vertices, x.half_edges, x.root, x.chain_side, x.chain_count, x.seed_label, x.labels) <
               std::tie(y.vertices, y.half_edges, y.root, y.chain_side, y.chain_count, y.seed_label, y.labels);
    }
};

struct ValidityReport {
    bool valid = false;
    std::string reason;
    int n = 0, w = 0, d = 0;
};

namespace tiling_detail {

inline int sigma(int h) { return (h & ~3) | ((h + 1) & 3); }
inline int sigma_inv(int h) { return (h & ~3) | ((h + 3) & 3); }

// Corner labels derived from the seed; nullopt if inconsistent.
inline std::optional<std::vector<int>> derive_labels(const TilingPattern& p) {
    const int V = p.vertices;
    std::vector<int> c(V, 0);
    std::vector<bool> seen(V, false);
    int v0 = p.root / 4;
    c[v0] = p.seed_label + p.root % 4;
    seen[v0] = true;
    std::queue<int> q;
    q.push(v0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int j = 0; j < 4; ++j) {
            int h = 4 * v + j, h2 = p.half_edges[h];
            if (h2 < 0) continue;
            int v2 = h2 / 4, j2 = h2 % 4;
            int want = c[v] - j + j2 + 2;
            if (!seen[v2]) {
                seen[v2] = true;
                c[v2] = want;
                q.push(v2);
            } else if (mod4(c[v2]) != mod4(want)) {
                return std::nullopt;
            }
        }
    }
    std::vector<int> lab(4 * V);
    for (int h = 0; h < 4 * V; ++h) lab[h] = mod4(c[h / 4] - h % 4);
    return lab;
}

struct Walk {
    std::vector<std::vector<int>> regions;  // corner half-edges per region
};

// Boundary walk from the root: arrive via h, record corner (h, sigma h).
inline Walk boundary_walk(const TilingPattern& p) {
    Walk wk;
    int in = p.root;
    std::vector<int> cur;
    std::size_t guard = 0, limit = 8 * p.half_edges.size() + 8;
    while (true) {
        cur.push_back(in);
        int out = sigma(in);
        if (p.half_edges[out] < 0) {
            wk.regions.push_back(cur);
            cur.clear();
            in = out;
            if (in == p.root) break;
        } else {
            in = p.half_edges[out];
        }
        if (++guard > limit) throw std::logic_error("boundary walk did not close");
    }
    return wk;
}

}  // namespace tiling_detail

inline ValidityReport validate_pattern(const TilingPattern& p) {
    using namespace tiling_detail;
    ValidityReport r;
    auto fail = [&](std::string why) {
        r.valid = false;
        r.reason = std::move(why);
        return r;
    };
    const int V = p.vertices;
    const int H = 4 * V;
    if (V < 1) return fail("no internal 4-valent vertex");
    if (static_cast<int>(p.half_edges.size()) != H) return fail("half-edge table size is not 4*vertices");
    int leaves = 0, internal = 0;
    for (int h = 0; h < H; ++h) {
        int a = p.half_edges[h];
        if (a == -1) {
            ++leaves;
            continue;
        }
        if (a < 0 || a >= H) return fail("half-edge index out of range");
        if (a == h || p.half_edges[a] != h) return fail("edge pairing is not an involution");
        ++internal;
    }
    internal /= 2;
    if (p.root < 0 || p.root >= H || p.half_edges[p.root] != -1) return fail("root is not a boundary leaf");
    {
        std::vector<bool> seen(V, false);
        std::vector<int> st{0};
        seen[0] = true;
        int cnt = 1;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int j = 0; j < 4; ++j) {
                int a = p.half_edges[4 * v + j];
                if (a >= 0 && !seen[a / 4]) {
                    seen[a / 4] = true;
                    ++cnt;
                    st.push_back(a / 4);
                }
            }
        }
        if (cnt != V) return fail("graph is not connected");
    }
    // Faces are orbits of h -> sigma(alpha'(h)), alpha' fixing leaves.
    std::vector<int> face(H, -1);
    int faces = 0, outer = -1, leaf_faces = 0;
    for (int h = 0; h < H; ++h) {
        if (face[h] >= 0) continue;
        std::vector<int> orbit;
        bool has_leaf = false;
        int x = h;
        do {
            face[x] = faces;
            orbit.push_back(x);
            int a = p.half_edges[x];
            if (a < 0) has_leaf = true;
            x = sigma(a < 0 ? x : a);
        } while (x != h);
        if (has_leaf) {
            ++leaf_faces;
            outer = faces;
        } else {
            std::set<int> vs;
            for (int y : orbit) vs.insert(y / 4);
            if (orbit.size() != 4 || vs.size() != 4) return fail("bounded region is not a short cycle");
        }
        ++faces;
    }
    (void)outer;
    if (leaf_faces != 1) return fail("leaves do not lie on a single boundary face");
    if (faces != 2 - V + internal) return fail("embedding is not planar");
    std::vector<int> lab;
    if (p.seed_label < 1 || p.seed_label > 4) return fail("seed label outside 1..4");
    if (p.labels.empty()) {
        auto d = derive_labels(p);
        if (!d) return fail("labelling from seed is inconsistent");
        lab = *d;
    } else {
        if (static_cast<int>(p.labels.size()) != H) return fail("label table size is not 4*vertices");
        lab = p.labels;
        for (int h = 0; h < H; ++h) {
            if (lab[h] < 1 || lab[h] > 4) return fail("label outside 1..4");
            if (lab[sigma(h)] != mod4(lab[h] - 1)) return fail("quadrant labels do not read 4,3,2,1");
        }
        for (int h = 0; h < H; ++h) {
            int a = p.half_edges[h];
            if (a >= 0 && lab[a] != mod4(lab[sigma_inv(h)] + 1)) return fail("labels do not step by one across an edge");
        }
        if (lab[p.root] != p.seed_label) return fail("seed label disagrees with the label table");
    }
    if ((p.chain_side == ChainSide::none) != (p.chain_count == 0) || p.chain_count < 0)
        return fail("root chain side and count disagree");
    r.n = leaves;
    r.w = faces - 1;
    r.d = V;
    if (r.n % 2 != 0) return fail("odd number of boundary arcs");
    if (r.d != r.w + r.n / 2 - 1) return fail("vertex count differs from w + n/2 - 1");
    r.valid = true;
    r.reason = "ok";
    return r;
}

class PatternError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline std::vector<int> pattern_labels(const TilingPattern& p) {
    if (!p.labels.empty()) return p.labels;
    auto d = tiling_detail::derive_labels(p);
    if (!d) throw PatternError("inconsistent labelling");
    return *d;
}

inline std::vector<Basic> chord_sequence(const TilingPattern& p) {
    auto rep = validate_pattern(p);
    if (!rep.valid) throw PatternError("invalid pattern: " + rep.reason);
    auto lab = pattern_labels(p);
    auto wk = tiling_detail::boundary_walk(p);
    std::vector<Basic> seq;
    for (const auto& reg : wk.regions) seq.push_back(Basic::chord(lab[reg.front()], static_cast<int>(reg.size())));
    const int m = p.chain_count;
    if (p.chain_side == ChainSide::left) seq.front() = Basic::chord(seq.front().start() - m, seq.front().len + m);
    if (p.chain_side == ChainSide::right) seq.back() = Basic::chord(seq.back().start(), seq.back().len + m);
    return seq;
}

// Boundary word (sector counts per region) of the pattern's 4-valent part.
inline Word pattern_word(const TilingPattern& p) {
    Word w;
    for (const auto& reg : tiling_detail::boundary_walk(p).regions) w.push_back(static_cast<int>(reg.size()));
    return w;
}

inline Basic output_element(const TilingPattern& p) {
    auto seq = chord_sequence(p);
    const int d = p.vertices, m = p.chain_count;
    if (p.chain_side == ChainSide::left) return Basic::chord(seq.front().start(), m, d);
    if (p.chain_side == ChainSide::right) return Basic::chord(seq.back().end() - m + 1, m, d);
    return Basic::idempotent(seq.front().left(), d);
}

// Relabel by breadth-first search from the root; the root becomes half-edge 0.
inline TilingPattern canonical_form(const TilingPattern& p) {
    const int V = p.vertices;
    std::vector<int> id(V, -1), off(V, 0), order;
    id[p.root / 4] = 0;
    off[p.root / 4] = p.root % 4;
    order.push_back(p.root / 4);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int t = 0; t < 4; ++t) {
            int a = p.half_edges[4 * v + (off[v] + t) % 4];
            if (a >= 0 && id[a / 4] < 0) {
                id[a / 4] = static_cast<int>(order.size());
                off[a / 4] = a % 4;
                order.push_back(a / 4);
            }
        }
    }
    if (static_cast<int>(order.size()) != V) throw PatternError("pattern is not connected");
    auto nh = [&](int h) { return 4 * id[h / 4] + ((h % 4 - off[h / 4]) % 4 + 4) % 4; };
    TilingPattern q = p;
    q.root = 0;
    q.half_edges.assign(4 * V, -1);
    for (int h = 0; h < 4 * V; ++h)
        if (p.half_edges[h] >= 0) q.half_edges[nh(h)] = nh(p.half_edges[h]);
    if (!p.labels.empty()) {
        q.labels.assign(4 * V, 0);
        for (int h = 0; h < 4 * V; ++h) q.labels[nh(h)] = p.labels[h];
    }
    return q;
}

enum class EnumStatus { ok, odd_length, not_chord_sequence, nonpositive_d };

struct Enumeration {
    EnumStatus status = EnumStatus::ok;
    std::vector<TilingPattern> patterns;
};

inline const char* to_string(EnumStatus s) {
    switch (s) {
        case EnumStatus::odd_length: return "odd_length";
        case EnumStatus::not_chord_sequence: return "not_chord_sequence";
        case EnumStatus::nonpositive_d: return "nonpositive_d";
        default: return "ok";
    }
}

// Consecutive tensor factors compose in the idempotents but multiply to zero.
inline bool is_chord_sequence(const std::vector<Basic>& seq) {
    for (const auto& a : seq)
        if (!a.is_chord() || a.u != 0) return false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (seq[i + 1].start() != mod4(seq[i].end() - 1)) return false;
    return true;
}

namespace tiling_detail {

struct Candidate {
    Word word;
    ChainSide side;
    int m;
    Basic output;
};

// Words of the 4-valent part for each admissible root chain.
inline std::vector<Candidate> candidates(const std::vector<Basic>& seq, int w) {
    std::vector<Candidate> out;
    const int n = static_cast<int>(seq.size());
    const int d = w + n / 2 - 1;
    Word base;
    for (const auto& a : seq) base.push_back(a.len);
    const int r = ((seq.back().end() - 1 - seq.front().start()) % 4 + 4) % 4;
    if (r == 0) out.push_back({base, ChainSide::none, 0, Basic::idempotent(seq.front().left(), d)});
    for (int m = r == 0 ? 4 : r; m < seq.front().len; m += 4) {
        Word wd = base;
        wd.front() -= m;
        out.push_back({wd, ChainSide::left, m, Basic::chord(seq.front().start(), m, d)});
    }
    for (int m = r == 0 ? 4 : r; m < seq.back().len; m += 4) {
        Word wd = base;
        wd.back() -= m;
        out.push_back({wd, ChainSide::right, m, Basic::chord(seq.back().end() - m + 1, m, d)});
    }
    std::vector<Candidate> kept;
    for (auto& c : out)
        if (word_area(c.word) == d) kept.push_back(std::move(c));
    return kept;
}

}  // namespace tiling_detail

inline Enumeration enumerate_patterns(const std::vector<Basic>& seq, int w) {
    Enumeration e;
    const int n = static_cast<int>(seq.size());
    if (n % 2 != 0) {
        e.status = EnumStatus::odd_length;
        return e;
    }
    if (n == 0 || !is_chord_sequence(seq)) {
        e.status = EnumStatus::not_chord_sequence;
        return e;
    }
    if (w + n / 2 - 1 < 1) {
        e.status = EnumStatus::nonpositive_d;
        return e;
    }
    std::set<TilingPattern> seen;
    for (const auto& c : tiling_detail::candidates(seq, w)) {
        int seed = mod4(seq.front().start() + (c.side == ChainSide::left ? c.m : 0));
        for (const auto& M : build_word(c.word)) {
            TilingPattern p;
            p.vertices = M.V;
            p.half_edges = M.alpha;
            p.root = 0;
            p.chain_side = c.side;
            p.chain_count = c.m;
            p.seed_label = seed;
            p = canonical_form(p);
            if (!seen.insert(p).second) throw std::logic_error("duplicate pattern in enumeration");
        }
    }
    e.patterns.assign(seen.begin(), seen.end());
    return e;
}

// mu_n^w on basic Reeb or idempotent inputs without U factors, as
// (output, number of patterns) pairs.
inline std::vector<std::pair<Basic, std::uint64_t>> mu_counts(int w, const std::vector<Basic>& in) {
    std::vector<std::pair<Basic, std::uint64_t>> out;
    const int n = static_cast<int>(in.size());
    if (w < 0) return out;
    if (n == 0) {
        if (w == 1)
            for (const auto& c : length_four_chords()) out.emplace_back(c, 1);
        return out;
    }
    if (n == 2 && w == 0) {
        if (auto p = multiply(in[0], in[1])) out.emplace_back(*p, 1);
        return out;
    }
    if (n % 2 != 0) return out;
    if (!is_chord_sequence(in)) return out;
    if (w + n / 2 - 1 < 1) return out;
    for (const auto& c : tiling_detail::candidates(in, w))
        if (auto k = count_word(c.word)) out.emplace_back(c.output, k);
    return out;
}

// Multilinear, U-equivariant extension to arbitrary elements.
template <class R>
Element<R> mu(int w, const std::vector<Element<R>>& inputs) {
    Element<R> out;
    std::vector<Basic> cur(inputs.size());
    std::vector<std::size_t> idx(inputs.size(), 0);
    for (const auto& x : inputs)
        if (x.is_zero()) return out;
    while (true) {
        int u = 0;
        typename R::coeff c = R::one();
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            const auto& [b, k] = inputs[i].terms()[idx[i]];
            cur[i] = b.without_u();
            u += b.u;
            c = R::mul(c, k);
        }
        for (const auto& [b, k] : mu_counts(w, cur)) out.add(b.times_u(u), R::mul(c, R::from_int(static_cast<std::int64_t>(k))));
        std::size_t i = 0;
        while (i < inputs.size() && ++idx[i] == inputs[i].size()) idx[i++] = 0;
        if (i == inputs.size()) break;
    }
    return out;
}

}  // namespace torus
