#pragma once

/// Minimal paths in the Farey graph and their sign decorations.
///
/// A negative surgery coefficient r = -[a0, ..., an] determines a shortest
/// path from 0 to r whose edges split into continued fraction blocks; a
/// block with start s and target t has vertices s, s + t, s + 2t, ... under
/// the Farey sum.  Sign decorations of the path (with the meridian-adjacent
/// edges left blank) classify the tight structures the path encodes, up to
/// shuffling signs within a block.

#include "sfl/exactmath.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace sfl {

/// Oriented slope representative used inside path blocks.  Unlike
/// FareySlope this is not normalized: block arithmetic needs the negative
/// representative of infinity, (-1)/0.
struct RawSlope {
    Integer num;
    Integer den;

    RawSlope plus(const RawSlope& o, const Integer& times = Integer(1)) const {
        return RawSlope{num + times * o.num, den + times * o.den};
    }
    FareySlope normalized() const { return FareySlope(num, den); }
};

struct FareyPath {
    struct Block {
        std::size_t first = 0;  // vertex index range [first, last]
        std::size_t last = 0;   // first == last encodes an empty block
        RawSlope start;
        RawSlope target;

        std::size_t edge_count() const { return last - first; }
    };

    std::vector<FareySlope> vertices;
    std::vector<Block> blocks;

    std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    const FareySlope& endpoint() const { return vertices.back(); }
};

/// Shortest path from 0 to -[a0, ..., an] with its block structure.  The
/// head block has a0 - 1 edges (a0 when the expansion is a single entry),
/// middle blocks a_i - 2, and the final block an - 1; empty middle blocks
/// record where consecutive blocks step down past a chain of 2s.
inline FareyPath standard_path(const NegCF& c) {
    const auto& a = c.coeffs;
    if (a.empty()) throw std::domain_error("standard_path: empty expansion");
    if (a[0] < 1) throw std::domain_error("standard_path: head entry must be >= 1");
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] < 2) throw std::domain_error("standard_path: tail entries must be >= 2");

    FareyPath path;
    RawSlope s{0, 1}, t{-1, 0};
    path.vertices.push_back(s.normalized());

    const std::size_t n = a.size() - 1;
    for (std::size_t i = 0; i <= n; ++i) {
        Integer edges = (i == 0) ? a[0] - 1 : a[i] - 2;
        if (i == n) edges += 1;
        std::size_t first = path.vertices.size() - 1;
        auto m = static_cast<std::size_t>(edges);
        for (std::size_t j = 1; j <= m; ++j)
            path.vertices.push_back(s.plus(t, Integer(j)).normalized());
        path.blocks.push_back({first, first + m, s, t});
        if (i < n) {
            RawSlope ns = s.plus(t, edges);
            RawSlope nt = s.plus(t, edges + 1);
            s = ns;
            t = nt;
        }
    }
    return path;
}

/// Number of tight structures on the solid torus with meridian -[a0, ...],
/// |a0 (a1 - 1) ... (an - 1)|: one factor per block, edges + 1 each, with
/// the meridian-adjacent edge blank.
inline Integer count_tight_solid_torus(const NegCF& c) {
    const auto& a = c.coeffs;
    if (a.empty()) throw std::domain_error("count_tight_solid_torus: empty expansion");
    Integer prod = a[0];
    for (std::size_t i = 1; i < a.size(); ++i) prod *= a[i] - 1;
    return abs(Rational(prod)).num();
}

enum class EdgeSign { Plus, Minus, Blank };

inline char sign_char(EdgeSign s) {
    switch (s) {
        case EdgeSign::Plus: return '+';
        case EdgeSign::Minus: return '-';
        default: return '.';
    }
}

struct DecoratedPath {
    FareyPath path;
    std::vector<EdgeSign> signs;  // one per edge
};

/// Attach signs to a path.  Blank is only legal on the first or last edge,
/// the positions adjacent to a meridian in the classifications encoded here.
inline DecoratedPath decorate(FareyPath path, std::vector<EdgeSign> signs) {
    if (signs.size() != path.edge_count())
        throw std::domain_error("decorate: one sign per edge required");
    for (std::size_t i = 0; i < signs.size(); ++i)
        if (signs[i] == EdgeSign::Blank && i != 0 && i + 1 != signs.size())
            throw std::domain_error("decorate: blank signs only on meridian-adjacent edges");
    return DecoratedPath{std::move(path), std::move(signs)};
}

/// Slopes that can replace the corner at an interior vertex of a decorated
/// path when the two edges meeting there carry opposite signs.  Interior of
/// a block: the block target alone.  At a junction followed by l - 1 empty
/// blocks: the intermediate targets t_1, ..., t_{l-1} together with
/// s + (k+1) t of the finished block.
inline std::vector<FareySlope> exceptional_slopes(const DecoratedPath& d,
                                                  std::pair<std::size_t, std::size_t> junction) {
    const FareyPath& p = d.path;
    if (junction.second != junction.first + 1 || junction.second >= p.edge_count())
        throw std::domain_error("exceptional_slopes: junction must name two consecutive edges");
    const std::size_t v = junction.first + 1;  // shared vertex
    if (v == 0 || v + 1 >= p.vertices.size())
        throw std::domain_error("exceptional_slopes: junction vertex must be interior");

    for (const auto& b : p.blocks)
        if (b.first < v && v < b.last) return {b.target.normalized()};

    // v sits between blocks: find the finished block and count empty blocks.
    std::size_t bi = p.blocks.size();
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
        if (p.blocks[i].last == v && p.blocks[i].edge_count() > 0) { bi = i; break; }
    if (bi == p.blocks.size())
        throw std::domain_error("exceptional_slopes: vertex not on a block boundary");
    std::size_t down = 1;
    for (std::size_t i = bi + 1; i < p.blocks.size() && p.blocks[i].edge_count() == 0; ++i)
        ++down;

    const auto& b = p.blocks[bi];
    const Integer k(static_cast<long long>(b.edge_count()));
    RawSlope corner = b.start.plus(b.target, k);        // the junction vertex itself
    RawSlope f = b.start.plus(b.target, k + 1);
    std::vector<FareySlope> out;
    RawSlope cur = f;
    for (std::size_t j = 1; j < down; ++j) {
        cur = corner.plus(cur);
        out.push_back(cur.normalized());
    }
    out.push_back(f.normalized());
    return out;
}

struct DecorationReport {
    std::vector<bool> block_mixed;                 // per block: contains + and -
    std::vector<std::size_t> junction_mismatches;  // vertex indices between pure blocks of opposite sign
    bool consistent = true;                        // no mixed block, no mismatch
};

/// Per-block sign analysis of a decorated path.  Blank edges carry no sign;
/// a block is mixed when it contains both signs, and two nonempty pure
/// blocks of opposite sign meet in a junction mismatch.
inline DecorationReport classify_decoration(const DecoratedPath& d) {
    DecorationReport rep;
    int prev_sign = 0;          // sign of the last signed block seen
    std::size_t prev_end = 0;
    for (const auto& b : d.path.blocks) {
        bool plus = false, minus = false;
        for (std::size_t e = b.first; e < b.last; ++e) {
            if (d.signs[e] == EdgeSign::Plus) plus = true;
            if (d.signs[e] == EdgeSign::Minus) minus = true;
        }
        rep.block_mixed.push_back(plus && minus);
        if (plus && minus) rep.consistent = false;
        int sign = plus ? 1 : minus ? -1 : 0;
        if (sign != 0) {
            if (prev_sign != 0 && sign != prev_sign) {
                rep.junction_mismatches.push_back(prev_end);
                rep.consistent = false;
            }
            prev_sign = sign;
            prev_end = b.last;
        }
    }
    return rep;
}

/// Canonical representative of a decoration class: within each block the
/// signed edges are reordered with every + before every -.
inline DecoratedPath normalize_decoration(const DecoratedPath& d) {
    DecoratedPath out = d;
    for (const auto& b : out.path.blocks) {
        std::vector<std::size_t> pos;
        std::size_t plus = 0;
        for (std::size_t e = b.first; e < b.last; ++e) {
            if (out.signs[e] == EdgeSign::Blank) continue;
            pos.push_back(e);
            if (out.signs[e] == EdgeSign::Plus) ++plus;
        }
        for (std::size_t i = 0; i < pos.size(); ++i)
            out.signs[pos[i]] = i < plus ? EdgeSign::Plus : EdgeSign::Minus;
    }
    return out;
}

}  // namespace sfl
