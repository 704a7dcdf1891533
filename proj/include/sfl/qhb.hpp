#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sfl/plumbing.hpp"

namespace sfl {

/// One token of a parameterized plumbing template: a fixed weight, a
/// parameterized weight -(x + offset), or a run of -2's whose length is the
/// parameter value.
struct QhbToken {
    enum class Kind { Weight, Param, Run };
    Kind kind = Kind::Weight;
    Integer weight;    // Kind::Weight
    char param = 0;    // Kind::Param / Kind::Run: one of 'p', 'q', 'r'
    Integer offset;    // Kind::Param: weight is -(value + offset)

    static QhbToken fixed(Integer w) { return {Kind::Weight, std::move(w), 0, Integer(0)}; }
    static QhbToken parameter(char x, Integer off) {
        return {Kind::Param, Integer(0), x, std::move(off)};
    }
    static QhbToken run(char x) { return {Kind::Run, Integer(0), x, Integer(0)}; }
};

/// A star-shaped plumbing family: fixed central weight and three token legs,
/// listed center outward.  Instantiating every parameter with a nonnegative
/// integer yields a plumbing tree that bounds a rational homology ball.
struct QhbFamily {
    std::string id;
    Integer center;
    std::vector<std::vector<QhbToken>> legs;

    std::vector<char> parameters() const {
        std::set<char> seen;
        for (const auto& leg : legs)
            for (const auto& t : leg)
                if (t.kind != QhbToken::Kind::Weight) seen.insert(t.param);
        return {seen.begin(), seen.end()};
    }
};

using QhbAssignment = std::map<char, Integer>;

struct QhbMatch {
    std::string id;
    QhbAssignment assignment;

    friend bool operator==(const QhbMatch&, const QhbMatch&) = default;
    friend auto operator<=>(const QhbMatch&, const QhbMatch&) = default;
};

namespace detail {

inline QhbToken parse_qhb_token(const nlohmann::json& j) {
    if (!j.is_object() || j.size() == 0)
        throw std::domain_error("qhb templates: token must be an object");
    if (j.contains("w")) {
        if (j.size() != 1 || !j["w"].is_number_integer())
            throw std::domain_error("qhb templates: fixed token is {\"w\": int}");
        return QhbToken::fixed(Integer(j["w"].get<long long>()));
    }
    if (j.contains("param")) {
        if (j.size() != 2 || !j.contains("offset") || !j["offset"].is_number_integer())
            throw std::domain_error("qhb templates: param token is {\"param\", \"offset\"}");
        std::string x = j["param"].get<std::string>();
        if (x.size() != 1 || (x[0] != 'p' && x[0] != 'q' && x[0] != 'r'))
            throw std::domain_error("qhb templates: parameter must be one of p, q, r");
        return QhbToken::parameter(x[0], Integer(j["offset"].get<long long>()));
    }
    if (j.contains("run2")) {
        if (j.size() != 1)
            throw std::domain_error("qhb templates: run token is {\"run2\": param}");
        std::string x = j["run2"].get<std::string>();
        if (x.size() != 1 || (x[0] != 'p' && x[0] != 'q' && x[0] != 'r'))
            throw std::domain_error("qhb templates: run parameter must be one of p, q, r");
        return QhbToken::run(x[0]);
    }
    throw std::domain_error("qhb templates: unrecognized token");
}

}  // namespace detail

/// Load plumbing template families from a JSON file: a list of
/// {id, center: token, legs: [[token...]...]}.
inline std::vector<QhbFamily> load_qhb_families(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("qhb templates: cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::domain_error("qhb templates: invalid JSON in " + path + ": " + e.what());
    }
    if (!doc.is_array()) throw std::domain_error("qhb templates: top level must be a list");
    std::vector<QhbFamily> out;
    std::set<std::string> ids;
    for (const auto& f : doc) {
        QhbFamily fam;
        fam.id = f.at("id").get<std::string>();
        if (!ids.insert(fam.id).second)
            throw std::domain_error("qhb templates: duplicate id " + fam.id);
        QhbToken center = detail::parse_qhb_token(f.at("center"));
        if (center.kind != QhbToken::Kind::Weight)
            throw std::domain_error("qhb templates: center must be a fixed weight");
        fam.center = center.weight;
        for (const auto& leg : f.at("legs")) {
            std::vector<QhbToken> tokens;
            for (const auto& t : leg) tokens.push_back(detail::parse_qhb_token(t));
            if (tokens.empty())
                throw std::domain_error("qhb templates: empty leg in " + fam.id);
            fam.legs.push_back(std::move(tokens));
        }
        if (fam.legs.size() != 3)
            throw std::domain_error("qhb templates: " + fam.id + " must have three legs");
        out.push_back(std::move(fam));
    }
    return out;
}

/// Template file resolution: the SFL_QHB_TEMPLATES environment variable wins,
/// then the compiled-in default location.
inline std::string default_qhb_templates_path() {
    if (const char* env = std::getenv("SFL_QHB_TEMPLATES"); env != nullptr && *env != '\0')
        return env;
#ifdef SFL_QHB_TEMPLATES_DEFAULT
    return SFL_QHB_TEMPLATES_DEFAULT;
#else
    return "data/qhb_patterns.json";
#endif
}

inline const std::vector<QhbFamily>& default_qhb_families() {
    static const std::vector<QhbFamily> families = load_qhb_families(default_qhb_templates_path());
    return families;
}

/// Instantiate a family at a parameter assignment.  Every parameter the
/// family mentions must be assigned a nonnegative integer.
inline StabilizedDiagram instantiate_qhb(const QhbFamily& fam, const QhbAssignment& values) {
    for (char x : fam.parameters()) {
        auto it = values.find(x);
        if (it == values.end())
            throw std::domain_error(std::string("instantiate_qhb: missing parameter ") + x);
        if (it->second < 0)
            throw std::domain_error(std::string("instantiate_qhb: negative parameter ") + x);
    }
    StabilizedDiagram d;
    d.vertices.push_back({fam.center, detail::plumbing_capacity(fam.center)});
    d.center = 0;
    for (const auto& tokens : fam.legs) {
        std::vector<int> leg;
        int prev = 0;
        auto push = [&](const Integer& w) {
            int id = static_cast<int>(d.vertices.size());
            d.vertices.push_back({w, detail::plumbing_capacity(w)});
            d.edges.emplace_back(prev, id);
            leg.push_back(id);
            prev = id;
        };
        for (const auto& t : tokens) {
            switch (t.kind) {
                case QhbToken::Kind::Weight: push(t.weight); break;
                case QhbToken::Kind::Param: push(-(values.at(t.param) + t.offset)); break;
                case QhbToken::Kind::Run: {
                    Integer n = values.at(t.param);
                    for (Integer i = 0; i < n; ++i) push(Integer(-2));
                    break;
                }
            }
        }
        if (leg.empty())
            throw std::domain_error("instantiate_qhb: a leg instantiated to length zero");
        d.legs.push_back(std::move(leg));
    }
    return d;
}

namespace detail {

/// Unify one token leg against a weight sequence, extending `env` in place.
/// Runs of unspecified length are tried shortest first, so the search is
/// deterministic; `env` is restored on failure.
inline bool match_leg(const std::vector<QhbToken>& tokens, std::size_t ti,
                      const std::vector<Integer>& w, std::size_t wi, QhbAssignment& env,
                      const std::function<bool()>& next) {
    if (ti == tokens.size()) return wi == w.size() && next();
    const QhbToken& t = tokens[ti];
    switch (t.kind) {
        case QhbToken::Kind::Weight:
            return wi < w.size() && w[wi] == t.weight &&
                   match_leg(tokens, ti + 1, w, wi + 1, env, next);
        case QhbToken::Kind::Param: {
            if (wi >= w.size()) return false;
            Integer val = -w[wi] - t.offset;
            if (val < 0) return false;
            auto it = env.find(t.param);
            if (it != env.end())
                return it->second == val && match_leg(tokens, ti + 1, w, wi + 1, env, next);
            env.emplace(t.param, val);
            if (match_leg(tokens, ti + 1, w, wi + 1, env, next)) return true;
            env.erase(t.param);
            return false;
        }
        case QhbToken::Kind::Run: {
            auto it = env.find(t.param);
            if (it != env.end()) {
                Integer n = it->second;
                std::size_t need = static_cast<std::size_t>(n.convert_to<long long>());
                if (wi + need > w.size()) return false;
                for (std::size_t j = 0; j < need; ++j)
                    if (w[wi + j] != -2) return false;
                return match_leg(tokens, ti + 1, w, wi + need, env, next);
            }
            for (std::size_t n = 0; wi + n <= w.size(); ++n) {
                if (n > 0 && w[wi + n - 1] != -2) break;
                env.emplace(t.param, Integer(static_cast<long long>(n)));
                if (match_leg(tokens, ti + 1, w, wi + n, env, next)) return true;
                env.erase(t.param);
            }
            return false;
        }
    }
    return false;
}

}  // namespace detail

/// Match a star-shaped diagram against the template families: exact matching
/// on weight sequences up to permutation of the legs.  Returns every
/// (family, assignment) pair that reproduces the diagram, in file order and
/// with assignments deduplicated; non-star diagrams match nothing.
inline std::vector<QhbMatch> qhb_match(const StabilizedDiagram& d,
                                       const std::vector<QhbFamily>& families) {
    std::vector<QhbMatch> out;
    if (!d.is_star() || d.legs.size() != 3) return out;
    const Integer& cw = d.vertices[static_cast<std::size_t>(d.center)].weight;
    std::array<std::vector<Integer>, 3> legs;
    for (std::size_t i = 0; i < 3; ++i)
        for (int v : d.legs[i]) legs[i].push_back(d.vertices[static_cast<std::size_t>(v)].weight);

    std::array<int, 3> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end());
    for (const QhbFamily& fam : families) {
        if (fam.center != cw) continue;
        std::set<QhbAssignment> found;
        std::array<int, 3> idx{0, 1, 2};
        do {
            QhbAssignment env;
            auto leg2 = [&]() {
                return detail::match_leg(fam.legs[2], 0, legs[static_cast<std::size_t>(idx[2])], 0,
                                         env, [&]() {
                                             found.insert(env);
                                             return false;  // keep searching for other assignments
                                         });
            };
            auto leg1 = [&]() {
                return detail::match_leg(fam.legs[1], 0, legs[static_cast<std::size_t>(idx[1])], 0,
                                         env, leg2);
            };
            detail::match_leg(fam.legs[0], 0, legs[static_cast<std::size_t>(idx[0])], 0, env, leg1);
        } while (std::next_permutation(idx.begin(), idx.end()));
        for (const auto& a : found) out.push_back({fam.id, a});
    }
    return out;
}

inline std::vector<QhbMatch> qhb_match(const StabilizedDiagram& d) {
    return qhb_match(d, default_qhb_families());
}

}  // namespace sfl
