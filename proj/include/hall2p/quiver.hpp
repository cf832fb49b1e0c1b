#pragma once

/* Dynkin quivers.  Only types A/D/E are accepted: the underlying graph must
 * be one of the simply-laced Dynkin trees, checked at construction.  Tree
 * shape means any two vertices are joined by at most one directed path, so
 * Hom(P(i), P(j)) is at most one-dimensional throughout. */

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hall2p/common.hpp"

namespace hall2p {

struct Arrow {
    size_t src;
    size_t tgt;
};

class Quiver {
public:
    Quiver(size_t n, std::vector<Arrow> arrows)
        : n_(n), arrows_(std::move(arrows))
    {
        validate();
    }

    /* "A3", "D4", "E6", ... with a fixed orientation along increasing
     * vertex labels. */
    static Quiver of_type(const std::string& type)
    {
        if (type.size() < 2)
            throw ConfigError("bad quiver type '" + type + "'");
        char fam = type[0];
        int n = 0;
        try {
            n = std::stoi(type.substr(1));
        } catch (...) {
            throw ConfigError("bad quiver type '" + type + "'");
        }
        std::vector<Arrow> arrows;
        if (fam == 'A' && n >= 1) {
            for (int i = 0; i + 1 < n; ++i)
                arrows.push_back({size_t(i), size_t(i + 1)});
        } else if (fam == 'D' && n >= 4) {
            for (int i = 0; i + 2 < n; ++i)
                arrows.push_back({size_t(i), size_t(i + 1)});
            arrows.push_back({size_t(n - 3), size_t(n - 1)});
        } else if (fam == 'E' && n >= 6 && n <= 8) {
            // chain 0-2-3-...-(n-1) with vertex 1 attached to vertex 3
            arrows.push_back({0, 2});
            arrows.push_back({1, 3});
            arrows.push_back({2, 3});
            for (int i = 3; i + 1 < n; ++i)
                arrows.push_back({size_t(i), size_t(i + 1)});
        } else {
            throw ConfigError("quiver type '" + type +
                              "' is not Dynkin A/D/E (affine and other types "
                              "are rejected)");
        }
        return Quiver(size_t(n), std::move(arrows));
    }

    /* Plain-text spec: first line "vertices n", then one "arrow i j" per
     * line (1-based vertex labels). */
    static Quiver from_stream(std::istream& in)
    {
        std::string word;
        size_t n = 0;
        if (!(in >> word) || word != "vertices" || !(in >> n))
            throw ConfigError("quiver file must start with 'vertices n'");
        std::vector<Arrow> arrows;
        while (in >> word) {
            if (word != "arrow")
                throw ConfigError("expected 'arrow i j', got '" + word + "'");
            size_t i = 0, j = 0;
            if (!(in >> i >> j) || i < 1 || j < 1 || i > n || j > n)
                throw ConfigError("bad arrow line in quiver file");
            arrows.push_back({i - 1, j - 1});
        }
        return Quiver(n, std::move(arrows));
    }

    static Quiver from_file(const std::string& path)
    {
        std::ifstream f(path);
        if (!f)
            throw ConfigError("cannot open quiver file '" + path + "'");
        return from_stream(f);
    }

    size_t vertex_count() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::string& dynkin_type() const { return type_; }

    /* Arrow indices of the unique directed path i -> j, if one exists.
     * The empty path exists exactly when i == j. */
    std::optional<std::vector<size_t>> path(size_t i, size_t j) const
    {
        std::vector<size_t> stack{i};
        std::vector<std::vector<size_t>> via(n_);
        std::vector<bool> seen(n_, false);
        seen[i] = true;
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            if (v == j)
                return via[v];
            for (size_t a = 0; a < arrows_.size(); ++a) {
                if (arrows_[a].src == v && !seen[arrows_[a].tgt]) {
                    seen[arrows_[a].tgt] = true;
                    via[arrows_[a].tgt] = via[v];
                    via[arrows_[a].tgt].push_back(a);
                    stack.push_back(arrows_[a].tgt);
                }
            }
        }
        return std::nullopt;
    }

private:
    void validate()
    {
        if (n_ == 0)
            throw ConfigError("quiver needs at least one vertex");
        if (arrows_.size() != n_ - 1)
            throw ConfigError("underlying graph is not a Dynkin tree "
                              "(edge count != n-1)");
        std::vector<size_t> deg(n_, 0);
        std::vector<std::vector<size_t>> adj(n_);
        for (const Arrow& a : arrows_) {
            if (a.src >= n_ || a.tgt >= n_ || a.src == a.tgt)
                throw ConfigError("bad arrow endpoints");
            ++deg[a.src];
            ++deg[a.tgt];
            adj[a.src].push_back(a.tgt);
            adj[a.tgt].push_back(a.src);
        }
        // connected?
        std::vector<bool> seen(n_, false);
        std::vector<size_t> stack{0};
        seen[0] = true;
        size_t cnt = 1;
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            for (size_t w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        if (cnt != n_)
            throw ConfigError("underlying graph is not connected");

        size_t branch = n_; // index of the unique degree-3 vertex, if any
        for (size_t v = 0; v < n_; ++v) {
            if (deg[v] > 3)
                throw ConfigError("vertex of degree > 3: not Dynkin A/D/E");
            if (deg[v] == 3) {
                if (branch != n_)
                    throw ConfigError("two branch vertices: not Dynkin A/D/E");
                branch = v;
            }
        }
        if (branch == n_) {
            type_ = "A" + std::to_string(n_);
            return;
        }
        // arm lengths from the branch vertex
        std::vector<size_t> arms;
        for (size_t w0 : adj[branch]) {
            size_t len = 1, prev = branch, v = w0;
            while (adj[v].size() == 2) {
                size_t next = adj[v][0] == prev ? adj[v][1] : adj[v][0];
                prev = v;
                v = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] != 1)
            throw ConfigError("not Dynkin A/D/E");
        if (arms[1] == 1) {
            type_ = "D" + std::to_string(n_);
        } else if (arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
            type_ = "E" + std::to_string(n_);
        } else {
            throw ConfigError("branch arms (" + std::to_string(arms[0]) + "," +
                              std::to_string(arms[1]) + "," +
                              std::to_string(arms[2]) +
                              ") are not Dynkin A/D/E; affine and wild types "
                              "are rejected");
        }
    }

    size_t n_;
    std::vector<Arrow> arrows_;
    std::string type_;
};

/* Hereditary Euler form <a,b> = sum_i a_i b_i - sum_{arrows i->j} a_i b_j. */
inline long euler_form(const Quiver& q, const std::vector<long>& a,
                       const std::vector<long>& b)
{
    long s = 0;
    for (size_t i = 0; i < q.vertex_count(); ++i)
        s += a[i] * b[i];
    for (const Arrow& ar : q.arrows())
        s -= a[ar.src] * b[ar.tgt];
    return s;
}

} // namespace hall2p
