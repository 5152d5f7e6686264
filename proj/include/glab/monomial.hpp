#pragma once

#include <functional>
#include <string>
#include <vector>

#include "glab/complex.hpp"

namespace glab {

// monomial on the vertex variables; support must be kept a face by callers
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<VertexId, int>> e) : e_(std::move(e)) {
        normalize();
    }
    static Monomial unit() { return Monomial(); }
    static Monomial of_face(const Face& f) {
        std::vector<std::pair<VertexId, int>> e;
        for (VertexId v : f) e.emplace_back(v, 1);
        return Monomial(std::move(e));
    }
    static Monomial of_vertex(VertexId v, int exp = 1) {
        return Monomial({{v, exp}});
    }

    int degree() const {
        int d = 0;
        for (auto& [v, e] : e_) d += e;
        return d;
    }
    Face support() const {
        std::vector<VertexId> vs;
        for (auto& [v, e] : e_) vs.push_back(v);
        return Face(std::move(vs));
    }
    int exp(VertexId v) const {
        for (auto& [u, e] : e_)
            if (u == v) return e;
        return 0;
    }
    bool square_free() const {
        for (auto& [v, e] : e_)
            if (e > 1) return false;
        return true;
    }
    const std::vector<std::pair<VertexId, int>>& exponents() const { return e_; }

    Monomial times(const Monomial& o) const {
        std::vector<std::pair<VertexId, int>> r;
        auto i = e_.begin();
        auto j = o.e_.begin();
        while (i != e_.end() && j != o.e_.end()) {
            if (i->first < j->first)
                r.push_back(*i++);
            else if (i->first > j->first)
                r.push_back(*j++);
            else {
                r.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        r.insert(r.end(), i, e_.end());
        r.insert(r.end(), j, o.e_.end());
        Monomial m;
        m.e_ = std::move(r);
        return m;
    }
    Monomial times_vertex(VertexId v) const { return times(of_vertex(v)); }
    // divide by x_v once; exponent must be positive
    Monomial div_vertex(VertexId v) const {
        Monomial m = *this;
        for (auto it = m.e_.begin(); it != m.e_.end(); ++it) {
            if (it->first == v) {
                if (--it->second == 0) m.e_.erase(it);
                return m;
            }
        }
        throw std::invalid_argument("division by absent vertex variable");
    }

    // order: support lexicographically, then exponent vector
    bool operator<(const Monomial& o) const {
        std::vector<VertexId> sa, sb;
        for (auto& [v, e] : e_) sa.push_back(v);
        for (auto& [v, e] : o.e_) sb.push_back(v);
        if (sa != sb) return sa < sb;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i].second != o.e_[i].second) return e_[i].second < o.e_[i].second;
        return false;
    }
    bool operator==(const Monomial& o) const { return e_ == o.e_; }

    std::string to_string() const {
        if (e_.empty()) return "1";
        std::string s;
        for (auto& [v, e] : e_) {
            if (!s.empty()) s += "*";
            s += "x" + std::to_string(v);
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    void normalize() {
        std::sort(e_.begin(), e_.end());
        for (auto& [v, e] : e_)
            if (e <= 0) throw std::invalid_argument("nonpositive exponent");
    }
    std::vector<std::pair<VertexId, int>> e_;
};

// all degree-m monomials whose support is a face, in the fixed order
inline std::vector<Monomial> monomials_of_degree(const SimplicialComplex& cx, int m) {
    if (m < 0) return {};
    if (m == 0) return {Monomial::unit()};
    std::vector<Monomial> out;
    for (int k = 0; k < m && k <= cx.dim(); ++k) {
        for (auto& f : cx.faces_of_dim(k)) {
            // compositions of m into k+1 positive parts
            const auto& vs = f.vertices();
            std::vector<int> e(vs.size(), 1);
            int rest = m - (int)vs.size();
            if (rest < 0) continue;
            std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
                if (i + 1 == e.size()) {
                    std::vector<std::pair<VertexId, int>> t;
                    for (std::size_t j = 0; j < vs.size(); ++j)
                        t.emplace_back(vs[j], e[j]);
                    t.back().second += left;
                    out.emplace_back(std::move(t));
                    return;
                }
                for (int take = 0; take <= left; ++take) {
                    e[i] += take;
                    rec(i + 1, left - take);
                    e[i] -= take;
                }
            };
            rec(0, rest);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace glab
