#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "glab/errors.hpp"
#include "glab/gf2k.hpp"

namespace glab {

// process-wide registry of indeterminate names (append-only)
class VarTable {
public:
    static uint32_t id_of(const std::string& name) {
        auto& t = instance();
        std::lock_guard<std::mutex> lk(t.mu_);
        auto it = t.ids_.find(name);
        if (it != t.ids_.end()) return it->second;
        uint32_t id = (uint32_t)t.names_.size();
        t.names_.push_back(name);
        t.ids_.emplace(name, id);
        return id;
    }
    static std::string name_of(uint32_t id) {
        auto& t = instance();
        std::lock_guard<std::mutex> lk(t.mu_);
        return t.names_.at(id);
    }
    static uint32_t count() {
        auto& t = instance();
        std::lock_guard<std::mutex> lk(t.mu_);
        return (uint32_t)t.names_.size();
    }

private:
    static VarTable& instance() {
        static VarTable t;
        return t;
    }
    std::mutex mu_;
    std::vector<std::string> names_;
    std::map<std::string, uint32_t> ids_;
};

// exponent vector, sorted by variable id, exponents >= 1
using Mono = std::vector<std::pair<uint32_t, uint32_t>>;

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    r.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
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
    r.insert(r.end(), i, a.end());
    r.insert(r.end(), j, b.end());
    return r;
}

inline long mono_degree(const Mono& m) {
    long d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

// Sparse multivariate polynomial over GF(2): a set of monomials.
class F2Poly {
public:
    static inline std::size_t term_budget = 200000;

    F2Poly() = default;

    static F2Poly zero() { return F2Poly(); }
    static F2Poly one() {
        F2Poly p;
        p.terms_.insert(Mono{});
        return p;
    }
    static F2Poly var(uint32_t id, uint32_t exp = 1) {
        F2Poly p;
        p.terms_.insert(Mono{{id, exp}});
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::set<Mono>& terms() const { return terms_; }

    long total_degree() const {
        long d = 0;
        for (auto& m : terms_) d = std::max(d, mono_degree(m));
        return d;
    }

    void toggle(const Mono& m) {
        bool clean = true;
        for (auto& [v, e] : m)
            if (e == 0) clean = false;
        if (!clean) {
            Mono n;
            for (auto& [v, e] : m)
                if (e > 0) n.emplace_back(v, e);
            toggle(n);
            return;
        }
        auto it = terms_.find(m);
        if (it != terms_.end())
            terms_.erase(it);
        else
            terms_.insert(m);
    }

    F2Poly operator+(const F2Poly& o) const {
        F2Poly r = *this;
        for (auto& m : o.terms_) r.toggle(m);
        r.check_budget();
        return r;
    }
    F2Poly& operator+=(const F2Poly& o) { return *this = *this + o; }

    F2Poly operator*(const F2Poly& o) const {
        F2Poly r;
        for (auto& a : terms_)
            for (auto& b : o.terms_) r.toggle(mono_mul(a, b));
        r.check_budget();
        return r;
    }
    F2Poly& operator*=(const F2Poly& o) { return *this = *this * o; }

    bool operator==(const F2Poly& o) const { return terms_ == o.terms_; }

    // formal partial derivative: e*x^(e-1) with e taken mod 2
    F2Poly derivative(uint32_t var) const {
        F2Poly r;
        for (auto& m : terms_) {
            auto it = std::find_if(m.begin(), m.end(),
                                   [&](auto& p) { return p.first == var; });
            if (it == m.end() || it->second % 2 == 0) continue;
            Mono n = m;
            auto jt = n.begin() + (it - m.begin());
            if (jt->second == 1)
                n.erase(jt);
            else
                jt->second -= 1;
            r.toggle(n);
        }
        return r;
    }

    template <class F>
    F eval(std::span<const F> assignment) const {
        F acc = F::zero();
        for (auto& m : terms_) {
            F t = F::one();
            for (auto& [v, e] : m) {
                if (v >= assignment.size())
                    throw std::out_of_range("indeterminate without assigned value: " +
                                            VarTable::name_of(v));
                t *= field_pow(assignment[v], (long)e);
            }
            acc += t;
        }
        return acc;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto& m : terms_) {
            if (!s.empty()) s += " + ";
            if (m.empty()) {
                s += "1";
                continue;
            }
            bool first = true;
            for (auto& [v, e] : m) {
                if (!first) s += "*";
                first = false;
                s += VarTable::name_of(v);
                if (e > 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    void check_budget() const {
        if (terms_.size() > term_budget)
            throw term_budget_exceeded("polynomial exceeds " +
                                       std::to_string(term_budget) + " terms");
    }
    std::set<Mono> terms_;
};

// Rational function over GF(2) as an unreduced fraction; equality by
// cross-multiplication, no gcd normalization.
class RatFn {
public:
    RatFn() : num_(), den_(F2Poly::one()) {}
    RatFn(F2Poly num, F2Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw division_by_zero("rational function with zero denominator");
    }

    static RatFn zero() { return RatFn(); }
    static RatFn one() { return RatFn(F2Poly::one(), F2Poly::one()); }
    static RatFn var(const std::string& name) {
        return RatFn(F2Poly::var(VarTable::id_of(name)), F2Poly::one());
    }

    const F2Poly& num() const { return num_; }
    const F2Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_invertible() const { return !num_.is_zero(); }

    RatFn operator+(const RatFn& o) const {
        if (num_.is_zero()) return o;
        if (o.num_.is_zero()) return *this;
        if (den_ == o.den_) return RatFn(num_ + o.num_, den_);
        return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn operator-(const RatFn& o) const { return *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this + o; }

    RatFn operator*(const RatFn& o) const {
        if (num_.is_zero() || o.num_.is_zero()) return zero();
        return RatFn(num_ * o.num_, den_ * o.den_);
    }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }

    RatFn squared() const { return *this * *this; }

    RatFn inverse() const {
        if (num_.is_zero()) throw division_by_zero("inverse of zero rational function");
        return RatFn(den_, num_);
    }

    bool operator==(const RatFn& o) const {
        return (num_ * o.den_ + o.num_ * den_).is_zero();
    }

    // formal quotient rule (signs vanish in characteristic 2)
    RatFn derivative(uint32_t var) const {
        return RatFn(num_.derivative(var) * den_ + num_ * den_.derivative(var),
                     den_ * den_);
    }

    template <class F>
    F specialize(std::span<const F> assignment) const {
        F d = den_.eval(assignment);
        if (d.is_zero()) throw pole_hit("denominator vanishes at specialization");
        return num_.eval(assignment) * d.inverse();
    }

    std::string to_string() const {
        if (num_.is_zero()) return "0";
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

private:
    F2Poly num_, den_;
};

} // namespace glab
