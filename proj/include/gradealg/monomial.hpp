#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace gradealg {

/// Exponent vector over the ambient variables of a ring.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
        for (int e : exps_)
            if (e < 0) throw InputError("negative exponent");
        degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
    }

    static Monomial variable(std::size_t nvars, std::size_t index, int power = 1) {
        Monomial m(nvars);
        m.exps_[index] = power;
        m.degree_ = power;
        return m;
    }

    std::size_t size() const { return exps_.size(); }
    int operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }
    int degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }

    int degree_in(const std::vector<std::size_t>& vars) const {
        int d = 0;
        for (auto v : vars) d += exps_[v];
        return d;
    }

    long weighted_degree(const std::vector<int>& weights) const {
        long d = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i) d += long(weights[i]) * exps_[i];
        return d;
    }

    /// True when every variable with a positive exponent is in `allowed`.
    bool supported_in(const std::vector<bool>& allowed) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0 && !allowed[i]) return false;
        return true;
    }

    bool divides(const Monomial& other) const {
        if (degree_ > other.degree_) return false;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    bool coprime(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0 && other.exps_[i] != 0) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
        r.degree_ = a.degree_ + b.degree_;
        return r;
    }

    /// a / b; b must divide a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
        r.degree_ = a.degree_ - b.degree_;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.size());
        int d = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
            d += r.exps_[i];
        }
        r.degree_ = d;
        return r;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    /// Plain lexicographic comparison of exponent vectors, for containers only.
    bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

enum class OrderKind { grevlex, lex };

/// A monomial order made of consecutive blocks. Blocks are compared in
/// sequence; within a block the block's own kind decides. Variable `v` of a
/// block ranks above every later variable of the same block. A grevlex block
/// compares weighted degree first (weights default to 1).
class MonomialOrder {
public:
    struct Block {
        std::vector<std::size_t> vars;
        OrderKind kind = OrderKind::grevlex;
        bool operator==(const Block&) const = default;
    };

    MonomialOrder() = default;
    MonomialOrder(std::size_t nvars, std::vector<Block> blocks, std::vector<int> weights = {})
        : nvars_(nvars), blocks_(std::move(blocks)), weights_(std::move(weights)) {
        if (weights_.empty()) weights_.assign(nvars_, 1);
        std::vector<int> seen(nvars_, 0);
        for (const auto& b : blocks_)
            for (auto v : b.vars) {
                if (v >= nvars_) throw InputError("order block names a variable out of range");
                ++seen[v];
            }
        for (int s : seen)
            if (s != 1) throw InputError("order blocks must partition the variables");
        for (int w : weights_)
            if (w <= 0) throw InputError("order weights must be positive");
    }

    static MonomialOrder grevlex(std::size_t nvars, std::vector<int> weights = {}) {
        return MonomialOrder(nvars, {Block{iota(nvars), OrderKind::grevlex}}, std::move(weights));
    }
    static MonomialOrder lex(std::size_t nvars) {
        return MonomialOrder(nvars, {Block{iota(nvars), OrderKind::lex}});
    }
    /// Elimination order: every variable flagged in `front` ranks above the
    /// rest; grevlex inside each block.
    static MonomialOrder block(const std::vector<bool>& front, std::vector<int> weights = {}) {
        Block a{{}, OrderKind::grevlex}, b{{}, OrderKind::grevlex};
        for (std::size_t v = 0; v < front.size(); ++v) (front[v] ? a : b).vars.push_back(v);
        std::vector<Block> blocks;
        if (!a.vars.empty()) blocks.push_back(std::move(a));
        if (!b.vars.empty()) blocks.push_back(std::move(b));
        return MonomialOrder(front.size(), std::move(blocks), std::move(weights));
    }

    std::size_t nvars() const { return nvars_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    const std::vector<int>& weights() const { return weights_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        for (const auto& blk : blocks_) {
            if (blk.kind == OrderKind::lex) {
                for (auto v : blk.vars)
                    if (a[v] != b[v]) return a[v] <=> b[v];
            } else {
                long da = 0, db = 0;
                for (auto v : blk.vars) {
                    da += long(weights_[v]) * a[v];
                    db += long(weights_[v]) * b[v];
                }
                if (da != db) return da <=> db;
                for (auto it = blk.vars.rbegin(); it != blk.vars.rend(); ++it)
                    if (a[*it] != b[*it]) return b[*it] <=> a[*it];
            }
        }
        return std::strong_ordering::equal;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    /// Degree used by the pair-selection strategy.
    long selection_degree(const Monomial& m) const { return m.weighted_degree(weights_); }

    bool operator==(const MonomialOrder&) const = default;

    std::string key() const {
        std::string k;
        for (const auto& b : blocks_) {
            k += b.kind == OrderKind::lex ? 'L' : 'G';
            for (auto v : b.vars) k += std::to_string(v) + ',';
            k += '|';
        }
        for (int w : weights_) k += std::to_string(w) + ',';
        return k;
    }

private:
    static std::vector<std::size_t> iota(std::size_t n) {
        std::vector<std::size_t> v(n);
        std::iota(v.begin(), v.end(), std::size_t{0});
        return v;
    }

    std::size_t nvars_ = 0;
    std::vector<Block> blocks_;
    std::vector<int> weights_;
};

}  // namespace gradealg
