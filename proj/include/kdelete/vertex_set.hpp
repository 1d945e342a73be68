#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <stdexcept>
#include <vector>

namespace kdelete {

using Vertex = std::uint32_t;

/// Subset of {0..universe-1} stored as a packed bit-set.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
        : VertexSet(universe) {
        for (Vertex v : members) insert(v);
    }
    VertexSet(std::size_t universe, std::span<const Vertex> members)
        : VertexSet(universe) {
        for (Vertex v : members) insert(v);
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    void insert(Vertex v) {
        check(v);
        words_[v >> 6] |= bit(v);
    }
    void erase(Vertex v) {
        check(v);
        words_[v >> 6] &= ~bit(v);
    }
    bool contains(Vertex v) const noexcept {
        return v < universe_ && (words_[v >> 6] & bit(v)) != 0;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// |this ∩ other| without materializing the intersection.
    std::size_t intersection_count(const VertexSet& other) const {
        same_universe(other);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }
    bool intersects(const VertexSet& other) const {
        same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& other) const {
        same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    VertexSet complement() const {
        VertexSet c(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
        c.trim();
        return c;
    }

    /// Smallest member >= from, or universe() if none.
    std::size_t next(std::size_t from) const noexcept {
        if (from >= universe_) return universe_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return universe_;
            w = words_[wi];
        }
    }

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        const_iterator() = default;
        const_iterator(const VertexSet* s, std::size_t pos) : set_(s), pos_(pos) {}
        Vertex operator*() const { return static_cast<Vertex>(pos_); }
        const_iterator& operator++() {
            pos_ = set_->next(pos_ + 1);
            return *this;
        }
        const_iterator operator++(int) {
            auto t = *this;
            ++*this;
            return t;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b) {
            return a.pos_ == b.pos_;
        }

    private:
        const VertexSet* set_ = nullptr;
        std::size_t pos_ = 0;
    };

    const_iterator begin() const { return {this, next(0)}; }
    const_iterator end() const { return {this, universe_}; }

    std::vector<Vertex> members() const { return {begin(), end()}; }

private:
    static std::uint64_t bit(Vertex v) noexcept { return std::uint64_t{1} << (v & 63); }
    void check(Vertex v) const {
        if (v >= universe_) throw std::out_of_range("vertex outside set universe");
    }
    void same_universe(const VertexSet& o) const {
        if (o.universe_ != universe_) throw std::invalid_argument("vertex sets over different universes");
    }
    void trim() {
        if (universe_ & 63) words_.back() &= (std::uint64_t{1} << (universe_ & 63)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace kdelete
