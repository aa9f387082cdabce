#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgdom {

// Subset of {0, ..., universe-1} packed into 64-bit words.
// All iteration runs in ascending vertex order, so downstream output
// (witnesses, reports) is deterministic.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
        for (int v : members) add(v);
    }

    int universe() const { return universe_; }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool contains(int v) const {
        check_range(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        check_range(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        check_range(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) s += ' ';
            s += std::to_string(v);
            first = false;
        });
        s += '}';
        return s;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet&) const = default;

    bool is_subset_of(const VertexSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(static_cast<int>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

private:
    void check_range(int v) const {
        if (v < 0 || v >= universe_)
            throw std::out_of_range("VertexSet: vertex " + std::to_string(v) +
                                    " outside universe of size " + std::to_string(universe_));
    }

    void check_same(const VertexSet& o) const {
        if (universe_ != o.universe_)
            throw std::invalid_argument("VertexSet: universe mismatch (" + std::to_string(universe_) +
                                        " vs " + std::to_string(o.universe_) + ")");
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace mgdom
