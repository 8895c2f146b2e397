#ifndef OGC_VERTEX_SET_HPP
#define OGC_VERTEX_SET_HPP

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace ogc {

/// Subset of {0, ..., n-1} with dense bitset storage and exact set algebra.
/// All operands of a binary operation must share the same universe size.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe_size)
        : n_(universe_size), bits_((universe_size + 63) / 64, 0) {}

    VertexSet(int universe_size, std::initializer_list<int> members)
        : VertexSet(universe_size) {
        for (int v : members) add(v);
    }

    static VertexSet full(int universe_size) {
        VertexSet s(universe_size);
        for (std::size_t w = 0; w < s.bits_.size(); ++w) s.bits_[w] = ~0ULL;
        s.trim();
        return s;
    }

    static VertexSet of(int universe_size, const std::vector<int>& members) {
        VertexSet s(universe_size);
        for (int v : members) s.add(v);
        return s;
    }

    int universe_size() const { return n_; }

    bool contains(int v) const {
        assert(v >= 0 && v < n_);
        return (bits_[v >> 6] >> (v & 63)) & 1ULL;
    }

    void add(int v) {
        assert(v >= 0 && v < n_);
        bits_[v >> 6] |= 1ULL << (v & 63);
    }

    void remove(int v) {
        assert(v >= 0 && v < n_);
        bits_[v >> 6] &= ~(1ULL << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : bits_) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : bits_) {
            if (w) return false;
        }
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }

    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet r = full(n_);
        r -= *this;
        return r;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i] & ~o.bits_[i]) return false;
        }
        return true;
    }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i] & o.bits_[i]) return true;
        }
        return false;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    /// Members in ascending order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::size_t w = 0; w < bits_.size(); ++w) {
            uint64_t word = bits_[w];
            while (word) {
                int b = __builtin_ctzll(word);
                out.push_back(static_cast<int>(w << 6) + b);
                word &= word - 1;
            }
        }
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < bits_.size(); ++w) {
            uint64_t word = bits_[w];
            while (word) {
                int b = __builtin_ctzll(word);
                fn(static_cast<int>(w << 6) + b);
                word &= word - 1;
            }
        }
    }

    /// Smallest member, or -1 if empty.
    int first() const {
        for (std::size_t w = 0; w < bits_.size(); ++w) {
            if (bits_[w]) return static_cast<int>(w << 6) + __builtin_ctzll(bits_[w]);
        }
        return -1;
    }

    /// "[a,b,c]" with members ascending.
    std::string to_string() const {
        std::string s = "[";
        bool first_member = true;
        for (int v : to_vector()) {
            if (!first_member) s += ",";
            s += std::to_string(v);
            first_member = false;
        }
        s += "]";
        return s;
    }

private:
    void trim() {
        int rem = n_ & 63;
        if (rem != 0 && !bits_.empty()) bits_.back() &= (1ULL << rem) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> bits_;
};

}  // namespace ogc

#endif
