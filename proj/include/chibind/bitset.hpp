#pragma once

// Bit rows used for adjacency and vertex sets.  Rows of up to 64 bits live in
// a single inline word; longer rows fall back to heap storage.  Binary
// operations require operands of equal size.

#include <cstdint>
#include <bit>
#include <stdexcept>
#include <vector>

namespace chibind {

class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int nbits) : nbits_(nbits) {
        if (nbits < 0) throw std::invalid_argument("Bitset: negative size");
        if (nbits_ > 64) heap_.assign(word_count(), 0);
    }

    int size() const { return nbits_; }

    bool test(int i) const {
        check(i);
        return (word(i >> 6) >> (i & 63)) & 1u;
    }

    void set(int i) {
        check(i);
        word(i >> 6) |= (std::uint64_t{1} << (i & 63));
    }

    void reset(int i) {
        check(i);
        word(i >> 6) &= ~(std::uint64_t{1} << (i & 63));
    }

    void set_all() {
        for (int w = 0; w < word_count(); ++w) word(w) = ~std::uint64_t{0};
        trim();
    }

    void clear() {
        for (int w = 0; w < word_count(); ++w) word(w) = 0;
    }

    // Flips every bit in range; trailing bits stay zero.
    void flip_all() {
        for (int w = 0; w < word_count(); ++w) word(w) = ~word(w);
        trim();
    }

    int count() const {
        int c = 0;
        for (int w = 0; w < word_count(); ++w) c += std::popcount(word(w));
        return c;
    }

    bool any() const {
        for (int w = 0; w < word_count(); ++w)
            if (word(w)) return true;
        return false;
    }

    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        match(o);
        for (int w = 0; w < word_count(); ++w) word(w) &= o.word(w);
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        match(o);
        for (int w = 0; w < word_count(); ++w) word(w) |= o.word(w);
        return *this;
    }

    // this &= ~o
    Bitset& and_not(const Bitset& o) {
        match(o);
        for (int w = 0; w < word_count(); ++w) word(w) &= ~o.word(w);
        return *this;
    }

    bool intersects(const Bitset& o) const {
        match(o);
        for (int w = 0; w < word_count(); ++w)
            if (word(w) & o.word(w)) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        match(o);
        for (int w = 0; w < word_count(); ++w)
            if (word(w) & ~o.word(w)) return false;
        return true;
    }

    bool operator==(const Bitset& o) const {
        if (nbits_ != o.nbits_) return false;
        for (int w = 0; w < word_count(); ++w)
            if (word(w) != o.word(w)) return false;
        return true;
    }

    // First set bit with index >= from, or -1.
    int next(int from) const {
        if (from < 0) from = 0;
        if (from >= nbits_) return -1;
        int w = from >> 6;
        std::uint64_t cur = word(w) & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return (w << 6) + std::countr_zero(cur);
            if (++w >= word_count()) return -1;
            cur = word(w);
        }
    }

    int first() const { return next(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = next(0); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

    static Bitset of(int nbits, const std::vector<int>& members) {
        Bitset b(nbits);
        for (int v : members) b.set(v);
        return b;
    }

private:
    int word_count() const { return nbits_ <= 64 ? (nbits_ > 0 ? 1 : 0) : (nbits_ + 63) / 64; }

    std::uint64_t word(int w) const { return nbits_ <= 64 ? inline_word_ : heap_[w]; }
    std::uint64_t& word(int w) { return nbits_ <= 64 ? inline_word_ : heap_[w]; }

    void check(int i) const {
        if (i < 0 || i >= nbits_) throw std::out_of_range("Bitset: index out of range");
    }

    void match(const Bitset& o) const {
        if (nbits_ != o.nbits_) throw std::invalid_argument("Bitset: size mismatch");
    }

    void trim() {
        if (nbits_ == 0) return;
        int rem = nbits_ & 63;
        if (rem) word(word_count() - 1) &= ~std::uint64_t{0} >> (64 - rem);
    }

    int nbits_ = 0;
    std::uint64_t inline_word_ = 0;
    std::vector<std::uint64_t> heap_;
};

}  // namespace chibind
