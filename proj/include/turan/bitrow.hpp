#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace turan {

/// Fixed-length bit vector used for adjacency rows and candidate domains.
class BitRow {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitRow() = default;
    explicit BitRow(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void set_all() noexcept
    {
        for (auto& w : words_)
            w = ~std::uint64_t{0};
        trim();
    }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const noexcept
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    std::size_t intersection_count(const BitRow& other) const noexcept
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    BitRow& operator&=(const BitRow& other) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    BitRow& operator|=(const BitRow& other) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    /// Clears every bit that is set in `other`.
    BitRow& subtract(const BitRow& other) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    std::size_t find_first() const noexcept { return find_from(0); }
    std::size_t find_next(std::size_t i) const noexcept { return find_from(i + 1); }

    friend bool operator==(const BitRow&, const BitRow&) = default;

private:
    std::size_t find_from(std::size_t i) const noexcept
    {
        if (i >= size_)
            return npos;
        std::size_t w = i >> 6;
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (word)
                return (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
            if (++w == words_.size())
                return npos;
            word = words_[w];
        }
    }

    void trim() noexcept
    {
        if (size_ & 63)
            words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

inline BitRow operator&(BitRow a, const BitRow& b) noexcept { return a &= b; }

template <typename Fn>
void for_each_set_bit(const BitRow& row, Fn&& fn)
{
    for (auto i = row.find_first(); i != BitRow::npos; i = row.find_next(i))
        fn(i);
}

} // namespace turan
