// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCX_BITVEC_H
#define QCX_BITVEC_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcx {

/// Fixed-length bit vector packed into 64-bit words.
///
/// Bits beyond size() in the last word are kept at zero so that word-wise
/// comparisons and hashing are well defined.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t num_bits);

    /// Parses a string of '0'/'1' characters. Bit i is character i.
    static BitVec from_string(std::string_view bits);
    static BitVec from_indices(size_t num_bits, const std::vector<size_t> &indices);
    static BitVec ones(size_t num_bits);

    size_t size() const {
        return num_bits_;
    }
    bool get(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool value);
    void flip(size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    BitVec &operator|=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) {
        return a ^= b;
    }
    friend BitVec operator&(BitVec a, const BitVec &b) {
        return a &= b;
    }
    friend BitVec operator|(BitVec a, const BitVec &b) {
        return a |= b;
    }

    size_t popcount() const;
    bool any() const;
    bool none() const {
        return !any();
    }
    /// Parity of the AND of two equal-length vectors.
    bool dot(const BitVec &other) const;
    std::optional<size_t> first_set() const;
    std::vector<size_t> set_indices() const;

    /// Concatenation (this bits first).
    BitVec concat(const BitVec &tail) const;
    BitVec slice(size_t begin, size_t end) const;

    std::string str() const;
    size_t hash() const;

    const std::vector<uint64_t> &words() const {
        return words_;
    }

    bool operator==(const BitVec &other) const = default;
    /// Lexicographic order reading bit 0 first.
    std::strong_ordering operator<=>(const BitVec &other) const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitVecHash {
    size_t operator()(const BitVec &v) const {
        return v.hash();
    }
};

}  // namespace qcx

#endif
