// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcx/bitvec.h"

#include <bit>
#include <stdexcept>

namespace qcx {

BitVec::BitVec(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec out(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            out.flip(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string contains a character other than 0 or 1");
        }
    }
    return out;
}

BitVec BitVec::from_indices(size_t num_bits, const std::vector<size_t> &indices) {
    BitVec out(num_bits);
    for (size_t i : indices) {
        if (i >= num_bits) {
            throw std::out_of_range("bit index out of range");
        }
        out.set(i, true);
    }
    return out;
}

BitVec BitVec::ones(size_t num_bits) {
    BitVec out(num_bits);
    for (size_t i = 0; i < num_bits; i++) {
        out.set(i, true);
    }
    return out;
}

void BitVec::set(size_t i, bool value) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

BitVec &BitVec::operator^=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("bit vector length mismatch");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("bit vector length mismatch");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator|=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("bit vector length mismatch");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

size_t BitVec::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

bool BitVec::dot(const BitVec &other) const {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("bit vector length mismatch");
    }
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

std::optional<size_t> BitVec::first_set() const {
    for (size_t k = 0; k < words_.size(); k++) {
        if (words_[k]) {
            return k * 64 + std::countr_zero(words_[k]);
        }
    }
    return std::nullopt;
}

std::vector<size_t> BitVec::set_indices() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w) {
            out.push_back(k * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

BitVec BitVec::concat(const BitVec &tail) const {
    BitVec out(num_bits_ + tail.num_bits_);
    for (size_t i : set_indices()) {
        out.flip(i);
    }
    for (size_t i : tail.set_indices()) {
        out.flip(num_bits_ + i);
    }
    return out;
}

BitVec BitVec::slice(size_t begin, size_t end) const {
    if (begin > end || end > num_bits_) {
        throw std::out_of_range("bad slice");
    }
    BitVec out(end - begin);
    for (size_t i = begin; i < end; i++) {
        if (get(i)) {
            out.flip(i - begin);
        }
    }
    return out;
}

std::string BitVec::str() const {
    std::string out(num_bits_, '0');
    for (size_t i = 0; i < num_bits_; i++) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

size_t BitVec::hash() const {
    // FNV-1a over the words.
    uint64_t h = 1469598103934665603ULL ^ num_bits_;
    for (uint64_t w : words_) {
        h ^= w;
        h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
}

std::strong_ordering BitVec::operator<=>(const BitVec &other) const {
    if (num_bits_ != other.num_bits_) {
        return num_bits_ <=> other.num_bits_;
    }
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t diff = words_[k] ^ other.words_[k];
        if (diff) {
            uint64_t low = diff & (~diff + 1);
            // The vector holding the first differing bit sorts later.
            return (words_[k] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace qcx
