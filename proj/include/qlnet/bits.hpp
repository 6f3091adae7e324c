// Copyright 2026 The qlnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QLNET_BITS_HPP
#define QLNET_BITS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qlnet {

/// Fixed-size vector of bits packed into 64-bit words.
///
/// Used both for spin configurations (bit 1 <-> spin +1) and for
/// difference masks. Word 0 holds bits 0..63 with bit i at position i % 64.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    size_t size() const { return size_; }

    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(size_t i, bool v) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    size_t popcount() const {
        size_t c = 0;
        for (uint64_t w : words_) {
            c += static_cast<size_t>(std::popcount(w));
        }
        return c;
    }

    BitVec &operator^=(const BitVec &other) {
        for (size_t i = 0; i < words_.size(); i++) {
            words_[i] ^= other.words_[i];
        }
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec &b) {
        a ^= b;
        return a;
    }

    bool operator==(const BitVec &other) const {
        return size_ == other.size_ && words_ == other.words_;
    }
    bool operator!=(const BitVec &other) const { return !(*this == other); }

    bool any() const {
        for (uint64_t w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }

    /// Bits as a left-to-right string, position 0 first.
    std::string to_string() const {
        std::string s(size_, '0');
        for (size_t i = 0; i < size_; i++) {
            if (get(i)) {
                s[i] = '1';
            }
        }
        return s;
    }

    /// Lowercase hex, least significant nibble holds bits 0..3.
    std::string to_hex() const {
        static const char digits[] = "0123456789abcdef";
        size_t nibbles = (size_ + 3) / 4;
        std::string s;
        for (size_t k = nibbles; k-- > 0;) {
            unsigned v = 0;
            for (size_t b = 0; b < 4; b++) {
                size_t i = 4 * k + b;
                if (i < size_ && get(i)) {
                    v |= 1u << b;
                }
            }
            s.push_back(digits[v]);
        }
        return s.empty() ? "0" : s;
    }

    const std::vector<uint64_t> &words() const { return words_; }

    size_t hash() const {
        // FNV-1a over the words, good enough for cycle detection tables.
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h ^ size_);
    }

  private:
    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

struct BitVecHash {
    size_t operator()(const BitVec &b) const { return b.hash(); }
};

}  // namespace qlnet

#endif
