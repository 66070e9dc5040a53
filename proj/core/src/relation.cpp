#include "lattol/relation.hpp"

#include <bit>
#include <string>

#include "lattol/errors.hpp"

namespace lattol {

BinaryRelation::BinaryRelation(int n)
    : n_(n),
      words_per_row_((n + 63) / 64),
      words_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {
  if (n < 0) {
    throw IndexOutOfRange("relation size must be nonnegative, got " + std::to_string(n));
  }
}

BinaryRelation BinaryRelation::diagonal(int n) {
  BinaryRelation r(n);
  for (int x = 0; x < n; ++x) {
    r.add(x, x);
  }
  return r;
}

BinaryRelation BinaryRelation::full(int n) {
  BinaryRelation r(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      r.add(x, y);
    }
  }
  return r;
}

void BinaryRelation::check_index(int x, int y) const {
  if (x < 0 || x >= n_ || y < 0 || y >= n_) {
    throw IndexOutOfRange("pair (" + std::to_string(x) + ", " + std::to_string(y) +
                          ") out of range for a relation on " + std::to_string(n_) +
                          " elements");
  }
}

bool BinaryRelation::contains(int x, int y) const {
  check_index(x, y);
  return (row(x)[y / 64] >> (y % 64)) & 1u;
}

void BinaryRelation::add(int x, int y) {
  check_index(x, y);
  row(x)[y / 64] |= std::uint64_t{1} << (y % 64);
}

void BinaryRelation::add_symmetric(int x, int y) {
  add(x, y);
  add(y, x);
}

void BinaryRelation::remove(int x, int y) {
  check_index(x, y);
  row(x)[y / 64] &= ~(std::uint64_t{1} << (y % 64));
}

bool BinaryRelation::is_reflexive() const {
  for (int x = 0; x < n_; ++x) {
    if (!((row(x)[x / 64] >> (x % 64)) & 1u)) {
      return false;
    }
  }
  return true;
}

bool BinaryRelation::is_symmetric() const {
  for (int x = 0; x < n_; ++x) {
    for (int y = x + 1; y < n_; ++y) {
      if (((row(x)[y / 64] >> (y % 64)) & 1u) != ((row(y)[x / 64] >> (x % 64)) & 1u)) {
        return false;
      }
    }
  }
  return true;
}

bool BinaryRelation::is_transitive() const {
  // (x,y) in R requires row(y) subset of row(x).
  for (int x = 0; x < n_; ++x) {
    const std::uint64_t* rx = row(x);
    for (int y = 0; y < n_; ++y) {
      if (!((rx[y / 64] >> (y % 64)) & 1u)) {
        continue;
      }
      const std::uint64_t* ry = row(y);
      for (int w = 0; w < words_per_row_; ++w) {
        if (ry[w] & ~rx[w]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::size_t BinaryRelation::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

bool BinaryRelation::subset_of(const BinaryRelation& other) const {
  if (n_ != other.n_) {
    throw SizeMismatch("subset test between relations on " + std::to_string(n_) + " and " +
                       std::to_string(other.n_) + " elements");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) {
      return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> BinaryRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x) {
    const std::uint64_t* rx = row(x);
    for (int w = 0; w < words_per_row_; ++w) {
      std::uint64_t bits = rx[w];
      while (bits) {
        int y = w * 64 + std::countr_zero(bits);
        out.emplace_back(x, y);
        bits &= bits - 1;
      }
    }
  }
  return out;
}

std::vector<std::pair<int, int>> BinaryRelation::upper_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (auto [x, y] : pairs()) {
    if (x < y) {
      out.emplace_back(x, y);
    }
  }
  return out;
}

void BinaryRelation::close_transitively() {
  for (int x = 0; x < n_; ++x) {
    add(x, x);
  }
  for (int k = 0; k < n_; ++k) {
    const std::uint64_t* rk = row(k);
    for (int x = 0; x < n_; ++x) {
      if (!((row(x)[k / 64] >> (k % 64)) & 1u)) {
        continue;
      }
      std::uint64_t* rx = row(x);
      for (int w = 0; w < words_per_row_; ++w) {
        rx[w] |= rk[w];
      }
    }
  }
}

bool operator<(const BinaryRelation& a, const BinaryRelation& b) {
  if (a.n_ != b.n_) {
    return a.n_ < b.n_;
  }
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff) {
      // Lowest differing bit is the earliest column; absent sorts first.
      int bit = std::countr_zero(diff);
      return !((a.words_[i] >> bit) & 1u);
    }
  }
  return false;
}

BinaryRelation& BinaryRelation::operator&=(const BinaryRelation& other) {
  if (n_ != other.n_) {
    throw SizeMismatch("intersection of relations on " + std::to_string(n_) + " and " +
                       std::to_string(other.n_) + " elements");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] &= other.words_[i];
  }
  return *this;
}

}  // namespace lattol
