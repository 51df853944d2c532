#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace latrep {

// Bit-indexed subset of a fixed universe [0, n).  The universe is the element
// range of the owning poset or lattice; all set algebra is word-parallel.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int universe) : n_(universe), w_(words_for(universe), 0) {}

  static Subset full(int universe) {
    Subset s(universe);
    for (std::size_t i = 0; i < s.w_.size(); ++i) s.w_[i] = ~0ull;
    s.trim();
    return s;
  }
  static Subset single(int universe, int i) {
    Subset s(universe);
    s.set(i);
    return s;
  }
  static Subset of(int universe, std::initializer_list<int> members) {
    Subset s(universe);
    for (int i : members) s.set(i);
    return s;
  }

  int universe_size() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[static_cast<std::size_t>(i) >> 6] &= ~(1ull << (i & 63));
  }
  void flip(int i) {
    assert(i >= 0 && i < n_);
    w_[static_cast<std::size_t>(i) >> 6] ^= 1ull << (i & 63);
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (std::uint64_t w : w_)
      if (w) return false;
    return true;
  }
  bool is_full() const { return count() == n_; }

  Subset operator&(const Subset& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a & b; }); }
  Subset operator|(const Subset& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a | b; }); }
  Subset operator^(const Subset& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a ^ b; }); }
  Subset minus(const Subset& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a & ~b; }); }
  Subset complement() const {
    Subset r = *this;
    for (auto& w : r.w_) w = ~w;
    r.trim();
    return r;
  }

  bool is_subset_of(const Subset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Subset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool operator==(const Subset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Subset& o) const { return !(*this == o); }

  // Member-sequence lexicographic order: the set owning the lowest index on
  // which the two sets disagree is the smaller one.
  bool lex_less(const Subset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t d = w_[i] ^ o.w_[i];
      if (d) return (w_[i] >> std::countr_zero(d)) & 1u;
    }
    return false;
  }

  int first() const { return next(-1); }
  // Smallest member > i, or -1.
  int next(int i) const {
    for (int j = i + 1; j < n_;) {
      std::uint64_t w = w_[static_cast<std::size_t>(j) >> 6] >> (j & 63);
      if (w) return j + std::countr_zero(w);
      j = ((j >> 6) + 1) << 6;
    }
    return -1;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool sep = false;
    for (int i = first(); i >= 0; i = next(i)) {
      if (sep) s += ",";
      s += std::to_string(i);
      sep = true;
    }
    return s + "}";
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : w_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  static std::size_t words_for(int n) { return static_cast<std::size_t>(n + 63) / 64; }
  void trim() {
    if (n_ & 63) w_.back() &= (1ull << (n_ & 63)) - 1;
  }
  template <class F>
  Subset zip(const Subset& o, F f) const {
    assert(n_ == o.n_);
    Subset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = f(w_[i], o.w_[i]);
    return r;
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

// Canonical report order: cardinality first, then member-sequence lex.
inline bool canonical_less(const Subset& a, const Subset& b) {
  int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.lex_less(b);
}

}  // namespace latrep
