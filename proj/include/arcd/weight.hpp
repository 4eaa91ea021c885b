#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace arcd {

inline constexpr int kMaxN = 24;

// A weight: n up/down labels, evenly many ups. Position j (0-based) sits at
// x-coordinate j + 1/2 in the pictures; all code works with the integer j.
class Weight {
 public:
  Weight() = default;  // the empty weight (n = 0)
  Weight(int n, uint32_t up_bits);
  static Weight parse(const std::string& text);

  int size() const { return n_; }
  bool up(int j) const { return (bits_ >> j) & 1u; }
  uint32_t bits() const { return bits_; }
  int up_count() const;
  std::string str() const;

  // Toggles the labels at two distinct positions (keeps the parity invariant).
  Weight flipped2(int a, int b) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  // Lexicographic, reading left to right with down < up; shorter n first.
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

 private:
  int n_ = 0;
  uint32_t bits_ = 0;
};

// All 2^(n-1) weights of length n in lexicographic order (down < up).
std::vector<Weight> all_weights(int n);

// Row lengths of the tile partition; trailing zero rows are dropped, the
// identity weight gives the empty list.
struct TilePartition {
  std::vector<int> rows;
  friend bool operator==(const TilePartition&, const TilePartition&) = default;
  std::string str() const;
};

TilePartition weight_to_partition(const Weight& w);
Weight partition_to_weight(const TilePartition& p, int n);

// Number of tiles; doubles as the Bruhat length.
int weight_length(const Weight& w);

// Containment of tile sets.
bool bruhat_leq(const TilePartition& a, const TilePartition& b);
bool bruhat_leq(const Weight& a, const Weight& b);

// Deletes the two vertices at positions (k-1, k) for k > 0, or (0, 1) for
// k = 0, then flips the new first label if needed to restore even parity.
// Requires is_contractible(w, k).
Weight contract_weight(const Weight& w, int k);

// Same deletion without the contractibility requirement. Orientation rows
// of a contractible diagram go through here: a row reading clockwise on the
// contraction cup is not itself a contractible weight.
Weight contract_row(const Weight& w, int k);

// True when the cup diagram of w has the undecorated cup (k-1, k) for k > 0,
// or the decorated cup (0, 1) for k = 0. Defined in cupdiagram.cpp.
bool is_contractible(const Weight& w, int k);

}  // namespace arcd
