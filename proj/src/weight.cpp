#include "arcd/weight.hpp"

#include <bit>
#include <stdexcept>

namespace arcd {

namespace {

void check_parity(int n, uint32_t bits) {
  if (std::popcount(bits) % 2 != 0)
    throw std::invalid_argument("weight needs an even number of up labels");
  if (n > 0 && (bits >> n) != 0)
    throw std::invalid_argument("up bits outside the weight");
}

}  // namespace

Weight::Weight(int n, uint32_t up_bits) : n_(n), bits_(up_bits) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("weight length out of range");
  if (n == 0 && up_bits != 0) throw std::invalid_argument("empty weight with labels");
  check_parity(n, bits_);
}

Weight Weight::parse(const std::string& text) {
  if (text.size() > static_cast<size_t>(kMaxN))
    throw std::invalid_argument("weight too long: " + text);
  uint32_t bits = 0;
  for (size_t j = 0; j < text.size(); ++j) {
    if (text[j] == '^')
      bits |= 1u << j;
    else if (text[j] != 'v')
      throw std::invalid_argument("weight characters must be v or ^: " + text);
  }
  return Weight(static_cast<int>(text.size()), bits);
}

int Weight::up_count() const { return std::popcount(bits_); }

std::string Weight::str() const {
  std::string out(n_, 'v');
  for (int j = 0; j < n_; ++j)
    if (up(j)) out[j] = '^';
  return out;
}

Weight Weight::flipped2(int a, int b) const {
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_)
    throw std::invalid_argument("flipped2 needs two distinct positions");
  Weight w = *this;
  w.bits_ ^= (1u << a) | (1u << b);
  return w;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (int j = 0; j < a.n_; ++j)
    if (a.up(j) != b.up(j)) return a.up(j) <=> b.up(j);
  return std::strong_ordering::equal;
}

std::vector<Weight> all_weights(int n) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("all_weights needs 1 <= n <= 24");
  std::vector<Weight> out;
  out.reserve(1u << (n - 1));
  for (uint32_t x = 0; x < (1u << n); ++x) {
    if (std::popcount(x) % 2 != 0) continue;
    // x runs lexicographically when its bits are read most significant first.
    uint32_t bits = 0;
    for (int j = 0; j < n; ++j)
      if ((x >> (n - 1 - j)) & 1u) bits |= 1u << j;
    out.emplace_back(n, bits);
  }
  return out;
}

std::string TilePartition::str() const {
  std::string out = "(";
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(rows[i]);
  }
  return out + ")";
}

namespace {

// t_i = number of up labels at positions >= i, for i = 1..n-1.
std::vector<int> t_vector(const Weight& w) {
  int n = w.size();
  std::vector<int> t(n + 1, 0);  // 1-based, t[n] = 0
  for (int i = n - 1; i >= 1; --i) t[i] = t[i + 1] + (w.up(i) ? 1 : 0);
  return t;
}

std::vector<int> rows_from_t(const std::vector<int>& t, int n) {
  std::vector<int> rows;
  for (int r = 1; r <= n - 1; ++r) {
    int len = (r <= t[1]) ? 1 : 0;
    for (int i = 2; i <= n - 1; ++i)
      if (i <= r && r <= i - 1 + t[i]) ++len;
    rows.push_back(len);
  }
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return rows;
}

}  // namespace

TilePartition weight_to_partition(const Weight& w) {
  return {rows_from_t(t_vector(w), w.size())};
}

Weight partition_to_weight(const TilePartition& p, int n) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("bad weight length");
  const auto& rows = p.rows;
  for (int le : rows)
    if (le <= 0) throw std::invalid_argument("row lengths must be positive");
  std::vector<int> t(n + 1, 0);
  for (size_t r0 = 0; r0 < rows.size(); ++r0)
    if (rows[r0] == static_cast<int>(r0) + 1) ++t[1];
  for (int i = 2; i <= n - 1; ++i)
    for (size_t r0 = 0; r0 < rows.size(); ++r0) {
      int r = static_cast<int>(r0) + 1;
      if (r >= i && rows[r0] >= r - i + 1) ++t[i];
    }
  for (int i = 1; i <= n - 1; ++i) {
    int step = t[i] - t[i + 1];
    if (step != 0 && step != 1)
      throw std::invalid_argument("partition does not fit the admissible region");
  }
  uint32_t bits = 0;
  for (int j = 1; j <= n - 1; ++j)
    if (t[j] > t[j + 1]) bits |= 1u << j;
  if (std::popcount(bits) % 2 != 0) bits |= 1u;
  Weight w(n, bits);
  if (weight_to_partition(w).rows != rows)
    throw std::invalid_argument("partition does not fit the admissible region");
  return w;
}

int weight_length(const Weight& w) {
  int len = 0;
  for (int j = 0; j < w.size(); ++j)
    if (w.up(j)) len += j;
  return len;
}

bool bruhat_leq(const TilePartition& a, const TilePartition& b) {
  // Tile containment is equivalent to a pointwise comparison of the diagonal
  // counts t_i, which the rows determine without reference to n.
  auto diag = [](const std::vector<int>& rows) {
    std::vector<int> t;
    int t1 = 0;
    for (size_t r0 = 0; r0 < rows.size(); ++r0)
      if (rows[r0] == static_cast<int>(r0) + 1) ++t1;
    t.push_back(t1);
    for (int i = 2; i <= static_cast<int>(rows.size()) + 1; ++i) {
      int ti = 0;
      for (size_t r0 = 0; r0 < rows.size(); ++r0) {
        int r = static_cast<int>(r0) + 1;
        if (r >= i && rows[r0] >= r - i + 1) ++ti;
      }
      t.push_back(ti);
    }
    return t;
  };
  auto ta = diag(a.rows), tb = diag(b.rows);
  ta.resize(std::max(ta.size(), tb.size()), 0);
  tb.resize(ta.size(), 0);
  for (size_t i = 0; i < ta.size(); ++i)
    if (ta[i] > tb[i]) return false;
  return true;
}

bool bruhat_leq(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Bruhat compare needs equal n");
  auto ta = t_vector(a), tb = t_vector(b);
  for (int i = 1; i <= a.size() - 1; ++i)
    if (ta[i] > tb[i]) return false;
  return true;
}

Weight contract_weight(const Weight& w, int k) {
  if (!is_contractible(w, k))
    throw std::invalid_argument("weight is not contractible at k=" + std::to_string(k));
  return contract_row(w, k);
}

Weight contract_row(const Weight& w, int k) {
  if (k < 0 || k >= w.size() || w.size() < 2)
    throw std::invalid_argument("contraction position out of range");
  int lo = (k == 0) ? 0 : k - 1;
  uint32_t low = w.bits() & ((1u << lo) - 1);
  uint32_t high = (w.bits() >> (lo + 2)) << lo;
  uint32_t bits = low | high;
  if (std::popcount(bits) % 2 != 0) bits ^= 1u;
  return Weight(w.size() - 2, bits);
}

}  // namespace arcd
