#include "chordkit/counting.hpp"

#include <bit>
#include <unordered_map>

#include <json.hpp>

namespace chordkit {

namespace {

struct DpKey {
  std::uint64_t mask = 0;
  std::uint32_t open = 0;
  bool operator==(const DpKey&) const = default;
};

struct DpKeyHash {
  std::size_t operator()(const DpKey& k) const {
    std::uint64_t x = k.mask * 0x9e3779b97f4a7c15ULL + k.open;
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return static_cast<std::size_t>(x);
  }
};

using StateMap = std::unordered_map<DpKey, BigCount, DpKeyHash>;

}  // namespace

BigCount count_dp(int n, int k, DpStats* stats) {
  if (n < 1 || k < 1) throw DomainError("n and k must be positive");
  if (k > n) return 0;
  if (k > 65)
    throw DomainError("k=" + std::to_string(k) +
                      " exceeds the 64-bit recency mask (k <= 65)");

  const int width = k - 1;
  const std::uint64_t keep =
      width >= 64 ? ~0ULL : (std::uint64_t{1} << width) - 1;
  const int total = 2 * n;

  StateMap cur, nxt;
  cur[DpKey{}] = 1;
  std::uint64_t transitions = 0;
  std::size_t peak = 1;

  for (int p = 1; p <= total; ++p) {
    const int remaining = total - p;
    const bool can_start = p + k <= total;  // a chord from p must reach p+k
    nxt.clear();

    // Branch on what happens at position p, then age the mask: the bit for a
    // start made k-1 positions ago falls out and that chord becomes mature.
    auto shift_into = [&](const DpKey& key, std::uint32_t open, bool start_here,
                          BigCount weight) {
      int aged;
      std::uint64_t mask;
      if (width == 0) {
        aged = start_here ? 1 : 0;
        mask = 0;
      } else {
        aged = static_cast<int>((key.mask >> (width - 1)) & 1);
        mask = ((key.mask << 1) | (start_here ? 1 : 0)) & keep;
      }
      const std::uint32_t new_open = open + static_cast<std::uint32_t>(aged);
      // Every pending obligation (unclosed start) needs its own later
      // position, so prune states that cannot finish.
      if (std::popcount(mask) + static_cast<int>(new_open) > remaining) return;
      nxt[DpKey{mask, new_open}] += weight;
    };

    for (const auto& [key, cnt] : cur) {
      if (key.open > 0) {  // close one of the mature open chords
        ++transitions;
        shift_into(key, key.open - 1, false, cnt * key.open);
      }
      if (can_start) {
        ++transitions;
        shift_into(key, key.open, true, cnt);
      }
    }
    cur.swap(nxt);
    peak = std::max(peak, cur.size());
  }

  if (stats) {
    stats->transitions = transitions;
    stats->peak_states = peak;
  }
  const auto it = cur.find(DpKey{});
  return it == cur.end() ? BigCount(0) : it->second;
}

CountTable::CountTable(int max_n) : max_n_(max_n) {
  if (max_n < 1) throw DomainError("maxN must be positive");
}

const BigCount& CountTable::at(int n, int k) const {
  static const BigCount zero = 0;
  if (n < 1 || n > max_n_ || k < 1 || k > max_n_)
    throw DomainError("table cell (" + std::to_string(n) + "," +
                      std::to_string(k) + ") out of range");
  const auto it = entries_.find({n, k});
  return it == entries_.end() ? zero : it->second;
}

void CountTable::set(int n, int k, BigCount value) {
  if (n < 1 || n > max_n_ || k < 1 || k > n)
    throw DomainError("table cell (" + std::to_string(n) + "," +
                      std::to_string(k) + ") out of range");
  entries_[{n, k}] = std::move(value);
}

std::string CountTable::to_csv() const {
  std::string out = "k";
  for (int n = 1; n <= max_n_; ++n) out += "," + std::to_string(n);
  out += '\n';
  for (int k = 1; k <= max_n_; ++k) {
    out += std::to_string(k);
    for (int n = 1; n <= max_n_; ++n) out += "," + at(n, k).get_str();
    out += '\n';
  }
  return out;
}

std::string CountTable::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (int k = 1; k <= max_n_; ++k)
    for (int n = 1; n <= max_n_; ++n)
      arr.push_back({{"n", n}, {"k", k}, {"count", at(n, k).get_str()}});
  return arr.dump(2) + "\n";
}

CountTable build_table(int max_n) {
  CountTable table(max_n);
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= n; ++k) table.set(n, k, count_dp(n, k));
  return table;
}

std::vector<BigCount> row_sequence(int k, int max_n) {
  if (k < 1) throw DomainError("k must be positive");
  if (max_n < k)
    throw DomainError("maxN must be at least k (got maxN=" +
                      std::to_string(max_n) + ", k=" + std::to_string(k) + ")");
  std::vector<BigCount> row;
  row.reserve(static_cast<size_t>(max_n - k) + 1);
  for (int n = k; n <= max_n; ++n) row.push_back(count_dp(n, k));
  return row;
}

}  // namespace chordkit
