#include "chordkit/enumeration.hpp"

#include <cstdlib>
#include <string>

namespace chordkit {

DiagramEnumerator::DiagramEnumerator(int n, int k) : n_(n), k_(k) {
  if (n < 1) throw DomainError("n must be positive");
  if (k < 1) throw DomainError("k must be positive");
  used_.assign(static_cast<size_t>(2 * n) + 1, 0);
  stack_.reserve(static_cast<size_t>(n));
}

bool DiagramEnumerator::feasible() const {
  // Free positions f_1 < ... < f_2m admit a completion iff matching the lower
  // half onto the upper half works, i.e. f_{m+t} - f_t >= k for all t.
  static thread_local std::vector<int> free_pos;
  free_pos.clear();
  for (int i = 1; i <= 2 * n_; ++i)
    if (!used_[static_cast<size_t>(i)]) free_pos.push_back(i);
  const size_t m = free_pos.size() / 2;
  for (size_t t = 0; t < m; ++t)
    if (free_pos[m + t] - free_pos[t] < k_) return false;
  return true;
}

std::optional<ChordDiagram> DiagramEnumerator::next() {
  if (exhausted_) return std::nullopt;

  // resume > 0 means: continue the deepest level, whose start is the smallest
  // free position, trying ends from `resume` upward.
  int resume = 0;
  if (started_) {
    if (stack_.empty()) {  // can happen only if n_ == 0, which the ctor forbids
      exhausted_ = true;
      return std::nullopt;
    }
    const Chord last = stack_.back();
    stack_.pop_back();
    used_[static_cast<size_t>(last.start)] = 0;
    used_[static_cast<size_t>(last.end)] = 0;
    resume = last.end + 1;
  }
  started_ = true;

  while (true) {
    if (static_cast<int>(stack_.size()) == n_) return ChordDiagram(stack_);

    int s = 1;
    while (used_[static_cast<size_t>(s)]) ++s;
    int e = resume > 0 ? resume : s + k_;
    resume = 0;

    bool placed = false;
    for (; e <= 2 * n_; ++e) {
      if (used_[static_cast<size_t>(e)]) continue;
      used_[static_cast<size_t>(s)] = 1;
      used_[static_cast<size_t>(e)] = 1;
      if (feasible()) {
        stack_.push_back({s, e});
        placed = true;
        break;
      }
      used_[static_cast<size_t>(s)] = 0;
      used_[static_cast<size_t>(e)] = 0;
    }
    if (!placed) {
      if (stack_.empty()) {
        exhausted_ = true;
        return std::nullopt;
      }
      const Chord last = stack_.back();
      stack_.pop_back();
      used_[static_cast<size_t>(last.start)] = 0;
      used_[static_cast<size_t>(last.end)] = 0;
      resume = last.end + 1;
    }
  }
}

std::vector<ChordDiagram> enumerate_all(int n, int k) {
  std::vector<ChordDiagram> out;
  DiagramEnumerator en(n, k);
  while (auto d = en.next()) out.push_back(std::move(*d));
  return out;
}

int oracle_ceiling() {
  if (const char* env = std::getenv("CHORDKIT_ORACLE_CEILING")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 1000) return static_cast<int>(v);
  }
  return 8;
}

BigCount count_brute(int n, int k, int ceiling) {
  if (n < 1 || k < 1) throw DomainError("n and k must be positive");
  if (n > ceiling)
    throw DomainError("n=" + std::to_string(n) + " exceeds the enumeration ceiling " +
                      std::to_string(ceiling) + "; use the DP counter for large sizes");
  BigCount total = 0;
  DiagramEnumerator en(n, k);
  while (en.next()) ++total;
  return total;
}

}  // namespace chordkit
