#include "cl16/enumerate.hpp"

#include <stdexcept>

namespace cl16 {

std::vector<Letter> defaultLetters(int k) {
  std::vector<Letter> out;
  for (int i = 0; i < k; ++i)
    out.push_back(std::string(1, static_cast<char>('a' + (('p' - 'a') + i) % 26)));
  return out;
}

std::vector<ClusterId> defaultClusters(int m) {
  std::vector<ClusterId> out;
  for (int i = 0; i < m; ++i)
    out.push_back(i % 2 == 0 ? disj(i / 2 + 1) : conj(i / 2 + 1));
  return out;
}

Enumerator::Enumerator(int maxNodes, std::vector<Letter> letters,
                       std::vector<ClusterId> clusters) {
  leaves_.push_back(Cirquent::top());
  leaves_.push_back(Cirquent::bot());
  for (const Letter& p : letters) {
    leaves_.push_back(Cirquent::lit(p, true));
    leaves_.push_back(Cirquent::lit(p, false));
  }
  ops_.push_back({Kind::Or, {}});
  ops_.push_back({Kind::And, {}});
  for (ClusterId cl : clusters)
    ops_.push_back({cl.polarity == Polarity::Disjunctive ? Kind::ChOr : Kind::ChAnd, cl});

  counts_.assign(maxNodes + 1, 0);
  splitTotal_.assign(maxNodes + 1, 0);
  counts_[0] = leaves_.size();
  for (int n = 1; n <= maxNodes; ++n) {
    uint64_t split = 0;
    for (int i = 0; i < n; ++i) split += counts_[i] * counts_[n - 1 - i];
    splitTotal_[n] = split;
    counts_[n] = split * ops_.size();
  }
  cumulative_.assign(maxNodes + 2, 0);
  for (int n = 0; n <= maxNodes; ++n) cumulative_[n + 1] = cumulative_[n] + counts_[n];
  cumulative_.erase(cumulative_.begin());
}

Cirquent Enumerator::decode(int size, uint64_t index) const {
  if (size == 0) return leaves_[index];
  uint64_t perOp = splitTotal_[size];
  const Op& op = ops_[index / perOp];
  uint64_t rem = index % perOp;
  int leftSize = 0;
  while (rem >= counts_[leftSize] * counts_[size - 1 - leftSize]) {
    rem -= counts_[leftSize] * counts_[size - 1 - leftSize];
    ++leftSize;
  }
  int rightSize = size - 1 - leftSize;
  Cirquent l = decode(leftSize, rem / counts_[rightSize]);
  Cirquent r = decode(rightSize, rem % counts_[rightSize]);
  if (isChoice(op.kind)) return Cirquent::choice(op.kind, op.cluster, l, r);
  return Cirquent::par(op.kind, l, r);
}

Cirquent Enumerator::at(uint64_t index) const {
  if (index >= total()) throw std::out_of_range("enumeration index out of range");
  int size = 0;
  while (index >= counts_[size]) {
    index -= counts_[size];
    ++size;
  }
  return decode(size, index);
}

Cirquent Enumerator::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<uint64_t> dist(0, total() - 1);
  return at(dist(rng));
}

}  // namespace cl16
