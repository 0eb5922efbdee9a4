#include "exact/real_roots.hpp"

namespace galoisdr {

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const QPoly& f) {
  if (f.degree() < 1) return 0;
  RationalField q;
  PolyRing<RationalField> R(q);
  std::vector<QPoly> seq{R.squarefree_part(f)};
  seq.push_back(R.derivative(seq[0]));
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    seq.push_back(R.neg(R.rem(seq[seq.size() - 2], seq.back())));
  }
  std::vector<int> at_neg, at_pos;
  for (const auto& p : seq) {
    if (p.is_zero()) continue;
    int s = sgn(p.leading());
    at_pos.push_back(s);
    at_neg.push_back(p.degree() % 2 == 0 ? s : -s);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

}  // namespace galoisdr
