#include "galois/group.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"

namespace galoisdr {

bool verify_group_axioms(const std::vector<std::vector<int>>& t) {
  int n = static_cast<int>(t.size());
  if (n == 0) return false;
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n) return false;
    for (int v : row) {
      if (v < 0 || v >= n) return false;
    }
  }
  auto at = [&](int a, int b) { return t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = at(i, j) == j && at(j, i) == j;
    if (ok) e = i;
  }
  if (e < 0) return false;
  for (int a = 0; a < n; ++a) {
    bool has_inv = false;
    for (int b = 0; b < n && !has_inv; ++b) has_inv = at(a, b) == e && at(b, a) == e;
    if (!has_inv) return false;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int ab = at(a, b);
      for (int c = 0; c < n; ++c) {
        if (at(ab, c) != at(a, at(b, c))) return false;
      }
    }
  }
  return true;
}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  if (!verify_group_axioms(table_)) fail(ErrorCode::Internal, "multiplication table is not a group");
  int n = order();
  for (int i = 0; i < n; ++i) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = mul(i, j) == j;
    if (ok) {
      identity_ = i;
      break;
    }
  }
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == identity_) inverse_[static_cast<std::size_t>(a)] = b;
    }
  }
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(a, x)) ++k;
  return k;
}

bool Subgroup::contains(int x) const { return std::binary_search(members.begin(), members.end(), x); }

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  for (int i = 0; i < g.order(); ++i) s.members.push_back(i);
  return s;
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{{g.identity()}}; }

Subgroup generate(const FiniteGroup& g, std::span<const int> gens) {
  std::set<int> seen{g.identity()};
  std::vector<int> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int s : gens) {
        int y = g.mul(s, x);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return Subgroup{std::vector<int>(seen.begin(), seen.end())};
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members) {
  if (members.empty()) return false;
  std::set<int> s(members.begin(), members.end());
  if (!s.count(g.identity())) return false;
  for (int a : s) {
    if (!s.count(g.inv(a))) return false;
    for (int b : s) {
      if (!s.count(g.mul(a, b))) return false;
    }
  }
  return true;
}

bool is_subset(const Subgroup& h, const Subgroup& k) {
  return std::includes(k.members.begin(), k.members.end(), h.members.begin(), h.members.end());
}

bool is_normal_in(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  if (!is_subset(h, k)) return false;
  for (int x : k.members) {
    for (int y : h.members) {
      if (!h.contains(g.conj(x, y))) return false;
    }
  }
  return true;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::set<Subgroup> found{trivial_subgroup(g)};
  std::vector<Subgroup> frontier{trivial_subgroup(g)};
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& s : frontier) {
      for (int x = 0; x < g.order(); ++x) {
        if (s.contains(x)) continue;
        std::vector<int> gens = s.members;
        gens.push_back(x);
        Subgroup t = generate(g, gens);
        if (found.insert(t).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  return std::vector<Subgroup>(found.begin(), found.end());
}

std::vector<int> generators(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> gens;
  Subgroup cur = trivial_subgroup(g);
  for (int x : h.members) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = generate(g, gens);
    if (cur.order() == h.order()) break;
  }
  return gens;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g, const Subgroup& k) {
  std::vector<std::vector<int>> classes;
  std::vector<bool> done(static_cast<std::size_t>(g.order()), false);
  for (int x : k.members) {
    if (done[static_cast<std::size_t>(x)]) continue;
    std::set<int> cls;
    for (int s : k.members) cls.insert(g.conj(s, x));
    for (int y : cls) done[static_cast<std::size_t>(y)] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

Subgroup centralizer(const FiniteGroup& g, int x, const Subgroup& within) {
  Subgroup c;
  for (int s : within.members) {
    if (g.mul(s, x) == g.mul(x, s)) c.members.push_back(s);
  }
  return c;
}

Subgroup center(const FiniteGroup& g, const Subgroup& within) {
  Subgroup z;
  for (int x : within.members) {
    bool central = true;
    for (int s : within.members) {
      if (g.mul(s, x) != g.mul(x, s)) {
        central = false;
        break;
      }
    }
    if (central) z.members.push_back(x);
  }
  return z;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out.members));
  return out;
}

std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  std::vector<std::vector<int>> cosets;
  std::vector<bool> done(static_cast<std::size_t>(g.order()), false);
  for (int x : k.members) {
    if (done[static_cast<std::size_t>(x)]) continue;
    std::vector<int> c;
    for (int y : h.members) c.push_back(g.mul(x, y));
    std::sort(c.begin(), c.end());
    for (int y : c) done[static_cast<std::size_t>(y)] = true;
    cosets.push_back(std::move(c));
  }
  std::sort(cosets.begin(), cosets.end());
  return cosets;
}

QuotientGroup::QuotientGroup(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  if (!is_normal_in(g, h, k)) fail(ErrorCode::InvalidArgument, "quotient by a subgroup that is not normal");
  cosets_ = left_cosets(g, h, k);
  coset_of_.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < cosets_.size(); ++i) {
    reps_.push_back(cosets_[i].front());
    for (int x : cosets_[i]) coset_of_[static_cast<std::size_t>(x)] = static_cast<int>(i);
  }
  std::size_t n = cosets_.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = coset_of(g.mul(reps_[i], reps_[j]));
  }
  quotient_ = FiniteGroup(std::move(t));
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<int> lengths;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace galoisdr
