#pragma once

#include <span>
#include <vector>

namespace galoisdr {

/// A finite group given by its multiplication table. Element i composed with
/// element j (apply j first, then i) is table[i][j].
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// Validates the group axioms exhaustively; throws Internal otherwise.
  explicit FiniteGroup(std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  /// g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int element_order(int a) const;
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

/// Checks closure, identity, inverses and associativity of a table.
bool verify_group_axioms(const std::vector<std::vector<int>>& table);

/// A subgroup as its sorted member list.
struct Subgroup {
  std::vector<int> members;

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int x) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  }
};

Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup generate(const FiniteGroup& g, std::span<const int> gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members);
bool is_subset(const Subgroup& h, const Subgroup& k);
/// Is h normal in k (h must be contained in k)?
bool is_normal_in(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);
/// Every subgroup, ordered by size then members.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);
/// A small generating set, chosen greedily in index order.
std::vector<int> generators(const FiniteGroup& g, const Subgroup& h);

/// Conjugacy classes of k under k-conjugation, each sorted, ordered by least
/// element.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g, const Subgroup& k);
Subgroup centralizer(const FiniteGroup& g, int x, const Subgroup& within);
Subgroup center(const FiniteGroup& g, const Subgroup& within);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// Left cosets x*h of h inside k, each sorted, ordered by least element. The
/// least element of each coset is its representative.
std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

/// The quotient k/h for h normal in k.
class QuotientGroup {
 public:
  QuotientGroup(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

  int order() const { return static_cast<int>(reps_.size()); }
  /// Representative (least element) of coset i; coset 0 holds the identity.
  int rep(int i) const { return reps_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& reps() const { return reps_; }
  /// Coset index of an element of k; -1 outside k.
  int coset_of(int x) const { return coset_of_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& coset_members(int i) const { return cosets_[static_cast<std::size_t>(i)]; }
  const FiniteGroup& group() const { return quotient_; }

 private:
  std::vector<int> reps_;
  std::vector<int> coset_of_;
  std::vector<std::vector<int>> cosets_;
  FiniteGroup quotient_;
};

/// Sorted cycle lengths of a permutation of {0..n-1}.
std::vector<int> cycle_type(const std::vector<int>& perm);

}  // namespace galoisdr
