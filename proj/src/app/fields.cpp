#include "app/fields.hpp"

#include "exact/factor_nf.hpp"
#include "exact/factor_q.hpp"
#include "exact/poly_io.hpp"

namespace galoisdr {

namespace {

Subgroup fixer(const AmbientGaloisField& n, const std::vector<NFElement>& xs) {
  Subgroup h;
  for (int s = 0; s < n.group().order(); ++s) {
    bool fixes = true;
    for (const auto& x : xs) fixes = fixes && n.apply(s, x) == x;
    if (fixes) h.members.push_back(s);
  }
  return h;
}

}  // namespace

Subgroup splitting_subgroup(const AmbientGaloisField& n, const QPoly& f) {
  QPoly g = normalize_input_polynomial(f);
  auto roots = roots_in_field(n.field(), g);
  int distinct = 0;
  for (const auto& q : factor_over_q(g).factors) distinct += q.first.degree();
  if (static_cast<int>(roots.size()) != distinct) {
    fail(ErrorCode::InvalidArgument, format_polynomial(f) + " does not split in the ambient field");
  }
  return fixer(n, roots);
}

Subgroup root_stabilizer(const AmbientGaloisField& n, const QPoly& f) {
  auto roots = roots_in_field(n.field(), normalize_input_polynomial(f));
  if (roots.empty()) fail(ErrorCode::InvalidArgument, format_polynomial(f) + " has no root in the ambient field");
  return fixer(n, {roots.front()});
}

GaloisSubextension select_extension(const AmbientPtr& n, const std::optional<QPoly>& field,
                                    const std::optional<QPoly>& over) {
  const FiniteGroup& g = n->group();
  Subgroup inner = field ? splitting_subgroup(*n, *field) : trivial_subgroup(g);
  Subgroup outer = over ? root_stabilizer(*n, *over) : whole_group(g);
  if (!is_subset(inner, outer)) fail(ErrorCode::InvalidArgument, "the base field is not contained in the top field");
  return make_subextension(n, inner, outer);
}

EtaleScheme scheme_of_polynomial(const AmbientPtr& n, const QPoly& f) {
  auto fac = factor_over_q(normalize_input_polynomial(f));
  std::vector<Subgroup> comps;
  for (const auto& [q, mult] : fac.factors) {
    if (mult != 1) fail(ErrorCode::InvalidArgument, "scheme polynomial must be squarefree");
    comps.push_back(root_stabilizer(*n, q));
  }
  return make_etale_scheme(n, std::move(comps));
}

}  // namespace galoisdr
