#include "app/reports.hpp"

#include <cmath>

#include "app/fields.hpp"
#include "dr/etale.hpp"
#include "dr/points.hpp"
#include "dr/restriction.hpp"
#include "exact/poly_io.hpp"
#include "motives/realization.hpp"

namespace galoisdr {

json rational_json(const Rational& q) { return to_string(q); }

json element_json(const NFElement& x) {
  json a = json::array();
  for (const auto& c : x.coords) a.push_back(rational_json(c));
  return a;
}

namespace {

json subgroup_json(const Subgroup& h) { return h.members; }

json classes_json(const FiniteGroup& g) {
  json out = json::array();
  for (const auto& c : conjugacy_classes(g, whole_group(g))) out.push_back(c);
  return out;
}

json polys_json(const std::vector<QPoly>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(format_polynomial(p));
  return out;
}

json extension_json(const GaloisSubextension& e) {
  return {{"top_degree", e.top->degree()},
          {"top_polynomial", format_polynomial(e.top->minimal_polynomial())},
          {"base_degree", e.base->degree()},
          {"base_polynomial", format_polynomial(e.base->minimal_polynomial())},
          {"relative_degree", e.degree()}};
}

json hopf_json(const HopfAxiomReport& r) {
  return {{"coassociative", r.coassociative},
          {"counit", r.counit},
          {"antipode", r.antipode},
          {"counit_multiplicative", r.counit_multiplicative},
          {"evaluation", r.evaluation},
          {"all", r.all()}};
}

bool table_reproduced(const CoordinateRingPtr& a) {
  const FiniteGroup& g = a->group();
  std::vector<AlgebraPoint> pts;
  for (int s = 0; s < g.order(); ++s) pts.push_back(galois_to_point(a, s));
  for (int s = 0; s < g.order(); ++s) {
    for (int t = 0; t < g.order(); ++t) {
      if (!(point_mul(pts[static_cast<std::size_t>(s)], pts[static_cast<std::size_t>(t)]) ==
            pts[static_cast<std::size_t>(g.mul(s, t))])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

json split_report(const AmbientGaloisField& n) {
  const FiniteGroup& g = n.group();
  bool abelian = true;
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y) abelian = abelian && g.mul(x, y) == g.mul(y, x);
  }
  json roots = json::array();
  for (const auto& r : n.roots()) roots.push_back(r.size());
  return {{"degree", n.degree()},
          {"modulus", format_polynomial(n.field().modulus())},
          {"polynomials", polys_json(n.polys())},
          {"group_order", g.order()},
          {"abelian", abelian},
          {"root_counts", roots}};
}

json group_report(const AmbientGaloisField& n) {
  const FiniteGroup& g = n.group();
  json orders = json::array(), perms = json::array(), types = json::array();
  for (int x = 0; x < g.order(); ++x) {
    orders.push_back(g.element_order(x));
    json per_poly = json::array(), type_per_poly = json::array();
    for (int i = 0; i < static_cast<int>(n.polys().size()); ++i) {
      per_poly.push_back(n.root_permutation(x, i));
      type_per_poly.push_back(cycle_type(n.root_permutation(x, i)));
    }
    perms.push_back(per_poly);
    types.push_back(type_per_poly);
  }
  json class_sizes = json::array();
  for (const auto& c : conjugacy_classes(g, whole_group(g))) class_sizes.push_back(c.size());
  json subgroups = json::array();
  for (const auto& h : all_subgroups(g)) {
    subgroups.push_back({{"members", subgroup_json(h)},
                         {"normal", is_normal_in(g, h, whole_group(g))},
                         {"fixed_field_degree", g.order() / h.order()}});
  }
  return {{"order", g.order()},
          {"table", g.table()},
          {"element_orders", orders},
          {"conjugacy_classes", classes_json(g)},
          {"class_sizes", class_sizes},
          {"center_order", center(g, whole_group(g)).order()},
          {"root_permutations", perms},
          {"cycle_types", types},
          {"subgroups", subgroups}};
}

json coordinate_ring_report(const CoordinateRingPtr& a) {
  json basis = json::array();
  bool equivariant = true;
  for (const auto& f : a->basis()) {
    json values = json::array();
    for (const auto& v : f) values.push_back(element_json(v));
    basis.push_back(values);
    equivariant = equivariant && a->is_equivariant(f);
  }
  return {{"extension", extension_json(a->extension())},
          {"dim", a->dim()},
          {"dim_equals_degree", a->dim() == a->extension().degree()},
          {"basis", basis},
          {"equivariant", equivariant},
          {"hopf_axioms", hopf_json(verify_hopf_axioms(*a))}};
}

json points_report(const CoordinateRingPtr& a) {
  const FiniteGroup& g = a->group();
  const auto& e = a->extension();
  auto k_points = points(a, e.base);
  auto l_points = points(a, e.top);
  bool diagram = true;
  for (int phi = 0; phi < g.order(); ++phi) {
    for (int s = 0; s < g.order(); ++s) diagram = diagram && conjugation_diagram_check(a, phi, s);
  }
  bool distinct = true;
  for (int s = 0; s < g.order(); ++s) {
    for (int t = s + 1; t < g.order(); ++t) distinct = distinct && !(galois_to_point(a, s) == galois_to_point(a, t));
  }
  return {{"extension", extension_json(e)},
          {"relative_order", g.order()},
          {"center_order", center(g, whole_group(g)).order()},
          {"base_points", k_points.size()},
          {"top_points", l_points.size()},
          {"galois_to_point_injective", distinct},
          {"convolution_reproduces_table", table_reproduced(a)},
          {"conjugation_diagram", diagram}};
}

json dr_report(const CoordinateRingPtr& a, bool tower, int max_degree) {
  json comps = json::array();
  for (const auto& c : etale_decomposition(*a)) {
    comps.push_back({{"degree", c.degree}, {"support", c.support}, {"factor", format_polynomial(c.factor)}});
  }
  const FiniteGroup& g = a->group();
  json class_sizes = json::array();
  for (const auto& c : conjugacy_classes(g, whole_group(g))) class_sizes.push_back(c.size());
  json out = {{"extension", extension_json(a->extension())},
              {"dim", a->dim()},
              {"hopf_axioms", hopf_json(verify_hopf_axioms(*a))},
              {"etale_components", comps},
              {"class_sizes", class_sizes},
              {"base_points", points(a, a->extension().base).size()},
              {"center_order", center(g, whole_group(g)).order()}};
  if (tower) {
    auto t = truncated_absolute_group(a->ambient().polys(), max_degree);
    json degrees = json::array();
    for (const auto& l : t.levels) degrees.push_back(l.top->degree());
    out["tower"] = {{"level_degrees", degrees},
                    {"embedding_independent", t.report.embedding_independent},
                    {"composites_agree", t.report.composites_agree},
                    {"injective", t.report.injective}};
  }
  return out;
}

json restrict_report(const GaloisSubextension& source, const AmbientPtr& target) {
  auto a1 = build_coordinate_ring(source);
  auto a2 = build_coordinate_ring(full_extension(target));
  auto embs = embeddings(source, target);
  std::vector<RestrictionMap> maps;
  for (const auto& phi : embs) maps.push_back(restriction(phi, a1, a2));
  bool equal = true, hopf = true, injective = true;
  for (const auto& m : maps) {
    equal = equal && m.matrix == maps.front().matrix;
    hopf = hopf && is_hopf_homomorphism(m);
    injective = injective && is_injective(m);
  }
  json matrix = json::array();
  const auto& m = maps.front().matrix;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element_json(m(r, c)));
    matrix.push_back(row);
  }
  return {{"source", extension_json(source)},
          {"target_degree", target->degree()},
          {"embedding_count", embs.size()},
          {"all_maps_equal", equal},
          {"hopf_homomorphism", hopf},
          {"injective", injective},
          {"matrix", matrix}};
}

json frobenius_record(const FrobeniusData& d, const std::vector<int>& residue_degrees) {
  json certs = {{"fixed", d.certificates.fixed}, {"transport", d.certificates.transport}};
  certs["residues_rational"] = d.certificates.residues_rational ? json(*d.certificates.residues_rational) : json(nullptr);
  json values = json::array();
  for (const auto& v : d.point.images) values.push_back(element_json(v));
  return {{"p", d.p},
          {"residue_degrees", residue_degrees},
          {"residue_degree", d.residue_degree},
          {"sigma_index", d.sigma},
          {"sigma_ambient", d.sigma_ambient},
          {"order", d.order},
          {"class", d.conjugacy_class},
          {"decomposition_degree", d.decomposition_field->degree()},
          {"certificates", certs},
          {"values", values}};
}

json frobenius_report(const CoordinateRingPtr& a, std::uint64_t p) {
  FrobeniusData d = algebraic_frobenius(a, p);
  const AmbientGaloisField& n = a->ambient();
  std::vector<int> degrees;
  for (int i = 0; i < static_cast<int>(n.polys().size()); ++i) {
    auto t = splitting_type(n, i, p);
    degrees.insert(degrees.end(), t.begin(), t.end());
  }
  std::sort(degrees.begin(), degrees.end());
  json rec = frobenius_record(d, degrees);
  rec["factor_count"] = PrimeContext(a->extension().ambient, p).all_factors().size();
  rec["factor_choice_independent"] = factor_choice_independent(a, p);
  bool dedekind = true;
  for (int i = 0; i < static_cast<int>(n.polys().size()); ++i) {
    dedekind = dedekind && cycle_type(n.root_permutation(d.sigma_ambient, i)) == splitting_type(n, i, p);
  }
  rec["dedekind_consistent"] = dedekind;
  return {{"extension", extension_json(a->extension())}, {"record", rec}};
}

json frobenius_sweep_report(const CoordinateRingPtr& a, std::uint64_t lo, std::uint64_t hi) {
  const FiniteGroup& g = a->group();
  auto classes = conjugacy_classes(g, whole_group(g));
  std::vector<int> counts(classes.size(), 0);
  json records = json::array(), bad = json::array();
  int good = 0;
  for (const auto& e : frobenius_sweep(a, lo, hi)) {
    if (!e.good) {
      bad.push_back(e.p);
      continue;
    }
    ++good;
    ++counts[static_cast<std::size_t>(e.data->conjugacy_class)];
    records.push_back(frobenius_record(*e.data, e.residue_degrees));
  }
  json cheb = json::array();
  bool within = good > 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    double expected = static_cast<double>(classes[c].size()) / g.order();
    double observed = good > 0 ? static_cast<double>(counts[c]) / good : 0.0;
    bool ok = std::abs(observed - expected) <= 0.15;
    within = within && ok;
    Rational share(static_cast<long>(classes[c].size()), g.order());
    share.canonicalize();
    cheb.push_back({{"class", c},
                    {"size", classes[c].size()},
                    {"count", counts[c]},
                    {"expected", to_string(share)},
                    {"within_tolerance", ok}});
  }
  return {{"extension", extension_json(a->extension())},
          {"range", {lo, hi}},
          {"records", records},
          {"bad_primes", bad},
          {"good_prime_count", good},
          {"chebotarev", {{"classes", cheb}, {"tolerance", "0.15"}, {"within_tolerance", within}}}};
}

json frobenius_infinity_report(const CoordinateRingPtr& a) {
  AlgebraPoint pt = frobenius_at_infinity(a);
  json values = json::array();
  for (const auto& v : pt.images) values.push_back(element_json(v));
  return {{"extension", extension_json(a->extension())},
          {"totally_real", true},
          {"identity_point", pt == galois_to_point(a, a->group().identity())},
          {"values", values}};
}

json motive_report(const AmbientPtr& n, const QPoly& scheme) {
  const FiniteGroup& g = n->group();
  EtaleScheme x = scheme_of_polynomial(n, scheme);
  Motive v = motive_of(x);
  json comps = json::array();
  for (const auto& h : x.components) {
    comps.push_back({{"subgroup", subgroup_json(h)}, {"field_degree", g.order() / h.order()}});
  }
  json by_subfield = json::array();
  for (const auto& h : all_subgroups(g)) {
    auto m = fixed_field(n, h);
    by_subfield.push_back({{"subgroup", subgroup_json(h)},
                           {"field_degree", m->degree()},
                           {"field_polynomial", format_polynomial(m->minimal_polynomial())},
                           {"sections", sections(v, h).size()}});
  }
  auto w = std::make_shared<const DeRham>(v);
  auto a = build_coordinate_ring(full_extension(n));
  ComoduleReport c = verify_comodule(coaction(w, a));
  FiniteTypeLevel level = finite_type_level(v);
  return {{"scheme", format_polynomial(scheme)},
          {"dim", v.dim()},
          {"orbits", x.components.size()},
          {"components", comps},
          {"sections_by_subfield", by_subfield},
          {"dr_dim", w->dim()},
          {"gamma_iso_ok", gamma_comparison(x).ok()},
          {"comodule_ok", c.all()},
          {"finite_type_kernel", subgroup_json(level.kernel)},
          {"finite_type_certified", level.certified},
          {"hom_to_unit", hom_motives(v, unit_motive(n)).size()}};
}

}  // namespace galoisdr
