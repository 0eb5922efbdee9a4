#include "app/check.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "app/fields.hpp"
#include "dr/etale.hpp"
#include "dr/points.hpp"
#include "dr/restriction.hpp"
#include "exact/factor_q.hpp"
#include "exact/poly_io.hpp"
#include "galois/serialize.hpp"
#include "motives/realization.hpp"

namespace galoisdr {

namespace {

QPoly P(const char* s) { return parse_polynomial(s); }

// Shared inputs, built on first use within one run.
struct Fixtures {
  AmbientPtr q2, n6, n12, c4;
  CoordinateRingPtr aq2, a6, a6_quad, a12;
  Subgroup a3, order2;

  Fixtures() {
    q2 = splitting_field({P("x^2-2")});
    n6 = splitting_field({P("x^3-2")});
    n12 = splitting_field({P("x^3-2"), P("x^2-2")});
    c4 = splitting_field({P("x^4-5*x^2+5")});
    const FiniteGroup& g = n6->group();
    for (const auto& h : all_subgroups(g)) {
      if (h.order() == 3) a3 = h;
      if (h.order() == 2 && order2.members.empty()) order2 = h;
    }
    aq2 = build_coordinate_ring(full_extension(q2));
    a6 = build_coordinate_ring(full_extension(n6));
    a6_quad = build_coordinate_ring(make_subextension(n6, trivial_subgroup(g), a3));
    a12 = build_coordinate_ring(full_extension(n12));
  }

  std::vector<EtaleScheme> schemes() const {
    const FiniteGroup& g = n6->group();
    return {make_etale_scheme(n6, {whole_group(g)}), make_etale_scheme(n6, {order2}),
            make_etale_scheme(n6, {trivial_subgroup(g)}), make_etale_scheme(n6, {whole_group(g), a3})};
  }

  std::vector<Motive> motives() const {
    std::vector<Motive> out;
    for (const auto& x : schemes()) out.push_back(motive_of(x));
    for (const auto& c : isotypic_components(out[2])) {
      if (c.basis.size() == 4) out.push_back(irreducible_summand(c).motive);
    }
    return out;
  }
};

struct Check {
  const char* id;
  const char* description;
  bool blocking;
  std::function<std::pair<bool, json>(const Fixtures&)> run;
};

std::multiset<int> class_sizes(const FiniteGroup& g) {
  std::multiset<int> s;
  for (const auto& c : conjugacy_classes(g, whole_group(g))) s.insert(static_cast<int>(c.size()));
  return s;
}

std::vector<Check> acceptance_checks() {
  return {
      {"A1", "coordinate ring dimension and equivariance", true,
       [](const Fixtures& f) {
         bool ok = true;
         json dims = json::array();
         for (const auto& a : {f.aq2, f.a6, f.a6_quad, f.a12}) {
           bool eq = true;
           for (const auto& b : a->basis()) eq = eq && a->is_equivariant(b);
           ok = ok && eq && a->dim() == a->extension().degree();
           dims.push_back({{"dim", a->dim()}, {"degree", a->extension().degree()}, {"equivariant", eq}});
         }
         return std::make_pair(ok, dims);
       }},
      {"A2", "Hopf axioms and the point group", true,
       [](const Fixtures& f) {
         bool hopf = verify_hopf_axioms(*f.aq2).all() && verify_hopf_axioms(*f.a6).all() &&
                     verify_hopf_axioms(*f.a6_quad).all();
         json p6 = points_report(f.a6);
         json pq = points_report(f.aq2);
         bool ok = hopf && p6["convolution_reproduces_table"] == true && p6["galois_to_point_injective"] == true &&
                   p6["base_points"] == 1 && pq["base_points"] == 2 && p6["top_points"] == 6;
         return std::make_pair(ok, json{{"hopf", hopf}, {"n6", p6}, {"q2", pq}});
       }},
      {"A3", "restriction maps are independent of the embedding", true,
       [](const Fixtures& f) {
         json self = restrict_report(f.a6->extension(), f.n6);
         bool identity = true;
         for (const auto& phi : embeddings(f.a6->extension(), f.n6)) {
           RestrictionMap r = restriction(phi, f.a6, f.a6);
           for (std::size_t i = 0; i < r.matrix.rows(); ++i) {
             for (std::size_t j = 0; j < r.matrix.cols(); ++j) {
               identity = identity && r.matrix(i, j) == (i == j ? f.n6->field().one() : f.n6->field().zero());
             }
           }
         }
         json cross = restrict_report(f.a6->extension(), f.n12);
         bool ok = identity && self["embedding_count"] == 6 && cross["embedding_count"] == 6 &&
                   cross["all_maps_equal"] == true && cross["injective"] == true;
         return std::make_pair(ok, json{{"self_identity", identity},
                                        {"self_count", self["embedding_count"]},
                                        {"cross_count", cross["embedding_count"]},
                                        {"cross_equal", cross["all_maps_equal"]},
                                        {"cross_hopf", cross["hopf_homomorphism"]}});
       }},
      {"A4", "etale factor degrees equal class sizes", true,
       [](const Fixtures& f) {
         std::multiset<int> degrees;
         for (const auto& c : etale_decomposition(*f.a6)) degrees.insert(c.degree);
         bool ok = degrees == class_sizes(f.a6->group());
         return std::make_pair(ok, json{{"degrees", degrees}});
       }},
      {"A5", "Frobenius certificates for x^3-2", true,
       [](const Fixtures& f) {
         bool ok = true;
         json recs = json::array();
         for (std::uint64_t p : {5, 7, 11, 13, 31}) {
           json r = frobenius_report(f.a6, p)["record"];
           ok = ok && r["certificates"]["fixed"] == true && r["certificates"]["transport"] == true &&
                r["factor_choice_independent"] == true && r["dedekind_consistent"] == true &&
                r["order"] == r["residue_degree"];
           recs.push_back({{"p", p}, {"order", r["order"]}, {"residue_degrees", r["residue_degrees"]}});
         }
         std::map<int, std::vector<int>> expected = {{5, {1, 2}}, {7, {3}}, {31, {1, 1, 1}}};
         for (const auto& r : recs) {
           int p = r["p"];
           if (expected.count(p)) ok = ok && r["residue_degrees"].get<std::vector<int>>() == expected[p];
         }
         return std::make_pair(ok, recs);
       }},
      {"A6", "Chebotarev frequencies below 500 (warning only)", false,
       [](const Fixtures& f) {
         json s = frobenius_sweep_report(f.a6, 2, 500);
         return std::make_pair(s["chebotarev"]["within_tolerance"] == true, s["chebotarev"]);
       }},
      {"A7", "motives: descent, Gamma, comodules, hom dimensions", true,
       [](const Fixtures& f) {
         auto motives = f.motives();
         bool descent = motives.size() == 5;
         std::vector<Coaction> co;
         bool comodule = true;
         for (const auto& v : motives) {
           auto w = std::make_shared<const DeRham>(v);
           descent = descent && w->dim() == v.dim();
           co.push_back(coaction(w, f.a6));
           comodule = comodule && verify_comodule(co.back()).all();
         }
         bool gamma = gamma_comparison(f.schemes()[1]).ok();
         bool homs = true;
         for (std::size_t i = 0; i < motives.size(); ++i) {
           for (std::size_t j = 0; j < motives.size(); ++j) {
             homs = homs && hom_motives(motives[i], motives[j]).size() == comodule_homs(co[i], co[j]).size();
           }
         }
         return std::make_pair(descent && comodule && gamma && homs,
                               json{{"descent", descent}, {"comodule", comodule}, {"gamma", gamma}, {"hom_dims", homs}});
       }},
      {"A8", "infinite place", true,
       [](const Fixtures& f) {
         bool q2 = frobenius_infinity_report(f.aq2)["identity_point"] == true;
         bool c4 = frobenius_infinity_report(build_coordinate_ring(full_extension(f.c4)))["identity_point"] == true;
         bool ramified = false;
         try {
           frobenius_at_infinity(f.a6);
         } catch (const GaloisError& e) {
           ramified = e.code() == ErrorCode::RamifiedInfinitePlace;
         }
         return std::make_pair(q2 && c4 && ramified, json{{"q2", q2}, {"c4", c4}, {"n6_ramified", ramified}});
       }},
      {"A9", "reports are deterministic across cold runs", true,
       [](const Fixtures&) {
         auto build = [] {
           AmbientPtr n = splitting_field({P("x^3-2")});
           auto a = build_coordinate_ring(full_extension(n));
           json j = {split_report(*n), group_report(*n), coordinate_ring_report(a), frobenius_report(a, 7)};
           return j.dump();
         };
         bool ok = build() == build();
         return std::make_pair(ok, json{{"identical", ok}});
       }},
  };
}

std::vector<Check> invariant_checks() {
  return {
      {"exact.factor_roundtrip", "factorizations multiply back", true,
       [](const Fixtures&) {
         bool ok = true;
         for (const char* s : {"x^4+1", "x^6-1", "x^5-x-1", "x^5-2*x^4-4*x^3+6*x^2+7*x-6", "4*x^4-1"}) {
           QPoly f = P(s);
           ok = ok && expand(factor_over_q(f)) == f;
         }
         return std::make_pair(ok, json(ok));
       }},
      {"galois.correspondence", "fixed fields match subgroup indices and stabilizers", true,
       [](const Fixtures& f) {
         bool ok = true;
         for (const auto& n : {f.q2, f.n6, f.c4, f.n12}) {
           for (const auto& h : all_subgroups(n->group())) {
             auto m = fixed_field(n, h);
             ok = ok && m->degree() * h.order() == n->group().order() && m->stabilizer() == h;
           }
         }
         return std::make_pair(ok, json(ok));
       }},
      {"galois.transitivity", "the group is transitive on the roots of each irreducible input", true,
       [](const Fixtures& f) {
         bool ok = true;
         for (const auto& n : {f.q2, f.n6, f.c4, f.n12}) {
           for (int i = 0; i < static_cast<int>(n->polys().size()); ++i) {
             std::set<int> orbit;
             for (int s = 0; s < n->group().order(); ++s) orbit.insert(n->root_permutation(s, i)[0]);
             ok = ok && static_cast<int>(orbit.size()) == n->polys()[i].degree();
           }
         }
         return std::make_pair(ok, json(ok));
       }},
      {"galois.serialization", "ambient JSON round trip", true,
       [](const Fixtures& f) {
         bool ok = true;
         for (const auto& n : {f.q2, f.n6, f.n12}) {
           AmbientPtr back = ambient_from_json(ambient_to_json(*n));
           ok = ok && back->group().table() == n->group().table() && back->field().modulus() == n->field().modulus();
         }
         return std::make_pair(ok, json(ok));
       }},
      {"galois.extension", "extending the ambient gives a surjection of groups", true,
       [](const Fixtures& f) {
         auto ext = extend_ambient(f.q2, P("x^2-3"));
         const FiniteGroup& big = ext.field->group();
         const FiniteGroup& small = f.q2->group();
         bool ok = big.order() == 4;
         std::set<int> image;
         for (int s = 0; s < big.order(); ++s) {
           image.insert(ext.pi[static_cast<std::size_t>(s)]);
           for (int t = 0; t < big.order(); ++t) {
             ok = ok && ext.pi[static_cast<std::size_t>(big.mul(s, t))] ==
                            small.mul(ext.pi[static_cast<std::size_t>(s)], ext.pi[static_cast<std::size_t>(t)]);
           }
         }
         ok = ok && static_cast<int>(image.size()) == small.order();
         return std::make_pair(ok, json(ok));
       }},
      {"dr.conjugation_diagram", "Galois points transform by conjugation", true,
       [](const Fixtures& f) {
         bool ok = true;
         for (int phi = 0; phi < 6; ++phi) {
           for (int s = 0; s < 6; ++s) ok = ok && conjugation_diagram_check(f.a6, phi, s);
         }
         return std::make_pair(ok, json(ok));
       }},
      {"dr.quadratic_hopf", "Hopf axioms for A(N6/Q(sqrt(-3)))", true,
       [](const Fixtures& f) {
         bool ok = verify_hopf_axioms(*f.a6_quad).all() && f.a6_quad->dim() == 3;
         return std::make_pair(ok, json(ok));
       }},
      {"dr.tower", "truncated absolute group restriction maps", true,
       [](const Fixtures&) {
         auto t = truncated_absolute_group({P("x^3-2"), P("x^2-2")});
         json degrees = json::array();
         for (const auto& l : t.levels) degrees.push_back(l.top->degree());
         bool ok = t.report.embedding_independent && t.report.composites_agree && t.report.injective;
         return std::make_pair(ok, json{{"level_degrees", degrees}});
       }},
      {"frobenius.dedekind", "Frobenius cycle types equal mod-p factorization types", true,
       [](const Fixtures& f) {
         bool ok = true;
         int pairs = 0;
         for (const auto& n : {f.q2, f.n6, f.c4, f.n12}) {
           for (std::uint64_t p = 3; p < 60; ++p) {
             if (!is_prime(p)) continue;
             try {
               check_good_prime(*n, p);
             } catch (const GaloisError&) {
               continue;
             }
             int sigma = frobenius_element(PrimeContext(n, p));
             for (int i = 0; i < static_cast<int>(n->polys().size()); ++i) {
               ok = ok && cycle_type(n->root_permutation(sigma, i)) == splitting_type(*n, i, p);
               ++pairs;
             }
           }
         }
         return std::make_pair(ok, json{{"pairs", pairs}});
       }},
      {"frobenius.quotient", "Frobenius is compatible with passing to a quotient", true,
       [](const Fixtures& f) {
         auto quad = make_subextension(f.n6, f.a3, whole_group(f.n6->group()));
         auto aq = build_coordinate_ring(quad);
         bool ok = true;
         for (std::uint64_t p : {5, 7, 11, 13, 31, 37}) {
           FrobeniusData dn = algebraic_frobenius(f.a6, p);
           ok = ok && frobenius_in_quotient(dn.sigma_ambient, quad) == algebraic_frobenius(aq, p).sigma;
         }
         return std::make_pair(ok, json(ok));
       }},
      {"motives.sheaf", "sections satisfy the finite sheaf condition", true,
       [](const Fixtures& f) {
         bool ok = true;
         auto subs = all_subgroups(f.n6->group());
         for (const auto& v : f.motives()) {
           for (const auto& a : subs) {
             for (const auto& b : subs) {
               if (is_subset(a, b) && is_normal_in(f.n6->group(), a, b)) ok = ok && sheaf_condition(v, a, b);
             }
           }
         }
         return std::make_pair(ok, json(ok));
       }},
      {"motives.products", "h(X x Y) is h(X) (x) h(Y)", true,
       [](const Fixtures& f) {
         bool ok = true;
         for (const auto& x : f.schemes()) {
           for (const auto& y : f.schemes()) ok = ok && isomorphic(motive_of(product(x, y).scheme), tensor(motive_of(x), motive_of(y)));
         }
         return std::make_pair(ok, json(ok));
       }},
      {"motives.tensor_realization", "de Rham realization respects tensor products", true,
       [](const Fixtures& f) {
         bool ok = true;
         auto s = f.schemes();
         for (std::size_t i = 0; i < 2; ++i) {
           for (std::size_t j = 0; j < s.size(); ++j) {
             Motive x = motive_of(s[i]), y = motive_of(s[j]);
             ok = ok && tensor_compatible(de_rham(x), de_rham(y), de_rham(tensor(x, y)));
           }
         }
         return std::make_pair(ok, json(ok));
       }},
      {"motives.finite_type", "sections stabilize at the kernel of the action", true,
       [](const Fixtures& f) {
         bool ok = true;
         for (const auto& v : f.motives()) ok = ok && finite_type_level(v).certified;
         return std::make_pair(ok, json(ok));
       }},
  };
}

}  // namespace

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names = {"all", "acceptance", "invariants"};
  return names;
}

std::vector<CheckResult> run_checks(const std::string& suite) {
  std::vector<Check> checks;
  if (suite == "all" || suite == "acceptance") {
    auto a = acceptance_checks();
    checks.insert(checks.end(), a.begin(), a.end());
  }
  if (suite == "all" || suite == "invariants") {
    auto b = invariant_checks();
    checks.insert(checks.end(), b.begin(), b.end());
  }
  if (checks.empty()) fail(ErrorCode::InvalidArgument, "unknown check suite '" + suite + "'");
  Fixtures fixtures;
  std::vector<CheckResult> out;
  for (const auto& c : checks) {
    CheckResult r{c.id, c.description, false, c.blocking, nullptr, 0};
    auto start = std::chrono::steady_clock::now();
    try {
      auto [ok, detail] = c.run(fixtures);
      r.passed = ok;
      r.detail = std::move(detail);
    } catch (const std::exception& e) {
      r.detail = {{"error", e.what()}};
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

json check_report(const std::string& suite, json& timing) {
  json checks = json::array();
  int passed = 0, failed = 0, warnings = 0;
  for (const auto& r : run_checks(suite)) {
    checks.push_back({{"id", r.id},
                      {"description", r.description},
                      {"passed", r.passed},
                      {"blocking", r.blocking},
                      {"detail", r.detail}});
    timing["checks"][r.id] = r.millis;
    if (r.passed) {
      ++passed;
    } else if (r.blocking) {
      ++failed;
    } else {
      ++warnings;
    }
  }
  return {{"suite", suite}, {"checks", checks}, {"passed", passed}, {"failed", failed}, {"warnings", warnings}};
}

bool check_report_passed(const json& report) { return report.at("failed") == 0; }

}  // namespace galoisdr
