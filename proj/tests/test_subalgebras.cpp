#include "doctest.h"

#include <algorithm>

#include "jord/catalog.hpp"
#include "jord/subalgebras.hpp"

using namespace jord;

namespace {

Element el(const SuperAlgebra& a, const char* label) {
  return Element::basis(a, a.index_of(label));
}

}  // namespace

TEST_CASE("graded spans split generators by parity") {
  SuperAlgebra k10 = make_k10_table();
  Element mixed = el(k10, "e") + el(k10, "p1");
  GradedSubspace s = graded_span(k10, {mixed});
  CHECK(s.even.dim() == 1);
  CHECK(s.odd.dim() == 1);
  CHECK(label_span(k10, {"e", "f", "p1"}).dim() == 3);
  CHECK(full_graded(k10).dim() == 10);
  auto elems = graded_basis_elements(k10, s);
  REQUIRE(elems.size() == 2);
  CHECK(elems[0] == el(k10, "e"));
  CHECK(elems[1] == el(k10, "p1"));
}

TEST_CASE("span closure adjoins products until stable") {
  SuperAlgebra k10 = make_k10_table();
  // p1 q1 = 2 c1 and nothing further: closure is {c1 | p1, q1}
  GradedSubspace s = span_closure(k10, {el(k10, "p1"), el(k10, "q1")});
  CHECK(s.even.dim() == 1);
  CHECK(s.odd.dim() == 2);
  CHECK(is_subalgebra(k10, s));
  Vec c1_even(6);
  c1_even[size_t(k10.index_of("c1"))] = rat(1);
  CHECK(s.even.contains(c1_even));
}

TEST_CASE("closure of the idempotents with p1,q1") {
  SuperAlgebra k10 = make_k10_table();
  GradedSubspace s =
      span_closure(k10, {el(k10, "e"), el(k10, "f"), el(k10, "p1"), el(k10, "q1")});
  CHECK(s.even.dim() == 3);
  CHECK(s.odd.dim() == 2);
  CHECK(is_subalgebra(k10, s));
  // a single odd generator closes to almost nothing: p1 p1 = 0
  GradedSubspace tiny = span_closure(k10, {el(k10, "p1")});
  CHECK(tiny.dim() == 1);
}

TEST_CASE("ideal and solvability predicates") {
  SuperAlgebra k10 = make_k10_table();
  GradedSubspace whole = full_graded(k10);
  GradedSubspace b3 = maximal_subalgebra(k10, MaximalKind::iii);
  GradedSubspace r3 = span_closure(k10, {el(k10, "c1"), el(k10, "a") + el(k10, "b"),
                                         el(k10, "p1") + el(k10, "q1")});
  CHECK(r3.even.dim() == 2);
  CHECK(r3.odd.dim() == 1);
  CHECK(is_ideal(k10, r3, b3));
  CHECK(!is_ideal(k10, r3, whole));
  CHECK(is_solvable(k10, r3));
  CHECK(!is_solvable(k10, whole));
  // containment is a precondition, not a silent false
  GradedSubspace outside = label_span(k10, {"c2"});
  CHECK_THROWS_AS(is_ideal(k10, outside, b3), std::invalid_argument);
}

TEST_CASE("materialized subalgebras carry a verified embedding") {
  SuperAlgebra k10 = make_k10_table();
  GradedSubspace ev = full_graded(k10);
  ev.odd = Subspace::span(4, {});
  SubAlgebra sub = materialize(k10, ev, "even-part");
  CHECK(sub.alg->dim() == 6);
  CHECK(sub.alg->dim_odd == 0);
  CHECK(is_homomorphism(sub.embedding).pass);
  CHECK(check_jordan(*sub.alg).pass);
  // labels are the printed rows
  CHECK(sub.alg->basis[0] == "e");
  // not product-closed: the odd part alone
  GradedSubspace odd_only = full_graded(k10);
  odd_only.even = Subspace::span(6, {});
  CHECK(!is_subalgebra(k10, odd_only));
  CHECK_THROWS_AS(materialize(k10, odd_only, "bad"), Error);
}

TEST_CASE("quotients are verified presentations") {
  SuperAlgebra k10 = make_k10_table();
  GradedSubspace b = maximal_subalgebra(k10, MaximalKind::iv);
  GradedSubspace r = span_closure(k10, {el(k10, "c1"), el(k10, "p1"), el(k10, "q1")});
  QuotientPresentation q = quotient(k10, b, r);
  CHECK(q.quotient->dim() == 4);
  CHECK(q.quotient->dim_odd == 0);
  CHECK(is_homomorphism(q.projection).pass);
  // representatives keep their table names
  CHECK(q.quotient->index_of("e") >= 0);
  CHECK(q.quotient->index_of("a") >= 0);
  CHECK(q.quotient->index_of("b") >= 0);
  CHECK(q.quotient->index_of("f") >= 0);
  Element qa = Element::basis(*q.quotient, q.quotient->index_of("a"));
  Element qe = Element::basis(*q.quotient, q.quotient->index_of("e"));
  CHECK((qa * qa) == qe.scaled(rat(4)));
  // r must be an ideal of b
  GradedSubspace not_ideal = label_span(k10, {"e"});
  CHECK_THROWS_AS(quotient(k10, b, not_ideal), std::invalid_argument);
}

TEST_CASE("the four distinguished subalgebras have the catalogued shapes") {
  SuperAlgebra k10 = make_k10_table();
  const std::pair<MaximalKind, std::pair<int, int>> shapes[] = {
      {MaximalKind::i, {6, 0}},
      {MaximalKind::ii, {3, 2}},
      {MaximalKind::iii, {4, 3}},
      {MaximalKind::iv, {5, 2}},
  };
  Vec e_plus_f(6);
  e_plus_f[0] = rat(1);
  e_plus_f[5] = rat(1);
  for (const auto& [kind, dims] : shapes) {
    GradedSubspace s = maximal_subalgebra(k10, kind);
    CHECK(s.even.dim() == dims.first);
    CHECK(s.odd.dim() == dims.second);
    CHECK(is_subalgebra(k10, s));
    CHECK(s.dim() < 10);
    CHECK(s.even.contains(e_plus_f));  // the unit stays inside
  }
  CHECK(kind_from_name("iii") == MaximalKind::iii);
  CHECK(kind_from_name("v") == std::nullopt);
  CHECK(std::string(kind_name(MaximalKind::ii)) == "ii");
}

TEST_CASE("the maximality probe accepts the distinguished subalgebras") {
  SuperAlgebra k10 = make_k10_table();
  for (MaximalKind kind : {MaximalKind::i, MaximalKind::ii, MaximalKind::iii, MaximalKind::iv}) {
    ProbeResult res = maximality_probe(k10, maximal_subalgebra(k10, kind), 25, 5);
    CHECK(res.probably_maximal);
    CHECK(!res.witness.has_value());
    CHECK(res.trials_run == 25);
    CHECK(res.proper_envelope == maximal_subalgebra(k10, kind));
  }
}

TEST_CASE("the probe refutes a non-maximal subalgebra with a concrete witness") {
  SuperAlgebra k10 = make_k10_table();
  GradedSubspace small = label_span(k10, {"e", "f", "c1", "p1", "q1"});
  REQUIRE(is_subalgebra(k10, small));
  ProbeResult res = maximality_probe(k10, small, 25, 5);
  CHECK(!res.probably_maximal);
  REQUIRE(res.witness.has_value());
  CHECK(format_element(k10, *res.witness) == "a");
  REQUIRE(res.witness_closure.has_value());
  CHECK(res.witness_closure->even.dim() == 4);
  CHECK(res.witness_closure->odd.dim() == 2);
  // the greedy proper saturation lands exactly on the five-two subalgebra
  CHECK(res.proper_envelope == maximal_subalgebra(k10, MaximalKind::iv));
}

TEST_CASE("the family parameter is recovered as an unordered pair") {
  DtInvariant inv = dt_parameter(make_dt(rat(-3)));
  CHECK(!inv.degenerate);
  CHECK(inv.t_pair.first == rat(-3));
  CHECK(inv.t_pair.second == rat(-1, 3));
  // the pair is a true isomorphism invariant: t and 1/t give the same pair
  DtInvariant inv2 = dt_parameter(make_dt(rat(-1, 3)));
  CHECK(inv2.t_pair == inv.t_pair);
  DtInvariant inv3 = dt_parameter(make_dt(rat(1)));
  CHECK(inv3.t_pair.first == rat(1));
  CHECK(inv3.t_pair.second == rat(1));
  DtInvariant half = dt_parameter(make_dt(rat(-3, 2)));
  CHECK(half.t_pair.first == rat(-3, 2));
  CHECK(half.t_pair.second == rat(-2, 3));
  CHECK(!half.str().empty());
}

TEST_CASE("degenerate inputs to the parameter extraction give reasons") {
  SuperAlgebra k3 = make_k3();
  CHECK_THROWS_AS(dt_parameter(k3), std::invalid_argument);  // wrong dimensions

  // u v = 0: the odd product has no idempotent component
  SuperAlgebra flat = SuperAlgebra::from_entries(
      "flat", 2, 2, {"e", "f", "u", "v"},
      {{0, 0, 0, rat(1)},
       {1, 1, 1, rat(1)},
       {0, 2, 2, rat(1, 2)},
       {2, 0, 2, rat(1, 2)},
       {0, 3, 3, rat(1, 2)},
       {3, 0, 3, rat(1, 2)},
       {1, 2, 2, rat(1, 2)},
       {2, 1, 2, rat(1, 2)},
       {1, 3, 3, rat(1, 2)},
       {3, 1, 3, rat(1, 2)}},
      /*implicit_zero_rows=*/true);
  DtInvariant inv = dt_parameter(flat);
  CHECK(inv.degenerate);
  CHECK(!inv.reason.empty());
}

TEST_CASE("the subalgebra overload extracts the parameter through a materialization") {
  SuperAlgebra k10 = make_k10_table();
  GradedSubspace b3 = maximal_subalgebra(k10, MaximalKind::iii);
  GradedSubspace r3 = span_closure(k10, {el(k10, "c1"), el(k10, "a") + el(k10, "b"),
                                         el(k10, "p1") + el(k10, "q1")});
  QuotientPresentation q = quotient(k10, b3, r3);
  DtInvariant inv = dt_parameter(*q.quotient);
  CHECK(!inv.degenerate);
  CHECK(inv.t_pair.first == rat(-3));
  CHECK(inv.t_pair.second == rat(-1, 3));
}

TEST_CASE("isometries mapping prescribed vectors") {
  Matrix g = Matrix::identity(3);
  Vec v1{rat(1), rat(0), rat(0)};
  Vec v2{rat(0), rat(1), rat(0)};
  Matrix w = witt_map(g, v1, v2);
  CHECK((w * v1) == v2);
  CHECK((w.transpose() * g * w) == g);
  // unequal norms are rejected
  Vec v3{rat(1), rat(1), rat(0)};
  CHECK_THROWS_AS(witt_map(g, v1, v3), Error);
  // isotropic input is rejected
  Matrix h(2, 2);
  h.at(0, 1) = rat(1);
  h.at(1, 0) = rat(1);
  CHECK_THROWS_AS(witt_map(h, Vec{rat(1), rat(0)}, Vec{rat(0), rat(1)}), Error);

  // the pair used by the conjugation machinery
  Matrix q4(4, 4);
  q4.at(0, 0) = rat(4);
  q4.at(1, 1) = rat(-4);
  q4.at(2, 3) = rat(2);
  q4.at(3, 2) = rat(2);
  Vec va{rat(1), rat(0), rat(0), rat(0)};
  Vec vt{rat(0), rat(0), rat(-1), rat(-1)};
  Matrix s = witt_map(q4, va, vt);
  CHECK((s * va) == vt);
  CHECK((s.transpose() * q4 * s) == q4);
}

TEST_CASE("fixed subalgebras of verified automorphisms") {
  SuperAlgebra k10 = make_k10_table();
  GradedSubspace ev = fixed_subalgebra(grading_automorphism(k10));
  CHECK(ev.even.dim() == 6);
  CHECK(ev.odd.dim() == 0);

  SuperAlgebra tensor = make_k10_tensor();
  GradedSubspace fx = exchange_fixed_span(k10, tensor);
  CHECK(fx.even.dim() == 3);
  CHECK(fx.odd.dim() == 2);
  CHECK(is_subalgebra(k10, fx));
  // e, f and c1+c2 are fixed
  Vec c1c2(6);
  c1c2[size_t(k10.index_of("c1"))] = rat(1);
  c1c2[size_t(k10.index_of("c2"))] = rat(1);
  CHECK(fx.even.contains(c1c2));
}

TEST_CASE("conjugation witnesses carry the subalgebras onto their descriptions") {
  SuperAlgebra k10 = make_k10_table();
  SuperAlgebra tensor = make_k10_tensor();

  Morphism wii = conjugation_witness(k10, tensor, MaximalKind::ii);
  CHECK(wii.from->dim() == 10);
  CHECK(is_isomorphism(wii));
  CHECK(image_subspace(wii, maximal_subalgebra(k10, MaximalKind::ii)) ==
        exchange_fixed_span(k10, tensor));

  Morphism wiii = conjugation_witness(k10, tensor, MaximalKind::iii);
  GradedSubspace target3 =
      label_span(tensor, {"1", "e@e", "x@x", "x@y", "x@e", "e@y", "e@x"});
  CHECK(image_subspace(wiii, maximal_subalgebra(k10, MaximalKind::iii)) == target3);

  Morphism wiv = conjugation_witness(k10, tensor, MaximalKind::iv);
  GradedSubspace target4 =
      label_span(tensor, {"1", "e@e", "x@x", "x@y", "y@y", "x@e", "e@y"});
  CHECK(image_subspace(wiv, maximal_subalgebra(k10, MaximalKind::iv)) == target4);

  CHECK_THROWS_AS(conjugation_witness(k10, tensor, MaximalKind::i), std::invalid_argument);
}

TEST_CASE("structure reports verify every decomposition claim") {
  SuperAlgebra k10 = make_k10_table();
  for (MaximalKind kind : {MaximalKind::i, MaximalKind::iii, MaximalKind::iv}) {
    StructureReport rep = structure_report(k10, kind);
    CHECK(rep.ok());
    for (const auto& row : rep.rows) CHECK(row.status == ClaimStatus::PASS);
    CHECK(!rep.rows.empty());
  }
}

TEST_CASE("the second subalgebra reports its invariant deviation loudly") {
  SuperAlgebra k10 = make_k10_table();
  StructureReport rep = structure_report(k10, MaximalKind::ii);
  CHECK(rep.ok());  // deviations are not failures
  int deviations = 0;
  for (const auto& row : rep.rows)
    if (row.status == ClaimStatus::DEVIATION) {
      ++deviations;
      CHECK(!row.detail.empty());
    }
  CHECK(deviations == 1);
}
