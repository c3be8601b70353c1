#include <gtest/gtest.h>

#include "json.hpp"

#include "hyperclust/builders.hpp"
#include "hyperclust/corpus.hpp"
#include "hyperclust/graph_params.hpp"
#include "hyperclust/property_lab.hpp"
#include "test_support.hpp"

using namespace hyperclust;

namespace {

const Corpus& small_corpus() {
  static const Corpus c = generate_corpus(CorpusBounds{4, 4, 4, 4, 5});
  return c;
}

SchemeSpec rep(std::vector<Hypergraph> motifs, std::size_t k) {
  return SchemeSpec::representable(MotifSet{std::move(motifs), false, false}, OverlapThreshold(k));
}

MotifSet motifs(std::vector<Hypergraph> m) { return MotifSet{std::move(m), false, false}; }

}  // namespace

TEST(Corpus, TinyBoundsGiveSixClasses) {
  auto c = generate_corpus(CorpusBounds{2, 1, 2, 2, 0});
  EXPECT_EQ(c.graphs.size(), 6u);
  EXPECT_EQ(c.graphs.front()->vertex_count(), 0u);
}

TEST(Corpus, SimpleGraphCounts) {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(simple_graphs_up_to_iso(n).size(), expected[n]) << n;
}

TEST(Corpus, MembersArePairwiseNonIsomorphic) {
  const auto& c = small_corpus();
  std::set<CanonicalForm> forms;
  for (const auto& g : c.graphs) {
    EXPECT_TRUE(forms.insert(canonical_labeling(*g).form).second);
    std::set<VertexSet> distinct(g->edge_sets().begin(), g->edge_sets().end());
    EXPECT_EQ(distinct.size(), g->edge_count());  // no parallel edges
  }
}

TEST(Corpus, EveryMemberHasItsIdentity) {
  const auto& c = small_corpus();
  std::vector<int> seen(c.graphs.size(), 0);
  for (const auto& cm : c.morphisms) {
    EXPECT_TRUE(validate_graph_morphism(cm.morphism.source(), cm.morphism.target(), cm.morphism.map()).ok());
    if (cm.kind == MorphismKind::identity) ++seen[*cm.source_index];
  }
  for (auto s : seen) EXPECT_EQ(s, 1);
}

TEST(Corpus, GuardRefusesLargeBounds) {
  CorpusBounds b{7, 10, 4, 4, 6, 1000};
  try {
    generate_corpus(b);
    FAIL() << "expected RefusalError";
  } catch (const RefusalError& e) {
    EXPECT_GT(e.estimate(), 1000u);
  }
}

TEST(Corpus, JsonlRoundTrip) {
  auto c = generate_corpus(CorpusBounds{3, 3, 3, 3, 4});
  auto text = corpus_to_jsonl(c);
  auto back = corpus_from_jsonl(text, c.bounds);
  ASSERT_EQ(back.graphs.size(), c.graphs.size());
  for (std::size_t i = 0; i < c.graphs.size(); ++i) EXPECT_EQ(*back.graphs[i], *c.graphs[i]);
  ASSERT_EQ(back.simple_graphs.size(), c.simple_graphs.size());
  EXPECT_EQ(back.morphisms.size(), c.morphisms.size());
  EXPECT_EQ(corpus_to_jsonl(back), text);
}

TEST(Corpus, AugmentAddsExtrasAndTheirRestrictions) {
  auto c = generate_corpus(CorpusBounds{3, 3, 3, 3, 0});
  const auto before = c.graphs.size();
  augment_corpus(c, {default_sigma_motif()});
  EXPECT_GT(c.graphs.size(), before);
  EXPECT_EQ(std::count_if(c.graphs.begin(), c.graphs.end(),
                          [](const GraphPtr& g) { return iso_check(*g, default_sigma_motif()).has_value(); }),
            1);
  std::size_t into_d = 0;
  for (const auto& cm : c.morphisms) {
    if (cm.morphism.target() == default_sigma_motif()) ++into_d;
  }
  EXPECT_GE(into_d, 64u);  // identity plus every proper restriction
}

TEST(Check, ToyMatrix) {
  const auto& c = small_corpus();
  struct Row {
    ToyScheme id;
    bool excisive;
    bool functorial;
  };
  for (auto row : {Row{ToyScheme::noprops, false, false}, Row{ToyScheme::always_one_part_except_k2, true, false},
                   Row{ToyScheme::component_rule, false, true}}) {
    auto s = SchemeSpec::toy(row.id);
    auto ex = check_excisive(s, c);
    auto fn = check_functorial(s, c);
    EXPECT_EQ(ex.pass, row.excisive) << toy_name(row.id);
    EXPECT_EQ(fn.pass, row.functorial) << toy_name(row.id);
    for (const auto* report : {&ex, &fn}) {
      if (report->pass) continue;
      ASSERT_FALSE(report->counterexamples.empty());
      EXPECT_GE(report->failures, report->counterexamples.size());
      for (const auto& cx : report->counterexamples) EXPECT_TRUE(replay(*report, {s}, cx));
    }
  }
  auto k2 = rep({complete_graph(2)}, 1);
  EXPECT_TRUE(check_excisive(k2, c).pass);
  EXPECT_TRUE(check_functorial(k2, c).pass);
}

TEST(Check, NopropsExcisionCounterexample) {
  auto r = check_excisive(SchemeSpec::toy(ToyScheme::noprops), small_corpus());
  bool saw_two_k2 = false;
  for (const auto& cx : r.counterexamples) {
    const auto& g = *cx.graphs[0];
    if (g.vertex_count() == 4 && g.edge_count() == 2 && g.is_simple()) saw_two_k2 = true;
  }
  EXPECT_TRUE(saw_two_k2);
}

TEST(Check, ParallelJobsAgree) {
  auto s = SchemeSpec::toy(ToyScheme::noprops);
  auto one = check_functorial(s, small_corpus(), CheckOptions{1, 5, false});
  auto many = check_functorial(s, small_corpus(), CheckOptions{4, 5, false});
  EXPECT_EQ(report_to_json(one), report_to_json(many));
  EXPECT_EQ(one.counterexamples.size(), 5u);
}

TEST(Check, SimpleGraphListForClassic) {
  CheckOptions o;
  o.simple_graphs = true;
  auto r = check_excisive(SchemeSpec::classic(), small_corpus(), o);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(*r.statistic("graphs"), small_corpus().simple_graphs.size());
  auto eq = check_scheme_equal(SchemeSpec::classic(), rep({complete_graph(2)}, 1), small_corpus(), o);
  EXPECT_TRUE(eq.pass);
}

TEST(Check, RefinesAndEqual) {
  const auto& c = small_corpus();
  auto e3 = rep({complete_edge(3)}, 2);
  EXPECT_TRUE(check_refines(e3, e3, c).pass);
  EXPECT_TRUE(check_scheme_equal(e3, e3, c).pass);
  auto differ = check_scheme_equal(rep({complete_graph(2)}, 1), e3, c);
  ASSERT_FALSE(differ.pass);
  std::vector<SchemeSpec> pair{rep({complete_graph(2)}, 1), e3};
  for (const auto& cx : differ.counterexamples) EXPECT_TRUE(replay(differ, pair, cx));
}

TEST(Check, ThresholdMattersForTriples) {
  // Two triples meeting in one vertex need five vertices.
  auto c = generate_corpus(CorpusBounds{5, 2, 3, 0, 0});
  auto r = check_scheme_equal(rep({complete_edge(3)}, 2), rep({complete_edge(3)}, 1), c);
  ASSERT_FALSE(r.pass);
  ASSERT_FALSE(r.counterexamples.empty());
  std::vector<SchemeSpec> pair{rep({complete_edge(3)}, 2), rep({complete_edge(3)}, 1)};
  for (const auto& cx : r.counterexamples) EXPECT_TRUE(replay(r, pair, cx));
}

TEST(Check, PathMotifIsRedundantOverCompleteEdges) {
  std::vector<Hypergraph> edges;
  for (std::size_t n = 2; n <= 5; ++n) edges.push_back(complete_edge(n));
  auto with_path = edges;
  with_path.push_back(path_graph(3));
  EXPECT_TRUE(check_scheme_equal(rep(edges, 1), rep(with_path, 1), small_corpus()).pass);
}

TEST(Check, NopropsFunctorialityFailsOnEdgelessPairIntoK2) {
  auto r = check_functorial(SchemeSpec::toy(ToyScheme::noprops), small_corpus(), CheckOptions{1, 100000, false});
  ASSERT_FALSE(r.pass);
  bool saw = false;
  for (const auto& cx : r.counterexamples) {
    if (cx.graphs.size() != 2) continue;
    const auto& src = *cx.graphs[0];
    const auto& dst = *cx.graphs[1];
    if (src.vertex_count() == 2 && src.edge_count() == 0 && dst == complete_graph(2)) saw = true;
  }
  EXPECT_TRUE(saw);
}

TEST(Check, ReportJson) {
  auto r = check_excisive(SchemeSpec::toy(ToyScheme::noprops), small_corpus(), CheckOptions{1, 2, false});
  auto j = nlohmann::json::parse(report_to_json(r));
  EXPECT_EQ(j["property"], "excisive");
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["counterexamples"].size(), 2u);
  EXPECT_TRUE(j["counterexamples"][0].contains("part"));
}

TEST(Hull, SpannedAndUnchangedAgree) {
  const auto& c = small_corpus();
  auto same = hull_check(motifs({complete_edge(3)}), complete_edge(3), c);
  EXPECT_TRUE(same.pass);
  EXPECT_EQ(*same.detail("spanned"), "true");
  EXPECT_EQ(*same.detail("edge_sets_unchanged"), "true");

  auto p3 = hull_check(motifs({complete_graph(2)}), path_graph(3), c);
  EXPECT_TRUE(p3.pass);
  EXPECT_EQ(*p3.detail("spanned"), "false");
  EXPECT_EQ(*p3.detail("edge_sets_unchanged"), "false");
  EXPECT_GT(*p3.statistic("differing_graphs"), 0u);

  auto empty = hull_check(motifs({}), complete_graph(1), c);
  EXPECT_TRUE(empty.pass);
  EXPECT_EQ(*empty.detail("spanned"), "false");

  // E_3 has no image in E_4, so Φ_{E_3}(E_4) is edgeless.
  auto e4 = hull_check(motifs({complete_edge(3)}), complete_edge(4), c);
  EXPECT_TRUE(e4.pass);
  EXPECT_EQ(*e4.detail("spanned"), "false");
}

TEST(Hull, SpannedMotifNeverChangesPhi) {
  auto c = generate_corpus(CorpusBounds{3, 3, 3, 3, 0});
  // Φ_{K_2,K_3}(K_3) contains the all-vertex triangle image.
  auto r = hull_check(motifs({complete_graph(2), complete_graph(3)}), complete_graph(3), c);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(*r.detail("spanned"), "true");
  EXPECT_THROW(hull_check(motifs({}), Hypergraph{}, c), DomainError);
}

TEST(ConnectedHull, HullMotifWithThresholdTwo) {
  auto r = connected_hull_check(motifs({complete_edge(3)}), hull_motif(), OverlapThreshold(2), small_corpus(),
                                {hull_host()});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(*r.detail("k_connected"), "true");
  EXPECT_EQ(*r.detail("forward_holds"), "true");
  EXPECT_EQ(*r.detail("reverse_asserted"), "false");
  // H_6 splits under {E_3} but not once G_4 is adjoined.
  EXPECT_EQ(*r.detail("schemes_equal"), "false");
  EXPECT_EQ(*r.detail("reverse_holds"), "false");
}

TEST(ConnectedHull, DisjointTriplesAreNotConnected) {
  auto two = hctest::graph(6, {{0, 1, 2}, {3, 4, 5}});
  auto r = connected_hull_check(motifs({complete_edge(3)}), two, OverlapThreshold(1), small_corpus());
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(*r.detail("k_connected"), "false");
  EXPECT_EQ(*r.detail("schemes_equal"), "false");
  EXPECT_EQ(*r.detail("reverse_asserted"), "true");
}

TEST(ConnectedHull, ThresholdOneBothDirections) {
  const auto& c = small_corpus();
  const std::vector<Hypergraph> gs{path_graph(3), complete_graph(3), cycle_graph(4), hull_motif(), complete_edge(3)};
  for (const auto& g : gs) {
    auto r = connected_hull_check(motifs({complete_graph(2)}), g, OverlapThreshold(1), c);
    EXPECT_TRUE(r.pass) << report_to_json(r);
  }
}

TEST(Witness, TailLengths) {
  for (std::size_t m = 0; m <= 3; ++m) {
    std::vector<Hypergraph> family;
    for (std::size_t i = 0; i <= m; ++i) family.push_back(tailed_triangle(i));
    auto w = finite_rep_witness(family);
    EXPECT_EQ(w.r, m);
    EXPECT_EQ(w.witness, tailed_triangle(m + 1));
    EXPECT_FALSE(w.family_connected);
    EXPECT_TRUE(w.self_connected);
    EXPECT_TRUE(w.verdict());
  }
}

TEST(Witness, RejectsBadFamilies) {
  EXPECT_THROW(finite_rep_witness({}), DomainError);
  EXPECT_THROW(finite_rep_witness({path_graph(3)}), DomainError);
  EXPECT_THROW(finite_rep_witness({complete_edge(3)}), DomainError);
  auto k3_plus_isolated = hctest::graph(4, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_THROW(finite_rep_witness({k3_plus_isolated}), DomainError);
  auto w = finite_rep_witness({complete_graph(4), tailed_triangle(2)});
  EXPECT_EQ(w.r, 2u);
}

TEST(Search, SmallBoundsAreExhausted) {
  SearchBounds b;
  b.max_vertices = 3;
  auto out = search_equal_parts_example(b, 1);
  EXPECT_FALSE(out.found());
  EXPECT_TRUE(out.exhaustive);
  EXPECT_EQ(out.status(), "exhausted");
  EXPECT_GT(out.examined, 0u);
}

TEST(Search, DeterministicForASeed) {
  SearchBounds b{6, 8, 3, 500};
  auto a = search_equal_parts_example(b, 7);
  auto c = search_equal_parts_example(b, 7);
  EXPECT_EQ(a.found(), c.found());
  EXPECT_EQ(a.examined, c.examined);
  EXPECT_EQ(a.transcript, c.transcript);
  if (a.found()) {
    EXPECT_EQ(*a.witness, *c.witness);
  }
}

TEST(Search, ValidatorAgreesWithOracle) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    auto g = hctest::random_hypergraph(rng, 1 + rng() % 7, rng() % 9, 3);
    std::size_t covering = 0;
    for (const auto& p : hctest::naive_pi_k(g.edge_sets(), 2, false)) covering += p == g.all_vertices();
    // Distinct components with the same union collapse to one part, so count components directly.
    auto lg = k_line_graph(g, OverlapThreshold(2));
    auto comps = line_graph_components(lg);
    std::vector<VertexSet> unions(comps.count);
    for (std::size_t i = 0; i < lg.nodes.size(); ++i) {
      unions[comps.component_of[i]] = set_union(unions[comps.component_of[i]], lg.nodes[i]);
    }
    const auto full = static_cast<std::size_t>(std::count(unions.begin(), unions.end(), g.all_vertices()));
    EXPECT_EQ(validate_equal_parts_witness(g), full >= 2) << trial;
    EXPECT_LE(covering, 1u);
  }
}

TEST(Search, LargerBoundsWitnessValidates) {
  SearchBounds b{10, 20, 3, 2000};
  auto out = search_equal_parts_example(b, 1);
  if (out.found()) {
    std::vector<std::string> transcript;
    EXPECT_TRUE(validate_equal_parts_witness(*out.witness, &transcript));
    EXPECT_FALSE(transcript.empty());
    EXPECT_FALSE(out.transcript.empty());
  }
}
