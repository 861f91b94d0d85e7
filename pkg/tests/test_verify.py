import json
from itertools import combinations

import pytest

from fs_lab import constructions as cons
from fs_lab import verify as V
from fs_lab.graph import Graph


def cliques(*blocks):
    n = max(max(b) for b in blocks) + 1
    edges = {e for b in blocks for e in combinations(sorted(b), 2)}
    return Graph.from_edges(n, sorted(edges))


def single(report):
    assert report.instances_checked == 1
    return report.hypothesis_holds[0], report.conclusion_holds[0]


def test_thm_1_4_examples():
    assert single(V.check_thm_1_4(cons.complete(6), cons.complete(6))) == (True, True)
    rep = V.check_thm_1_4(cons.cycle(6), cons.cycle(6))
    assert rep.hypothesis_holds == [False] and rep.ok and rep.vacuous == 1
    with pytest.raises(V.VerifyError):
        V.check_thm_1_4(cons.complete(5), cons.complete(6))


def test_thm_1_5_examples():
    assert single(V.check_thm_1_5(cons.complete(4), cons.complete(4))) == (True, True)
    assert V.check_thm_1_5(cons.star(5), cons.star(5)).hypothesis_holds == [False]
    for seed in range(5):
        y = cons.random_graph_min_degree(7, 4, seed=seed)
        assert single(V.check_thm_1_5(cons.complete(7), y)) == (True, True)


def test_thm_1_10_examples(k22):
    assert single(V.check_thm_1_10(k22, k22, 2)) == (True, True)
    pair = cons.thm_1_11_pair(4, 2, 4)
    rep = V.check_thm_1_10(pair.x, pair.y, 4)
    assert rep.hypothesis_holds == [False] and rep.conclusion_holds == [False]
    assert rep.ok and len(rep.evidence) == 1
    with pytest.raises(V.VerifyError):
        V.check_thm_1_10(cons.complete(4), k22, 2)


def test_prop_2_2_examples(k22):
    p4 = cons.path(4)
    assert single(V.check_prop_2_2(p4, p4)) == (True, True)
    k33 = cons.complete_bipartite(3, 3)
    rep = V.check_prop_2_2(k33, k33)
    assert rep.ok and rep.conclusion_holds == [True]
    matching = Graph.from_edges(4, [(0, 2), (1, 3)], ([0, 1], [2, 3]))
    rep = V.check_prop_2_2(matching, cons.cycle(4))
    assert rep.ok
    with pytest.raises(V.VerifyError):
        V.check_prop_2_2(cons.complete(4), k22)


def test_prop_2_2_detail_counts():
    k33 = cons.complete_bipartite(3, 3)
    verdict = V.eval_prop_2_2(k33, k33)
    assert verdict[2]["num_components"] == 2 and verdict[2]["parity_breaks"] == 0
    assert verdict[2]["edges_checked"] > 0


def test_prop_2_3_and_thm_1_11_and_prop_1_6():
    for r in (2, 3):
        assert single(V.check_prop_2_3(r)) == (True, True)
    assert single(V.check_thm_1_11(3, 2, 2)) == (True, True)
    assert single(V.check_prop_1_6(6, 5)) == (True, True)
    assert V.legal_thm_1_11_params(2) == [(1, 2), (2, 1)]


def test_wilson_suites():
    zoo = {k: g for n in (4, 5) for k, g in cons.fixture_zoo(n).items()}
    rep = V.run_wilson_suite("THM_2_6", zoo)
    assert rep.ok and rep.non_vacuous >= 2
    rep = V.run_wilson_suite("THM_2_8", {"k23": cons.complete_bipartite(2, 3)})
    assert rep.hypothesis_holds == [True] and rep.conclusion_holds == [True]
    with pytest.raises(V.VerifyError):
        V.run_wilson_suite("THM_1_4", zoo)


def test_census_symmetry_examples():
    for x, y in [(cons.star(5), cons.cycle(5)), (cons.complete(4), cons.path(4))]:
        assert single(V.check_census_symmetry(x, y)) == (True, True)


def test_lemma_4_1_almost_wilsonian_case():
    rep = V.check_lemma_4_1(cons.complete(8), range(6))
    assert rep.ok and rep.stats == {"almost_wilsonian": 1}


def test_lemma_4_1_vacuous():
    rep = V.check_lemma_4_1(cons.cycle(8), range(8))
    assert rep.hypothesis_holds == [False] and rep.conclusion_holds == [None] and rep.ok


def test_lemma_4_1_two_components():
    g = cliques(range(5), range(5, 10))
    rep = V.check_lemma_4_1(g, range(10))
    assert rep.ok and rep.non_vacuous == 1 and rep.stats == {"two_components": 1}


def test_lemma_4_1_cut_vertex_case():
    g = cliques(range(5), range(4, 9))
    rep = V.check_lemma_4_1(g, range(9))
    assert rep.ok and rep.stats == {"cut_vertex": 1}
    assert rep.evidence == []


def test_lemma_4_1_triangle_blocks_flagged():
    # Two K4 blocks on a shared vertex satisfy the size/degree hypothesis, yet the
    # blocks left after removing the cut vertex are triangles, which are cycle
    # graphs and so not Wilsonian.  The checker applies the statement as written
    # and must report this instance.
    g = cliques(range(4), range(3, 7))
    rep = V.check_lemma_4_1(g, range(7))
    assert rep.hypothesis_holds == [True] and rep.conclusion_holds == [False]
    row = rep.counterexamples[0]
    assert row["detail"]["failed"] == "no_cut_vertex_split"
    assert V.replay(json.loads(json.dumps(row))) == (True, False)


def test_lemma_4_1_suite_small():
    rep = V.run_lemma_4_1_suite(7, 100, seed=3)
    assert rep.non_vacuous >= V.MIN_NON_VACUOUS and rep.instances_checked == 100


def test_lemma_6_2_exhaustive_r2():
    rep = V.check_lemma_6_2(2)
    assert rep.ok and rep.non_vacuous == rep.instances_checked > 0


def test_lemma_6_2_aligned_sigma_needs_nothing():
    k = cons.complete_bipartite(3, 3)
    hyp, concl, detail = V.eval_lemma_6_2(k, k, tuple(range(6)), 0, 3)
    assert hyp and concl and detail["sequence_length"] == 0


def test_lemma_6_2_orientation():
    for r in (2, 3):
        k = cons.complete_bipartite(r, r)
        for sigma in [tuple(range(2 * r)), (1, 0) + tuple(range(2, 2 * r)), tuple(reversed(range(2 * r)))]:
            for u, v in V._lemma_6_2_pairs(k, k, sigma):
                start, a_x, a_y, _ = V.orient_lemma_6_2(k, k, sigma, u, v)
                inv = [start.index(w) for w in range(2 * r)]
                assert u in a_y and inv[u] in a_x
                count = sum(1 for w in a_y - {u} if inv[w] in a_x)
                assert 2 * count >= r - 1
    with pytest.raises(V.VerifyError):
        V.orient_lemma_6_2(k, k, tuple(range(6)), 0, 1)


def test_lemma_6_2_r3_and_limits():
    rep = V.check_lemma_6_2(3, seed=2, trials=15)
    assert rep.ok and rep.instances_checked == 15
    with pytest.raises(V.VerifyError):
        V.check_lemma_6_2(5)


def test_cor_1_12():
    rep = V.check_cor_1_12(2)
    assert rep.ok and rep.instances_checked == 2
    rep = V.check_cor_1_12(3, trials=4, seed=1)
    assert rep.ok and any("unadjudicated" in n for n in rep.notes)
    with pytest.raises(V.VerifyError):
        V.check_cor_1_12(6)


def test_conjecture_searches():
    rep = V.search_conjecture_8_1(7, 3, 5, trials=5, seed=0)
    assert rep.instances_checked == 5 and rep.non_vacuous == 5
    rep = V.search_conjecture_8_1(6, 5, 2, trials=3, seed=0)
    assert rep.ok
    with pytest.raises(V.VerifyError):
        V.search_conjecture_8_1(7, 2, 3)
    with pytest.raises(V.VerifyError):
        V.search_conjecture_8_1(7, 7, 7)
    rep = V.search_conjecture_8_2(7, 3, 4, trials=5, seed=0)
    assert rep.counterexamples == [] and "slack" in rep.stats


def test_report_invariant_and_json():
    rep = V.run_thm_1_4_suite(6, 4, 4, trials=10, seed=5)
    d = rep.to_json()
    assert "elapsed" not in d and "elapsed" in rep.to_json(timing=True)
    flagged = {row["index"] for row in rep.counterexamples}
    assert flagged == {i for i, (h, c) in enumerate(zip(rep.hypothesis_holds, rep.conclusion_holds))
                       if h and c is False}
    assert json.loads(json.dumps(d)) == d


def test_suite_threads_deterministic():
    one = V.run_thm_1_5_suite(6, 3, 4, trials=8, seed=11, threads=1).to_json()
    three = V.run_thm_1_5_suite(6, 3, 4, trials=8, seed=11, threads=3).to_json()
    assert json.dumps(one, sort_keys=True) == json.dumps(three, sort_keys=True)


def test_replay_evidence_rows():
    rep = V.check_thm_1_11(2, 1, 2)
    assert V.replay(rep.evidence[0]) == (True, True)


def test_merge_offsets_indices():
    a = V.check_lemma_4_1(cliques(range(4), range(3, 7)), range(7))
    b = V.check_lemma_4_1(cliques(range(4), range(3, 7)), range(7))
    a.merge(b)
    assert [row["index"] for row in a.counterexamples] == [0, 1]


def test_size_histogram():
    assert V.size_histogram([12, 12, 1]) == [[12, 2], [1, 1]]
