#!/usr/bin/env python3
"""Smoke test for the welldom_py extension module.

Build the module first (either profile works):

    cargo build -p welldom-python --release

then run:

    python3 python/smoke_test.py
"""

import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        REPO / "target" / "release" / "libwelldom_py.so",
        REPO / "target" / "debug" / "libwelldom_py.so",
    ]
    built = [p for p in candidates if p.exists()]
    if not built:
        sys.exit("libwelldom_py.so not found; run `cargo build -p welldom-python` first")
    newest = max(built, key=lambda p: p.stat().st_mtime)
    staging = Path(tempfile.mkdtemp(prefix="welldom_py_"))
    shutil.copy2(newest, staging / "welldom_py.so")
    sys.path.insert(0, str(staging))
    import welldom_py

    return welldom_py


def main():
    wd = load_module()
    print(f"welldom_py {wd.__version__} loaded")

    # graphs and wellness checks
    c4 = wd.cycle(4)
    report = c4.check("well-dominated")
    assert report.is_well() and report.common_size == 2, report.record_line()
    assert report.record_line() == "well-dominated well 2 - -"

    p3 = wd.path(3)
    report = p3.check("well-dominated")
    assert not report.is_well()
    (small, large) = report.witness
    assert small[1] == [1] and large[1] == [0, 2], report.witness

    star = wd.star(3)
    assert star.check("well-total-dominated").common_size == 2
    assert not star.check("well-dominated").is_well()

    # families and chain parameters
    family = c4.family("minimal-dominating-sets")
    assert len(family) == 6 and family.size_values == [2]
    assert p3.chain_parameters().as_tuple() == (1, 2, 1, 2)
    assert c4.is_very_well_dominated() and not wd.cycle(5).is_very_well_covered()
    assert wd.path(4).recognize_bipartite_well_dominated()
    assert not wd.path(6).recognize_bipartite_well_dominated()

    # corona structure
    base = wd.path(4).is_corona_with_k1()
    assert base is not None and base.vertex_count == 2
    assert wd.cycle(4).is_corona_with_k1() is None
    assert wd.complete(3).corona_with_k1().vertex_count == 6

    # hypergraphs, reductions, and the size correspondences
    pairs = wd.Hypergraph(["a", "b", "c", "d"], [["a", "b"], ["c", "d"]])
    assert pairs.check("well-hitting-set").common_size == 2
    assert pairs.greedy_minimal_hitting_set() == ["b", "d"]

    gadget = wd.hitting_set_to_total_domination(pairs, "plain")
    assert gadget.graph.vertex_count == 8
    assert gadget.graph.is_bipartite()
    assert gadget.roles[0] == ("hub", "-") and gadget.roles[1] == ("pendant", "-")
    assert "bipartite" in gadget.guarantees

    corr = wd.verify_total_domination_reduction(pairs, "plain")
    assert corr.matched and corr.shift == 1, corr.record_line()
    assert corr.target_sizes == [3, 3, 3, 3]

    triangle = wd.Hypergraph(["a", "b", "c"], [["a", "b"], ["b", "c"], ["a", "c"]])
    corr = wd.verify_well_domination_reduction(triangle, 2)
    assert corr.matched and corr.extra == 2 and corr.target_well()

    chain_hyper = wd.Hypergraph(["a", "b", "c"], [["a", "b"], ["b", "c"]])
    corr = wd.verify_well_domination_reduction(chain_hyper, 2)
    assert corr.matched and not corr.target_well()
    side, size, solution = corr.counterexample
    assert side == "target" and size == 1, corr.record_line()

    # text formats round-trip
    text = pairs.to_text()
    assert wd.Hypergraph.parse(text).to_text() == text
    g = wd.Graph.from_edges(3, [(0, 1), (1, 2)])
    assert wd.Graph.parse(g.to_text()) == g

    # seeded generation is deterministic
    h1 = wd.random_hypergraph(seed=1, trial=0)
    h2 = wd.random_hypergraph(seed=1, trial=0)
    assert h1.to_text() == h2.to_text()
    g1 = wd.random_graph(seed=2, n=8)
    assert g1 == wd.random_graph(seed=2, n=8)

    # error surfaces as ValueError
    try:
        wd.Graph(2).check("well-total-dominated")
    except ValueError as err:
        assert "isolated" in str(err)
    else:
        raise AssertionError("expected an isolated-vertex error")

    print("smoke test passed")


if __name__ == "__main__":
    main()
