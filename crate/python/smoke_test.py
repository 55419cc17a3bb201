"""Smoke test for the pydichroma extension module.

Build and install it first, e.g. ``pip install --no-build-isolation ./crates/python``
(or ``maturin develop -m crates/python/Cargo.toml``), then run this file
directly or with pytest.
"""

import pydichroma as dc


def test_digraph_round_trip():
    c3 = dc.Digraph(3, [(0, 1), (1, 2), (2, 0)])
    assert c3.order == 3 and c3.arc_count == 3
    same = dc.Digraph.from_digraph6(c3.to_digraph6())
    assert same == c3
    assert dc.Digraph.parse(c3.to_arc_list()) == c3
    relabelled = dc.Digraph(3, [(1, 0), (0, 2), (2, 1)])
    assert c3.is_isomorphic(relabelled)
    assert c3.canonical_cert() == relabelled.canonical_cert()


def test_dicolouring():
    k, colours = dc.st11().dichromatic_number()
    assert k == 4
    assert dc.st11().verify_dicolouring(4, colours)
    g = dc.dicritical_7_20()
    assert g.k_dicolouring(2) is None
    assert g.k_dicolouring(2, sat=True) is None
    assert g.is_dicritical(3)
    report = g.criticality_report(3)
    assert report["is_dicritical"] and len(report["arcs"]) == 20


def test_census_and_bounds():
    r = dc.census(7, 3)
    assert (r["total"], r["min_arcs"], r["unique"]) == (3, 20, True)
    assert dc.census(6, 3)["total"] == 0
    b = dc.bounds("N10")
    assert (b["lower"], b["upper"]) == (4, 4)
    assert dc.tournament_bound(6, 2)["counterexample"] is None


def test_reduction():
    digraph, roles, check = dc.reduce("p cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n", verify=True)
    assert len(roles["variables"]) == 3
    assert check["satisfiable"] and check["dicolourable"]
    assert digraph.k_dicolouring(2, sat=True) is not None
    oriented, _, check = dc.reduce("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n", gadget="oriented", verify=True)
    assert oriented.is_oriented()
    assert not check["satisfiable"] and not check["dicolourable"]


def test_structure_and_claims():
    s = dc.Digraph(3, [(0, 1), (1, 2), (2, 0)]).structure()
    assert s["is_directed_cactus"]
    outcomes = dc.verify_paper(ids=[1, 4])
    assert [o["passed"] for o in outcomes] == [True, True]


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"ok  {name}")
