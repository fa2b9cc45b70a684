"""Smoke tests for the python bindings.

Run with PYTHONPATH pointing at the built package directory:
    PYTHONPATH=build/python python3 tests/python/test_smoke.py
"""

import json
import sys


def main():
    import homcx

    # Graphs and basic operations.
    k3 = homcx.complete_graph(3)
    assert len(k3) == 3
    assert homcx.neighborhood(k3, "0") == ["1", "2"]
    assert not k3.has_loop("0")

    c6r = homcx.cycle_graph(6, reflexive=True)
    assert homcx.diameter(c6r) == 3
    assert homcx.looped_vertices(c6r) == [str(i) for i in range(6)]

    g = homcx.Graph(["a", "b"], [("a", "b"), ("a", "a")])
    assert g.adjacent("b", "a")
    assert homcx.Graph.from_json(g.to_json()) == g

    # Folds.
    p3 = homcx.path_graph(3, reflexive=True)
    assert homcx.find_dominated(p3) == ("0", "1")
    result = homcx.dismantle(p3)
    assert result["dismantlable"] and len(result["folds"]) == 2
    assert not homcx.dismantle(homcx.cycle_graph(4, reflexive=True))["dismantlable"]

    # Complexes and homology.
    ring = homcx.simplex_boundary(2)
    assert homcx.betti(ring) == [1, 1]
    assert ring.f_vector() == [3, 3]
    assert homcx.euler_characteristic(homcx.simplex_boundary(3)) == 2
    bd = homcx.barycentric_subdivision(ring)
    assert bd.f_vector() == [6, 6]
    assert homcx.betti(bd) == [1, 1]

    # Hom complexes.
    k2 = homcx.complete_graph(2)
    hexagon = homcx.hom_complex_exponential(k2, k3)
    assert len(hexagon.vertices) == 6
    assert homcx.betti(hexagon) == [1, 1]
    order = homcx.hom_complex_order(k2, k3)
    assert order.f_vector() == [12, 12]
    assert len(homcx.enumerate_homs(k2, k3)) == 6

    # Universality pipeline.
    assert homcx.choose_k(k2) == {"k": 2, "d": 1, "point_case": False}
    gkx = homcx.build_g_kx(ring, 2)
    assert len(gkx) == 12
    report = homcx.verify_universality(k2, ring)
    assert report["match"] and report["nerve_matches"]
    assert report["betti_x"] == [1, 1]
    assert all(report["balls_dismantlable"].values())

    conj = homcx.conjecture41(ring)
    assert conj["k"] == 1 and "match" in conj

    # Errors surface as the dedicated exception types.
    try:
        homcx.Graph(["a"], [("a", "z")])
    except homcx.InputError:
        pass
    else:
        raise AssertionError("expected InputError")

    try:
        homcx.exponential_graph(homcx.complete_graph(4), homcx.complete_graph(12), 1000)
    except homcx.CapExceeded:
        pass
    else:
        raise AssertionError("expected CapExceeded")

    # JSON report from the verify path parses as documented.
    parsed = json.loads(json.dumps(report))
    for key in ("k", "g_size", "complex_size", "betti_x", "betti_hom", "match",
                "balls_dismantlable", "intersections_dismantlable", "nerve_matches"):
        assert key in parsed, key

    print("python smoke tests passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
