"""Smoke test for the extendix Python module.

Build and run from the repository root:

    cargo build -p extendix-python --features extension-module
    cp target/debug/libextendix_py.so python/extendix.so
    python3 python/smoke_test.py
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import extendix  # noqa: E402


def main():
    c6 = extendix.BipartiteGraph(3, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 0), (2, 2)])
    assert c6.is_k_extendable(1)
    assert not c6.is_k_extendable(2)
    assert c6.max_extendability() == 1
    assert c6.count_perfect_matchings() == 2

    d = c6.digraph()
    assert d.arcs() == [(0, 1), (1, 2), (2, 0)]
    assert d.is_strong() and d.vertex_connectivity() == 1
    assert d.minimum_separator() == [0]
    assert len(d.ear_decomposition()) == 1
    assert d.bipartite() == c6

    assert c6.reduced_adjacency().rows() == [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    kinds = [p[0] for p in c6.elementary_components()]
    assert kinds == ["elementary"]

    j3 = extendix.Matrix([[1, 1, 1]] * 3)
    assert not j3.is_partly_decomposable() and not j3.is_reducible()
    assert not j3.is_k_partly_decomposable(2)
    assert j3.count_nonzero_diagonals() == 6

    parsed = extendix.parse(c6.to_text())
    assert parsed == c6

    cert = extendix.certify(c6.to_text(), "k-extendable", 2)
    assert "edges: u1w1 u2w3" in cert
    assert extendix.verify(cert) == (True, False)
    tampered = cert.replace("edges: u1w1 u2w3", "edges: u1w1 u2w2")
    assert extendix.verify(tampered)[0] is False

    found = extendix.minimality_counterexample(6)
    assert found and all(g.n == 3 for g in found)
    assert len(extendix.minimal_k_strong(3, 1)) == 3

    try:
        extendix.BipartiteGraph(2, [(0, 5)])
    except ValueError:
        pass
    else:
        raise AssertionError("out-of-range edge accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
