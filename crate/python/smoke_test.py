"""Smoke test for the qwalled extension module.

Build and install first:  pip install --no-build-isolation -e crates/python
"""
import json

import qwalled


def main():
    d = qwalled.BeadDiagram.example()
    st = d.statistics()
    assert (st["beta"], st["gamma"]) == (15, 16), st
    sign, word = d.normalize()
    assert (sign, word) == (-1, "c2 e2,5 e4,6 s2 s1 s5 s6 c1 c4 c6")
    assert qwalled.BeadDiagram.from_json(d.to_json()) == d

    e = qwalled.BeadDiagram.from_json(json.dumps(
        {"r": 1, "s": 1, "edges": [["t", 1, "t", 2], ["b", 1, "b", 2]], "beads": []}))
    assert e.multiply(e) is None

    assert len(qwalled.enumerate_basis(2, 1)) == 48
    assert len(qwalled.normal_monomials(2, 2)) == 384

    t = qwalled.generator_matrix("t1", 2, 2, 1)
    ti = qwalled.generator_matrix("t1^-1", 2, 2, 1)
    assert (t @ ti).is_identity()
    c = qwalled.generator_matrix("c1", 2, 1, 1)
    assert c.parity == 1
    assert qwalled.Operator.from_json(t.to_json()) == t

    assert qwalled.relations_hold(2, 1, 1)
    assert qwalled.certify_dimension(2, 1, 1) == (8, 8)
    assert qwalled.commutant_dim(2, 1, 1, "uq") == 8
    q, hc = qwalled.aq_dual(2)
    assert q == hc == 32

    try:
        qwalled.generator_matrix("t5", 2, 1, 1)
    except ValueError:
        pass
    else:
        raise AssertionError("invalid generator accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
