"""Smoke test for the ortholat extension module."""

import ortholat

O6 = (
    ["0", "p", "q", "r", "s", "1"],
    [("0", "p"), ("p", "q"), ("q", "1"), ("0", "r"), ("r", "s"), ("s", "1")],
)
PERP = {"0": "1", "1": "0", "p": "s", "s": "p", "q": "r", "r": "q"}


def main():
    o6 = ortholat.Lattice(*O6)
    assert len(o6) == 6
    assert o6.join("p", "r") == "1" and o6.meet("q", "s") == "0"
    assert o6.axioms_hold()
    assert not o6.is_modular() and not o6.is_distributive()
    assert o6.complement_class() == "multiply complemented"
    assert o6.orthocomplementations() == [PERP]
    assert "ortho" in o6.classify_negation(PERP)
    assert "orthomodular" not in o6.classify_negation(PERP)
    report = o6.implication_report(PERP)
    assert report["sasaki"] == ["strong entailment", "weak modus ponens"]
    assert o6.implication(PERP, "classical")[("p", "q")] == "1"
    dot = o6.to_dot("o6")
    assert dot.startswith('digraph "o6"') and dot.count("->") == 6

    assert ortholat.Lattice.from_json(o6.to_json()).covers() == o6.covers()
    try:
        ortholat.Lattice(["0", "a", "b", "c", "d", "1"],
                         [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"),
                          ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")])
    except ValueError as e:
        assert "not a lattice" in str(e)
    else:
        raise AssertionError("bowtie accepted")

    assert [len(ortholat.enumerate_lattices(n)) for n in range(8)] == [1, 1, 1, 1, 2, 5, 15, 53]
    c6 = ortholat.census(6)
    assert (c6["modular"], c6["distributive"], c6["orthocomplemented"]) == (8, 5, 2)

    rm3 = ortholat.builtin_logic("rm3")
    assert rm3["class"] == "Kleene"
    assert rm3["flags"] == ["weak entailment", "strong modus ponens"]
    assert len(rm3["lattice"]) == 3

    assert ortholat.grade_negate("1/3") == "2/3"
    assert ortholat.grade_negate("1/3", "lambda", "3") == "1/3"
    assert ortholat.grade_negate(ortholat.grade_negate("2/7", "lambda", "1/2"), "lambda", "1/2") == "2/7"
    print("ortholat smoke test ok")


if __name__ == "__main__":
    main()
