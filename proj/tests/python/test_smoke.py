import pytest

import subhit


def cycle(n):
    return [(i, (i + 1) % n) for i in range(n)]


def test_version():
    assert subhit.__version__ == "0.1.0"


def test_analyze_named_pattern():
    info = subhit.analyze("P_4")
    assert info["n"] == 4
    assert (info["mu"], info["mu_star"]) == (1, 1)
    assert info["is_path"] and not info["is_clique"]
    assert info["minimal_separators"] == [[1], [2]]


def test_analyze_explicit_pattern():
    info = subhit.analyze((3, [(0, 1), (1, 2), (0, 2)]))
    assert info["is_clique"]
    assert (info["mu"], info["mu_star"]) == (0, 0)


def test_solve_plain_matches_oracle():
    n, edges = 6, cycle(6)
    res = subhit.solve(n, edges, "P_4")
    assert res["optimum"] == subhit.oracle(n, edges, "P_4")
    assert res["method"] == "witness-dp"
    assert len(res["hitting_set"]) == res["optimum"]


def test_solve_colorful():
    n, edges = 5, cycle(5)
    color = [0, 1, 2, 0, 1]
    res = subhit.solve(n, edges, "P_3", color=color)
    assert res["optimum"] == subhit.oracle(n, edges, "P_3", color=color)


def test_unsupported_pattern_raises():
    with pytest.raises(subhit.UnsupportedPatternError):
        subhit.solve(4, [(0, 1), (2, 3)], (5, [(0, 1), (1, 2), (0, 2), (3, 4)]))


def test_bad_pattern_name_raises():
    with pytest.raises(subhit.ParseError):
        subhit.analyze("Q_3")


def test_treewidth():
    assert subhit.treewidth(6, cycle(6)) == 2
    assert subhit.treewidth(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]) == 3


def test_clean_3cnf_shape():
    nvars, clauses = subhit.clean_3cnf(3, [[1], [2, 3], [-1, -2, -3]])
    assert subhit.is_clean(nvars, clauses)
    occurrences = {}
    for cl in clauses:
        assert 2 <= len(set(abs(l) for l in cl)) == len(cl) <= 3
        for lit in cl:
            occurrences[abs(lit)] = occurrences.get(abs(lit), 0) + 1
    assert all(v == 3 for v in occurrences.values())
    assert all(1 <= v <= nvars for v in occurrences)


def test_gen_hh_manifest():
    # This formula is already clean, so the generator uses it verbatim.
    out = subhit.gen_hh(2, [[1, 2], [-1, -2], [1, -2]], hh=2)
    assert out["k"] == 7
    assert out["n"] == 86
    assert out["color"] == []
    assert '"kind": "hh-3sat"' in out["manifest"]


def test_gen_vc_is_colorful():
    out = subhit.gen_vc(2, [(0, 1)], "paw")
    assert out["k"] == 2
    assert len(out["color"]) == out["n"]
