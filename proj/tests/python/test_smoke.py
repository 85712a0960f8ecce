import json
from fractions import Fraction
from pathlib import Path

import pytest

import mvbell

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def test_classical_bell_text():
    assert mvbell.bell_partial_text([4], [2]) == "4*x[3]*x[1] + 3*x[2]^2"
    assert mvbell.bell_partial_text([0], [0]) == "1"
    assert mvbell.bell_partial_text([1], [2]) == "0"
    assert mvbell.bell_complete_text([3], 1) == "x[3] + 3*x[2]*x[1] + x[1]^3"


def test_multivariate_bell_terms():
    assert mvbell.bell_complete_text([1, 1], 1) == "x[1,1] + x[1,0]*x[0,1]"
    assert mvbell.bell_partial_text([1, 1], [2]) == "x[1,0]*x[0,1]"
    terms = mvbell.bell_partial([2], [2])
    assert terms == [{"coeff": Fraction(1), "monomial": (((1,), 1, 2),)}]
    coeffs = {t["coeff"] for t in mvbell.bell_partial([4], [2])}
    assert coeffs == {Fraction(4), Fraction(3)}


def test_solution_sets():
    sols = mvbell.solutions_partial([3], [2])
    assert sols == [[((1,), (1,)), ((2,), (1,))]]
    assert mvbell.solutions_complete([2], 1) == [
        [((1,), (2,))],
        [((2,), (1,))],
    ]
    assert mvbell.solutions_partial([1], [2]) == []


def test_bell_table_matches_golden():
    golden = (FIXTURES.parent / "golden" / "bell_table_n4.txt").read_text()
    assert mvbell.bell_table(4) == golden


def test_compose_fixture_files():
    f = mvbell.load_series(FIXTURES / "f_cubic.json")
    g = mvbell.load_series(FIXTURES / "g_cubic.json")
    assert mvbell.compose_derivative(f, g, [0]) == [Fraction(1)]
    assert mvbell.compose_derivative(f, g, [3]) == [Fraction(259)]
    tensor = mvbell.compose_all(f, g, 3)
    assert tensor == {
        (0,): [Fraction(1)],
        (1,): [Fraction(3)],
        (2,): [Fraction(23)],
        (3,): [Fraction(259)],
    }


def test_compose_matches_substitution_oracle():
    g = mvbell.series(2, 2, 2, [0, 0], {
        (0, 0): ["1", "-1"],
        (1, 0): [2, 1],
        (0, 1): [0, 3],
        (2, 0): [4, 0],
        (1, 1): [1, 1],
        (0, 2): [0, 2],
    })
    f = mvbell.series(2, 1, 2, [1, -1], {
        (0, 0): 5,
        (1, 0): 1,
        (0, 1): 2,
        (2, 0): 1,
        (1, 1): 3,
        (0, 2): 1,
    })
    composed = mvbell.compose_series(f, g)
    by_index = {tuple(c["n"]): c["v"] for c in composed["coeffs"]}
    for n in [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]:
        expected = [str(v) for v in mvbell.compose_derivative(f, g, n)]
        assert by_index[tuple(n)] == expected
    assert mvbell.compose_derivative(f, g, [1, 1]) == [Fraction(24)]


def test_series_json_roundtrip():
    doc = mvbell.series(1, 1, 2, ["1/2"], {(0,): "1/3", (2,): 4})
    assert json.loads(json.dumps(doc)) == doc
    assert mvbell.compose_derivative(
        mvbell.series(1, 1, 2, ["1/3"], {(1,): 1}), doc, [2]
    ) == [Fraction(4)]


def test_generating_identity():
    g = mvbell.series(2, 1, 3, [0, 0], {
        (1, 0): "1/2",
        (0, 1): 2,
        (1, 1): 3,
        (2, 0): "-1",
    })
    report = mvbell.generating_identity(g, ["1/3"], 3)
    assert report == {"max_abs_n": 3, "mismatches": []}


def test_verify_suites():
    report = mvbell.verify_suite("props", seed=7, trials=5)
    assert report["failures"] == 0
    assert report["checks"] > 0
    oracle = mvbell.verify_suite("oracle", seed=1, trials=3)
    assert oracle["failures"] == 0


def test_error_mapping():
    with pytest.raises(mvbell.ContractError):
        f = mvbell.series(1, 1, 2, [5], {(1,): 1})
        g = mvbell.series(1, 1, 2, [0], {(0,): 0, (1,): 1})
        mvbell.compose_derivative(f, g, [1])
    with pytest.raises(ValueError):
        mvbell.compose_derivative("{not json", "{}", [1])
    with pytest.raises(mvbell.DomainError):
        mvbell.verify_suite("bogus")
