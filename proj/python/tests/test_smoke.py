import itertools

import pytest

import nilbij


def all_matrices(q, n):
    for flat in itertools.product(range(q), repeat=n * n):
        yield [list(flat[i * n:(i + 1) * n]) for i in range(n)]


def test_zero_pair_maps_to_zero():
    assert nilbij.forward([[0, 0], [0, 0]], [0, 0], p=2) == [[0, 0], [0, 0]]


def test_round_trip_over_gf2_squared():
    images = set()
    for q in all_matrices(2, 2):
        t, v = nilbij.inverse(q, p=2)
        assert nilbij.is_nilpotent(t, p=2)
        assert nilbij.forward(t, v, p=2) == q
        images.add((tuple(map(tuple, t)), tuple(v)))
    assert len(images) == 16


def test_extension_field_round_trip():
    q = [[2, 1], [0, 3]]
    t, v = nilbij.inverse(q, p=2, k=2)
    assert nilbij.forward(t, v, p=2, k=2, poly=[1, 1, 1]) == q


def test_degree_and_fitting():
    assert nilbij.degree([[0, 0], [1, 0]], [1, 0], p=2) == 2
    fp = nilbij.fitting([[1, 0], [0, 0]], p=2)
    assert fp["R"]["data"] == [[1]]
    assert fp["S"]["data"] == [[0]]


def test_reports():
    report = nilbij.verify_theorem(2, 2)
    assert report["nilpotent_count"] == 4
    assert report["roundtrip_failures"] == 0
    assert report["surjectivity_gap"] == 0
    assert nilbij.count_nilpotents(3, 2, shards=2)["nilpotent_count"] == 9
    degrees = nilbij.verify_degrees(2, 3)
    assert all(s["left_count"] == s["right_count"] for s in degrees["per_degree"])
    assert nilbij.verify_joyal(5)["trees"] == 125


def test_joyal():
    assert nilbij.joyal_forward(2, [(0, 1)], 0, 1) == [0, 1]
    n, edges, v, v2 = nilbij.joyal_inverse([1, 0])
    assert (n, edges, v, v2) == (2, [(0, 1)], 1, 0)


def test_errors():
    with pytest.raises(nilbij.NilbijError, match="NotNilpotent"):
        nilbij.forward([[1]], [1], p=2)
    with pytest.raises(nilbij.NilbijError, match="BudgetExceeded"):
        nilbij.verify_theorem(2, 5)
    with pytest.raises(ValueError):
        nilbij.inverse([[0, 0]], p=2)
