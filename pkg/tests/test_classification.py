import json
from pathlib import Path

import numpy as np
import pytest

from hpharmonics.lie3 import (
    SubsetDescriptor,
    classify_algebra,
    classify_sets,
    is_eigendirection,
)
from hpharmonics.verify import CLASS_REPRESENTATIVES

GOLDEN = json.loads(
    (Path(__file__).parent / "data" / "classification_golden.json").read_text()
)


def _key(rep):
    return ",".join(f"{v:g}" for v in rep)


def test_every_representative_has_golden_entry():
    assert {_key(rep) for rep in CLASS_REPRESENTATIVES} == set(GOLDEN)


@pytest.mark.parametrize("rep", CLASS_REPRESENTATIVES, ids=_key)
def test_golden_classification(rep):
    expected = GOLDEN[_key(rep)]
    md = classify_algebra(rep)
    sets = classify_sets(rep)
    assert md.algebra_class == expected["algebra_class"]
    assert md.flat == expected["flat"]
    for name in ("H1", "H2", "H3", "Z1", "Z2", "Z3"):
        assert sets[name].to_json() == expected[name], name


def test_descriptor_membership_basics():
    sphere = SubsetDescriptor.sphere()
    empty = SubsetDescriptor.empty()
    pole = SubsetDescriptor.polar_pair(2)
    circle = SubsetDescriptor.circle(1, 3)
    polar = SubsetDescriptor.polar_set()
    union = SubsetDescriptor.union(circle, pole)

    e2 = np.array([0.0, 1.0, 0.0])
    tilted = np.array([0.6, 0.0, 0.8])
    assert sphere.contains(e2) and sphere.contains(tilted)
    assert not empty.contains(e2)
    assert pole.contains(e2) and pole.contains(-e2)
    assert not pole.contains(tilted)
    assert circle.contains(tilted) and not circle.contains(e2)
    assert polar.contains(e2) and not polar.contains(tilted)
    assert union.contains(tilted) and union.contains(e2)

    batch = np.stack([e2, tilted, -e2])
    np.testing.assert_array_equal(union.contains(batch), [True, True, True])
    np.testing.assert_array_equal(polar.contains(batch), [True, False, True])


def test_descriptor_validation():
    with pytest.raises(ValueError):
        SubsetDescriptor("Circle", indices=(3, 1))
    with pytest.raises(ValueError):
        SubsetDescriptor("PolarPair", indices=(4,))
    with pytest.raises(ValueError):
        SubsetDescriptor("Sphere", indices=(1,))
    with pytest.raises(ValueError):
        SubsetDescriptor.union(SubsetDescriptor.sphere())
    with pytest.raises(ValueError):
        SubsetDescriptor("Bogus")


def test_descriptor_text_and_json_roundtrip():
    union = SubsetDescriptor.union(
        SubsetDescriptor.circle(1, 3), SubsetDescriptor.polar_pair(2)
    )
    assert str(union) == "Circle(1,3) U PolarPair(2)"
    assert union.to_json() == {
        "kind": "Union",
        "members": [
            {"kind": "Circle", "indices": [1, 3]},
            {"kind": "PolarPair", "indices": [2]},
        ],
    }


def test_classify_sets_spec_examples():
    sets = classify_sets((0.0, 0.0, 0.0))
    for name in ("H1", "H2", "Z1", "Z2"):
        assert sets[name] == SubsetDescriptor.sphere()

    sets = classify_sets((1.0, 1.0, 0.0))
    assert sets["H1"] == SubsetDescriptor.union(
        SubsetDescriptor.circle(1, 2), SubsetDescriptor.polar_pair(3)
    )
    assert sets["Z1"] == SubsetDescriptor.polar_pair(3)
    assert sets["Z2"] == SubsetDescriptor.sphere()
    assert sets["H2"] == SubsetDescriptor.sphere()

    sets = classify_sets((2.0, 1.0, 1.0))
    assert sets["H2"] == SubsetDescriptor.union(
        SubsetDescriptor.circle(2, 3), SubsetDescriptor.polar_pair(1)
    )
    assert sets["Z2"] == SubsetDescriptor.circle(2, 3)


def test_union_law_h2_is_h1_or_z2():
    rng = np.random.default_rng(211)
    for rep in CLASS_REPRESENTATIVES:
        sets = classify_sets(rep)
        samples = rng.normal(size=(2000, 3))
        samples /= np.linalg.norm(samples, axis=1, keepdims=True)
        poles = np.concatenate([np.eye(3), -np.eye(3)])
        circles = []
        for i, j in ((0, 1), (0, 2), (1, 2)):
            t = rng.uniform(0, 2 * np.pi, size=50)
            pts = np.zeros((50, 3))
            pts[:, i], pts[:, j] = np.cos(t), np.sin(t)
            circles.append(pts)
        samples = np.concatenate([samples, poles] + circles)
        h1 = sets["H1"].contains(samples)
        h2 = sets["H2"].contains(samples)
        z2 = sets["Z2"].contains(samples)
        np.testing.assert_array_equal(h2, h1 | z2, err_msg=str(rep))
        assert np.all(sets["H3"].contains(samples))
        assert np.all(sets["Z3"].contains(samples))


def test_descriptors_match_eigen_predicates():
    # dense sampling: 10^4 unit fields per representative, plus the
    # boundary cases (poles and coordinate circles)
    rng = np.random.default_rng(223)
    for rep in CLASS_REPRESENTATIVES:
        md = classify_algebra(rep)
        sets = classify_sets(rep)
        samples = rng.normal(size=(10_000, 3))
        samples /= np.linalg.norm(samples, axis=1, keepdims=True)
        circles = []
        for i, j in ((0, 1), (0, 2), (1, 2)):
            t = rng.uniform(0, 2 * np.pi, size=100)
            pts = np.zeros((100, 3))
            pts[:, i], pts[:, j] = np.cos(t), np.sin(t)
            circles.append(pts)
        samples = np.concatenate([samples, np.eye(3), -np.eye(3)] + circles)
        np.testing.assert_array_equal(
            is_eigendirection(md.mu**2, samples), sets["H1"].contains(samples)
        )
        np.testing.assert_array_equal(
            is_eigendirection(md.ricci**2, samples), sets["H2"].contains(samples)
        )
