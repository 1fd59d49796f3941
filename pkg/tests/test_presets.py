import pytest

from carpetcut.core import validate_spec
from carpetcut.errors import BadParameter, UnknownPreset
from carpetcut.fragility import fragility_witness, is_connected_gsc
from carpetcut.presets import family_by_columns, family_by_sets, list_presets, resolve


def test_oddcuts3():
    spec = resolve("oddcuts:3")
    assert spec.n_base == 6 and spec.size == 24
    assert {(0, 3), (5, 0), (2, 2), (3, 3)} <= spec.digit_set


def test_oddcuts3_by_hand():
    # columns 0..5, rows 0..5: lower half in even columns, upper half in odd,
    # both halves in the outer columns
    rows = {
        0: range(6),
        1: range(3, 6),
        2: range(3),
        3: range(3, 6),
        4: range(3),
        5: range(6),
    }
    assert resolve("oddcuts:3").digit_set == {(a, b) for a, bs in rows.items() for b in bs}


def test_evencuts_adds_upper_half():
    m = 3
    extra = resolve("evencuts:3").digit_set - resolve("oddcuts:3").digit_set
    assert extra == {(2 * m - 2, i) for i in range(m, 2 * m)}


def test_fixed_presets():
    assert resolve("countable") == validate_spec(3, [(0, 1), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)])
    goodcp = {(a, b) for a in range(3) for b in range(3)} - {(1, 1), (1, 2)}
    assert resolve("goodcp").digit_set == goodcp


@pytest.mark.parametrize("m", [3, 4, 5, 6])
@pytest.mark.parametrize("kind", ["oddcuts", "evencuts"])
def test_two_expansions_agree(kind, m):
    assert family_by_sets(kind, m) == family_by_columns(kind, m)


def test_every_preset_resolves():
    for name in list_presets():
        resolve(name.replace(":m", ":3"))


def test_connectivity_and_fragility():
    for name in ("goodcp", "sierpinski"):
        spec = resolve(name)
        assert is_connected_gsc(spec) and fragility_witness(spec) is None


@pytest.mark.parametrize("name, err", [("nope", UnknownPreset), ("oddcuts:2", BadParameter), ("evencuts:x", BadParameter)])
def test_errors(name, err):
    with pytest.raises(err):
        resolve(name)
