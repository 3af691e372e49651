"""Tests for strongly regular graph detection, spectra and direct S+(U^3)."""

from fractions import Fraction
from math import sqrt

import numpy as np
import pytest
from pydantic import ValidationError

from walksig.core.errors import (
    ArcNotFoundError,
    GraphStructureError,
    SrgMismatchError,
    SrgSpectrumError,
)
from walksig.schemas.srg import SrgParams
from walksig.services import fixtures
from walksig.services.srg import (
    case_amplitude,
    classify_case,
    detect_srg,
    s_plus_u3_direct,
    srg_adjacency_spectrum,
    u3_case_matrix,
)
from walksig.services.walk import arc_space, build_U, positive_support, power

EXPECTED_PARAMS = {
    "petersen": (10, 3, 0, 1),
    "c5": (5, 2, 0, 1),
    "rook-4x4": (16, 6, 2, 2),
    "shrikhande": (16, 6, 2, 2),
    "rook-4x4-complement": (16, 9, 4, 6),
    "shrikhande-complement": (16, 9, 4, 6),
    "clebsch": (16, 5, 0, 2),
    "rook-3x3": (9, 4, 1, 2),
    "paley-13": (13, 6, 2, 3),
}


@pytest.mark.parametrize("name, params", sorted(EXPECTED_PARAMS.items()))
def test_detect_srg(name, params):
    assert detect_srg(fixtures.builtin(name)).as_tuple() == params


@pytest.mark.parametrize("name", ["k4", "cube", "star4", "c4-plus-point"])
def test_detect_srg_rejects(name):
    assert detect_srg(fixtures.builtin(name)) is None


def test_params_validation_and_complement():
    with pytest.raises(ValidationError):
        SrgParams(n=10, d=3, r=0, s=2)
    params = SrgParams(n=16, d=6, r=2, s=2)
    assert params.complement().as_tuple() == (16, 9, 4, 6)
    assert params.delta == 16
    assert params.label == "(16,6,2,2)"


def test_srg_spectrum_integral_cases():
    spectrum = srg_adjacency_spectrum(SrgParams(n=16, d=6, r=2, s=2))
    assert (spectrum.e_plus, spectrum.m_plus, spectrum.e_minus, spectrum.m_minus) == (2, 6, -2, 9)
    spectrum = srg_adjacency_spectrum(SrgParams(n=10, d=3, r=0, s=1))
    assert (spectrum.e_plus, spectrum.m_plus, spectrum.e_minus, spectrum.m_minus) == (1, 5, -2, 4)
    assert not spectrum.conference


def test_srg_spectrum_conference_case():
    spectrum = srg_adjacency_spectrum(SrgParams(n=5, d=2, r=0, s=1))
    assert spectrum.conference
    assert spectrum.m_plus == spectrum.m_minus == 2
    assert spectrum.e_plus == pytest.approx((-1 + sqrt(5)) / 2)
    assert spectrum.e_minus == pytest.approx((-1 - sqrt(5)) / 2)


def test_srg_spectrum_without_integral_multiplicities():
    with pytest.raises(SrgSpectrumError):
        srg_adjacency_spectrum(SrgParams(n=17, d=4, r=0, s=1))


@pytest.mark.parametrize("name", fixtures.SRG_FIXTURES)
def test_direct_cube_matches_exact_oracle(name):
    g = fixtures.builtin(name)
    params = detect_srg(g)
    oracle = positive_support(power(build_U(g), 3))
    assert s_plus_u3_direct(g, params) == oracle


def test_strict_reading_marks_petersen_diagonal(petersen):
    params = detect_srg(petersen)
    strict = s_plus_u3_direct(petersen, params, strict_paper=True)
    amended = s_plus_u3_direct(petersen, params)
    assert strict.data.diagonal().all()
    assert not amended.data.diagonal().any()
    assert int((strict.data != amended.data).sum()) == 30


def test_condition_one_always_holds_for_large_degree(rook):
    space = arc_space(rook)
    direct = s_plus_u3_direct(rook, detect_srg(rook)).data
    i, j = space.tails[:, None], space.heads[:, None]
    l, m = space.tails[None, :], space.heads[None, :]
    assert direct[(i == m) & (j != l)].all()

    distinct = (i != l) & (i != m) & (j != l) & (j != m)
    adjacency = rook.adjacency
    expected = ~adjacency[i, l] & ~adjacency[j, m]
    assert np.array_equal(direct[distinct], np.broadcast_to(expected, direct.shape)[distinct])


def test_direct_construction_checks_its_input(petersen, c5):
    with pytest.raises(SrgMismatchError):
        s_plus_u3_direct(petersen, SrgParams(n=16, d=6, r=2, s=2))
    with pytest.raises(SrgMismatchError):
        s_plus_u3_direct(fixtures.builtin("cube"), SrgParams(n=10, d=3, r=0, s=1))
    with pytest.raises(GraphStructureError):
        s_plus_u3_direct(c5, SrgParams(n=5, d=2, r=0, s=1))


def test_classify_case():
    assert classify_case((0, 1), (2, 0)) == "A"
    assert classify_case((0, 1), (1, 0)) == "B"
    assert classify_case((0, 1), (0, 2)) == "C"
    assert classify_case((0, 1), (0, 1)) == "D"
    assert classify_case((0, 1), (2, 1)) == "E"
    assert classify_case((0, 1), (1, 2)) == "F"
    assert classify_case((0, 1), (2, 3)) == "G"


def test_case_amplitude_examples(rook, petersen):
    rook_params = detect_srg(rook)
    assert case_amplitude(rook, rook_params, (0, 1), (1, 0)) == Fraction(-2, 3)
    petersen_params = detect_srg(petersen)
    assert case_amplitude(petersen, petersen_params, (0, 1), (1, 2)) == 0
    assert case_amplitude(petersen, petersen_params, (0, 1), (0, 1)) == 0
    with pytest.raises(ArcNotFoundError):
        case_amplitude(petersen, petersen_params, (0, 2), (0, 1))


@pytest.mark.parametrize("name", ["petersen", "rook-3x3", "clebsch", "shrikhande"])
def test_case_table_equals_exact_cube(name):
    g = fixtures.builtin(name)
    params = detect_srg(g)
    cube = power(build_U(g), 3)
    assert u3_case_matrix(g, params) == cube
    space = arc_space(g)
    rng = np.random.default_rng(11)
    for row, col in rng.integers(0, len(space), size=(200, 2)).tolist():
        assert case_amplitude(g, params, space[row], space[col]) == cube.entry(row, col)
