from math import gcd

import pytest

from trit_codes.field import get_field
from trit_codes.planar import differential_spectrum, is_apn, is_pn, known_pn_family


@pytest.mark.parametrize("m", range(2, 6))
def test_square_is_pn(m):
    assert is_pn(get_field(m), 2)


def test_pn_spectrum_is_all_ones(ctx3):
    # a PN power map makes every D_a a bijection: all 26*27 pairs count 1
    spec = differential_spectrum(ctx3, 2)
    assert spec.max_count == 1
    assert spec.histogram_dict() == {1: 26 * 27}
    assert spec.is_pn and not spec.is_apn


def test_kasami_exponent_parity_rule():
    # x^(3^h+1) is PN exactly when m / gcd(m, h) is odd
    assert is_pn(get_field(3), 4)  # m/gcd = 3
    assert not is_pn(get_field(4), 4)  # m/gcd = 4
    assert is_pn(get_field(5), 10)  # h = 2, m/gcd = 5
    assert is_pn(get_field(6), 10)  # h = 2, m/gcd = 3
    assert not is_pn(get_field(6), 28)  # h = 3, m/gcd = 2


def test_coulter_matthews_exponent(ctx4):
    # (3^3+1)/2 = 14, gcd(4,3)=1, h odd
    assert is_pn(ctx4, 14)


def test_apn_exponent(ctx5):
    assert is_apn(ctx5, (3**5 - 3) // 2)
    assert not is_pn(ctx5, (3**5 - 3) // 2)


def test_spectrum_mass(ctx4):
    spec = differential_spectrum(ctx4, 22)
    assert sum(c * f for c, f in spec.histogram) == 81 * 80


def test_known_pn_family_matching():
    assert known_pn_family(4, 2).kind == "square"
    fam = known_pn_family(5, 10)
    assert fam.kind == "kasami" and fam.h == 2
    fam = known_pn_family(4, 14)
    assert fam.kind == "coulter-matthews" and fam.h == 3
    assert known_pn_family(4, 14 + 80) == fam  # exponents compare mod 3^m - 1
    assert known_pn_family(5, 22) is None


def test_known_family_shapes_are_actually_pn():
    for m in range(2, 6):
        ctx = get_field(m)
        n = 3**m - 1
        for h in range(1, 7):
            if (m // gcd(m, h)) % 2 == 1:
                assert is_pn(ctx, (3**h + 1) % n or n)


def test_bad_exponent_rejected(ctx3):
    with pytest.raises(ValueError):
        differential_spectrum(ctx3, 0)
