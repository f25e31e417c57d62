import itertools

import pytest

from encodability.derivations import (
    ExpMono,
    OmegaStep,
    Refl,
    Succ,
    SumMono,
    Trans,
    check_derivation,
    derivation_fault,
    derive_le,
    exp_mono,
    omega_step,
    refl,
    succ,
    sum_mono,
    trans,
)
from encodability.ordinals import (
    OMEGA,
    ONE,
    ZERO,
    Ordering,
    Ordinal,
    cantor_add,
    compare_ordinals,
    from_int,
    omega_pow,
    omega_times,
    parse_ordinal,
)
from helpers import poly_ordinal, poly_range


def test_derive_refl():
    d = derive_le(from_int(5), from_int(5))
    assert isinstance(d, Refl)
    assert d.lhs == d.rhs == from_int(5)


def test_derive_succ():
    d = derive_le(ONE, from_int(2))
    assert isinstance(d, Succ)
    assert d.a == ONE and d.rhs == from_int(2)


def test_derive_omega_step():
    d = derive_le(omega_times(ONE, 2), omega_pow(from_int(2)))
    assert isinstance(d, OmegaStep)
    assert d.a == ONE and d.k == 2


def test_check_refl_true():
    assert check_derivation(refl(OMEGA))


def test_check_sabotaged_succ_false():
    bad = Succ(OMEGA, OMEGA, omega_times(ONE, 2))  # claims w <= w*2 by succ
    assert not check_derivation(bad)
    fault = derivation_fault(bad)
    assert fault.path == ()
    assert "succ" in fault.reason


def test_fault_path_points_into_the_tree():
    bad = Succ(OMEGA, OMEGA, omega_times(ONE, 2))
    wrapped = Trans(refl(OMEGA), bad, OMEGA, omega_times(ONE, 2))
    fault = derivation_fault(wrapped)
    assert fault.path == (1,)


def test_builders_validate():
    with pytest.raises(ValueError):
        trans(refl(ONE), refl(OMEGA))
    with pytest.raises(ValueError):
        sum_mono(ZERO, refl(ONE))
    with pytest.raises(ValueError):
        sum_mono(ONE, refl(OMEGA))  # 1 + w is not a Cantor sum
    with pytest.raises(ValueError):
        omega_step(ONE, -1)
    # valid uses
    assert check_derivation(sum_mono(OMEGA, refl(ONE)))
    assert check_derivation(exp_mono(succ(ONE)))
    assert check_derivation(omega_step(ZERO, 0))  # 0 <= w is fine for the checker


def test_derive_rejects_descending():
    with pytest.raises(ValueError):
        derive_le(OMEGA, ONE)


def _sweep_ordinals(limit):
    return sorted({poly_ordinal(*p) for p in poly_range(limit)})


def test_exhaustive_sweep_below_w3():
    domain = _sweep_ordinals(2)
    for a, b in itertools.product(domain, domain):
        if compare_ordinals(a, b) is Ordering.GREATER:
            continue
        d = derive_le(a, b)
        assert d.lhs == a and d.rhs == b
        assert check_derivation(d)


def _mentions(d):
    yield d.lhs
    yield d.rhs
    if isinstance(d, (Refl, Succ)):
        yield d.a
    if isinstance(d, OmegaStep):
        yield d.a
    if isinstance(d, SumMono):
        yield d.g
    for c in d.children():
        yield from _mentions(c)


def test_no_zero_endpoints_when_source_positive():
    domain = [x for x in _sweep_ordinals(2) if not x.is_zero]
    extra = [parse_ordinal(s) for s in ("w^w", "w^(w^w)", "w^(w + 1) + w^2*2 + 3")]
    for a, b in itertools.product(domain + extra, repeat=2):
        if compare_ordinals(a, b) is Ordering.GREATER:
            continue
        d = derive_le(a, b)
        assert check_derivation(d)
        assert not any(m.is_zero for m in itertools.islice(_endpoints(d), 10_000))


def _endpoints(d):
    yield d.lhs
    yield d.rhs
    for c in d.children():
        yield from _endpoints(c)


def test_soundness_check_implies_order():
    domain = _sweep_ordinals(2)
    for a, b in itertools.product(domain[:20], domain[:20]):
        if compare_ordinals(a, b) is not Ordering.GREATER:
            d = derive_le(a, b)
            assert compare_ordinals(d.lhs, d.rhs) is not Ordering.GREATER


def test_derive_far_apart_limits():
    pairs = [
        ("1", "w^(w^w)"),
        ("w*2 + 1", "w^(w^2)"),
        ("w^w", "w^(w^w*2 + w)"),
        ("w^(w + 2)*3 + w^2", "w^(w^(w + 1))"),
    ]
    for a_text, b_text in pairs:
        a, b = parse_ordinal(a_text), parse_ordinal(b_text)
        d = derive_le(a, b)
        assert d.lhs == a and d.rhs == b
        assert check_derivation(d)


def test_derivation_endpoints_stored_not_recomputed():
    # checker must catch endpoint tampering anywhere in the tree
    good = derive_le(parse_ordinal("w"), parse_ordinal("w^2"))
    assert check_derivation(good)
    tampered = OmegaStep(good.a, good.k, good.lhs, cantor_add(good.rhs, ONE))
    assert not check_derivation(tampered)
