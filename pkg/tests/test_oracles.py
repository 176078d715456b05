import numpy as np
import pytest

from weylcert.oracles import (
    FormSpec,
    RankTooLarge,
    TooLarge,
    anisotropic_pair,
    count_points,
    orbit_bfs,
    standard_form,
)
from weylcert.oracles import _kern_numba, _kern_numpy, _form_blocks
from weylcert.oracles.fields import FieldTooLarge, factor_prime_power, field, frobenius_table
from weylcert.roots import RootDatum
from weylcert.weights import Weight, fundamental


def test_prime_power_factoring():
    assert factor_prime_power(27) == (3, 3)
    assert factor_prime_power(32) == (2, 5)
    assert factor_prime_power(7) == (7, 1)
    with pytest.raises(ValueError):
        factor_prime_power(12)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9, 16, 25, 27])
def test_field_construction(q):
    fld = field(q)
    # unit group cyclic of order q-1 under the stored generator
    x, seen = 1, set()
    for _ in range(q - 1):
        seen.add(x)
        x = int(fld.mul[x, fld.generator])
    assert x == 1 and len(seen) == q - 1
    # distributivity spot check
    rng = np.random.default_rng(q)
    for _ in range(20):
        a, b, c = rng.integers(0, q, 3)
        left = fld.mul[a, fld.add[b, c]]
        right = fld.add[fld.mul[a, b], fld.mul[a, c]]
        assert left == right


def test_field_guard():
    with pytest.raises(FieldTooLarge):
        field(5000)


def test_frobenius_is_conjugation():
    conj = frobenius_table(3)
    fld = field(9)
    for x in range(9):
        assert conj[conj[x]] == x  # involution
        assert fld.mul[x, conj[x]] in range(9)


def test_minus_type_anisotropic():
    assert count_points(FormSpec("quadratic_minus", 2, 2)).singular_vectors == 0
    assert count_points(FormSpec("quadratic_minus", 2, 5)).singular_vectors == 0


def test_plus_type_hyperbolic_line():
    pc = count_points(FormSpec("quadratic_plus", 2, 2))
    assert pc.singular_vectors == 2
    pc = count_points(FormSpec("quadratic_plus", 2, 5))
    assert pc.singular_1spaces == 2


def test_alternating_all_singular():
    pc = count_points(FormSpec("alternating", 4, 3))
    assert pc.singular_vectors == 80 and pc.singular_1spaces == 40
    assert pc.nonsingular_buckets == ()


def test_plus_n4_q2_spec_value():
    assert count_points(FormSpec("quadratic_plus", 4, 2)).singular_1spaces == 9


def test_odd_q3_buckets():
    pc = count_points(FormSpec("quadratic_odd", 5, 3))
    assert pc.singular_vectors == 80
    assert pc.nonsingular_buckets == (90, 72)


def test_hermitian_counts():
    pc = count_points(FormSpec("hermitian", 3, 2))
    assert pc.singular_1spaces == 9  # q^3 + 1
    pc = count_points(FormSpec("hermitian", 4, 3))
    assert pc.singular_vectors == (3**4 - 1) * (3**3 + 1)


def test_anisotropic_search_deterministic():
    assert anisotropic_pair(2) == anisotropic_pair(2)
    a, b, c = anisotropic_pair(3)
    ev = standard_form(FormSpec("quadratic_minus", 2, 3))
    assert all(ev((x, y)) != 0 for x in range(3) for y in range(3) if (x, y) != (0, 0))


def test_standard_form_evaluator():
    ev = standard_form(FormSpec("quadratic_plus", 4, 3))
    assert ev((1, 1, 0, 0)) == 1
    assert ev((1, 0, 0, 0)) == 0
    with pytest.raises(ValueError):
        ev((1, 0))


def test_enumeration_guard():
    with pytest.raises(TooLarge):
        count_points(FormSpec("quadratic_plus", 30, 5))


def test_orbit_bfs_examples():
    assert orbit_bfs(fundamental(RootDatum("A", 3), 1)) == 4
    assert orbit_bfs(fundamental(RootDatum("B", 4), 4)) == 16
    assert orbit_bfs(fundamental(RootDatum("D", 4), 2)) == 24
    assert orbit_bfs(Weight(RootDatum("C", 2), (0, 0))) == 1


def test_orbit_rank_guard():
    with pytest.raises(RankTooLarge):
        orbit_bfs(fundamental(RootDatum("B", 9), 1))


def test_backend_parity_histogram():
    for spec in (FormSpec("quadratic_odd", 5, 3), FormSpec("hermitian", 3, 2),
                 FormSpec("quadratic_minus", 4, 4)):
        blocks, tables, add = _form_blocks(spec)
        h_nb = _kern_numba.histogram_values(spec.n, spec.alphabet, blocks, tables, add)
        h_np = _kern_numpy.histogram_values(spec.n, spec.alphabet, blocks, tables, add)
        assert np.array_equal(h_nb, h_np)


def test_backend_parity_orbit():
    from weylcert.roots import cartan_matrix

    for family, rank, coeffs in (("B", 5, (1, 0, 1, 0, 0)), ("D", 5, (0, 1, 0, 0, 1)),
                                 ("A", 6, (1, 1, 0, 0, 0, 1))):
        w = Weight(RootDatum(family, rank), coeffs)
        cart = np.array(cartan_matrix(w.datum), dtype=np.int64)
        key = 0
        for k, c in enumerate(w.coeffs):
            key |= (c + 64) << (7 * k)
        assert _kern_numba.orbit_size(key, cart, 64) == _kern_numpy.orbit_size(key, cart, 64)


def test_backend_env_flag(monkeypatch):
    import weylcert.oracles.backend as bk

    monkeypatch.setenv("WEYLCERT_BACKEND", "numpy")
    bk.backend_name.cache_clear()
    assert bk.backend_name() == "numpy"
    monkeypatch.setenv("WEYLCERT_BACKEND", "bogus")
    bk.backend_name.cache_clear()
    with pytest.raises(ValueError):
        bk.backend_name()
    monkeypatch.delenv("WEYLCERT_BACKEND")
    bk.backend_name.cache_clear()
    assert bk.backend_name() in ("numba", "numpy")


def test_odd_dimension_5_point_count_q3():
    # rank-2 odd-orthogonal geometry over F_3 (below the instance rank gate):
    # the singular 1-space count matches (q^4 - 1)/(q - 1)
    pc = count_points(FormSpec("quadratic_odd", 5, 3))
    assert pc.singular_1spaces == (3**4 - 1) // (3 - 1) == 40
