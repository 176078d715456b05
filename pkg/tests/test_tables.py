import pytest

from weylcert.tables import (
    B1_EXCEPTIONS,
    InvalidPrimePower,
    ParityViolation,
    RankOutOfRange,
    b1_value,
    bound_table,
    h_mod_p_index,
    is_solvable_type,
    iter_instances,
    make_instance,
    parabolic_data,
    qll_admissible,
    upper_bound_B,
    FAMILIES,
)


def test_make_instance_gates():
    assert make_instance("Sp", 4, 5).p == 5
    with pytest.raises(ParityViolation):
        make_instance("Sp", 4, 4)
    with pytest.raises(RankOutOfRange):
        make_instance("OplusEven", 3, 2)
    with pytest.raises(InvalidPrimePower):
        make_instance("Lin", 3, 6)
    with pytest.raises(RankOutOfRange):
        make_instance("Oodd", 2, 3)  # odd q needs rank >= 3
    assert make_instance("Oodd", 2, 2).natural_dimension == 5


def test_parabolic_lengths():
    assert parabolic_data(make_instance("Sp", 4, 5)).L_indices == (15624,)
    assert parabolic_data(make_instance("Lin", 4, 3)).L_indices == (80,)
    o9 = parabolic_data(make_instance("Oodd", 4, 2))
    assert o9.L_indices == (63, 36, 28)
    assert o9.Q_order == 2**7
    u6 = parabolic_data(make_instance("U", 5, 3))
    assert u6.L_indices == (2240, 4320)


def test_h_mod_p_examples():
    assert h_mod_p_index(make_instance("Sp", 2, 3)) == 40
    assert h_mod_p_index(make_instance("Lin", 3, 2)) == 15
    assert h_mod_p_index(make_instance("OminusEven", 4, 2)) == 119
    assert h_mod_p_index(make_instance("OplusEven", 4, 2)) == 135


def test_bound_table_sp85():
    bt = bound_table(make_instance("Sp", 4, 5))
    assert bt.b1 == (5**4 - 1) // 2
    assert bt.B == 5**20
    assert bt.b2 == 187488
    assert bt.betterB is None


def test_bound_table_exceptions():
    bt = bound_table(make_instance("Lin", 3, 2))
    assert bt.b1 == 7 and bt.b1_is_exception
    bt = bound_table(make_instance("Oodd", 3, 3))
    assert bt.b1 == 27 and bt.b1_is_exception


def test_b2_excluded_cases():
    bt = bound_table(make_instance("Lin", 3, 4))
    assert bt.b2 is None and "(i)" in bt.b2_reason
    bt = bound_table(make_instance("Sp", 3, 9))
    assert bt.b2 is None and "(vi)" in bt.b2_reason
    bt = bound_table(make_instance("OplusEven", 6, 2))
    assert bt.b2 is None and "(xi)" in bt.b2_reason


def test_b2_not_defined_outside_gate():
    bt = bound_table(make_instance("Lin", 3, 3))  # below the q >= 4 gate
    assert bt.b2 is None and "gate" in bt.b2_reason


def test_qll_gate():
    assert not qll_admissible(make_instance("Lin", 3, 3))
    assert qll_admissible(make_instance("Lin", 3, 4))
    assert qll_admissible(make_instance("U", 5, 3))
    assert not qll_admissible(make_instance("U", 4, 3))
    assert qll_admissible(make_instance("Sp", 3, 5))
    assert not qll_admissible(make_instance("Sp", 3, 3))
    assert qll_admissible(make_instance("Oodd", 3, 2))
    assert not qll_admissible(make_instance("Oodd", 2, 2))


def test_b1_small_rank_isomorphisms():
    # O3 ~ Lin2, O4- ~ Lin2 over q^2, O6+ ~ Lin4, O6- ~ U4, O5(odd q) ~ Sp4
    assert b1_value("Oodd", 1, 5) == 2
    assert b1_value("OminusEven", 2, 3) == b1_value("Lin", 1, 9)
    assert b1_value("OplusEven", 3, 3) == b1_value("Lin", 3, 3)
    assert b1_value("OminusEven", 3, 2) == b1_value("U", 3, 2)
    assert b1_value("Oodd", 2, 3) == b1_value("Sp", 2, 3) == 4
    # generic values ignore the override list on demand
    assert b1_value("Lin", 1, 4, use_exceptions=False) == 3
    assert b1_value("Lin", 1, 4) == 2


def test_solvability_flags():
    assert is_solvable_type("Lin", 1, 3)
    assert not is_solvable_type("Lin", 1, 4)
    assert is_solvable_type("U", 2, 2)
    assert not is_solvable_type("U", 2, 3)
    assert is_solvable_type("OplusEven", 2, 3)
    assert not is_solvable_type("OplusEven", 2, 4)
    assert not is_solvable_type("OminusEven", 2, 2)
    assert is_solvable_type("Lin", 0, 7)


def test_variant_lengths_positive_on_admissible():
    for g in iter_instances(FAMILIES, 12, (2, 3, 4, 5)):
        if not qll_admissible(g):
            continue
        for v in parabolic_data(g).variants:
            assert v.length > 0


def test_variant_sum_counts_all_characters():
    # the orbit lengths partition the nonzero vectors of the Levi module;
    # for the even orthogonals over odd q the nonsingular length occurs twice
    # (two square-class orbits of equal size)
    from weylcert.tables import levi_module_form

    for key in (("Lin", 5, 3), ("Oodd", 4, 3), ("OplusEven", 5, 2),
                ("OminusEven", 4, 3), ("Oodd", 3, 5), ("U", 5, 2)):
        g = make_instance(*key)
        pd = parabolic_data(g)
        spec = levi_module_form(g)
        total = spec.alphabet**spec.n - 1
        weights = [2 if (g.family in ("OplusEven", "OminusEven") and g.q % 2
                         and not v.singular) else 1
                   for v in pd.variants]
        assert sum(wt * v.length for wt, v in zip(weights, pd.variants)) == total


def test_b1_le_B_wide_grid():
    qs = [q for q in range(2, 65)
          if all(q % p or q == p or not _is_prime(p) for p in range(2, q)) and _is_pp(q)]
    for g in iter_instances(FAMILIES, 40, qs):
        bt = bound_table(g)
        assert 1 <= bt.b1 <= bt.B, str(g)
        if bt.betterB is not None:
            assert bt.betterB > 0


def _is_prime(n):
    return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))


def _is_pp(n):
    for p in range(2, n + 1):
        if _is_prime(p):
            m = n
            while m % p == 0:
                m //= p
            if m == 1:
                return True
            if n % p == 0:
                return False
    return False


def test_exception_count():
    assert len(B1_EXCEPTIONS) == 11


def test_upper_bound_lin2():
    assert upper_bound_B(make_instance("Lin", 1, 7)) == 8


def test_instance_str():
    assert str(make_instance("OminusEven", 4, 2)) == "O-8(2)"
    assert str(make_instance("U", 5, 3)) == "U6(3)"


def test_oracle_agreement_beyond_acceptance_grid():
    # spot checks at larger q, small dimensions (within the enumeration guard)
    from weylcert.oracles import count_points
    from weylcert.tables import levi_module_form, natural_form

    for key in (("Lin", 2, 7), ("Lin", 3, 9), ("U", 2, 7), ("U", 3, 8),
                ("Sp", 2, 9), ("Oodd", 2, 8), ("Oodd", 3, 7),
                ("OplusEven", 4, 7), ("OminusEven", 4, 7)):
        g = make_instance(*key)
        pc = count_points(natural_form(g))
        assert pc.singular_1spaces == h_mod_p_index(g), str(g)
        lm = levi_module_form(g)
        if lm.alphabet**lm.n <= 10**8:
            pd = parabolic_data(g)
            assert pd.variants[0].length == count_points(lm).singular_vectors, str(g)
