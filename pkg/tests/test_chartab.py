import pytest

from helpers import perm
from subdepth.chartab import (class_fusion, compute_character_table,
                              induce_class_function, inclusion_matrix,
                              permutation_character, table_from_json,
                              tables_agree_up_to_row_permutation)
from subdepth.exactalg import Cyc
from subdepth.permgroup import enumerate_group


def test_s3_table(s3):
    tab = compute_character_table(s3)
    assert sorted(tab.degrees) == [1, 1, 2]
    assert tab.degrees[0] == 1  # trivial character first under the convention
    tab.verify()


def test_c2_table():
    G = enumerate_group([perm(2, (1, 2))])
    tab = compute_character_table(G)
    assert sorted(tab.degrees) == [1, 1]
    vals = {tuple(v.as_fraction() for v in row) for row in tab.irreducibles}
    assert vals == {(1, 1), (1, -1)}


def test_a5_table(a5):
    tab = compute_character_table(a5)
    assert sorted(tab.degrees) == [1, 3, 3, 4, 5]
    assert sum(d * d for d in tab.degrees) == 60
    # golden-ratio values land in Q(zeta_5): the 3-dim rows are irrational
    e = tab.exponent
    assert e == 30
    irrational = [row for row in tab.irreducibles
                  if any(not v.is_rational() for v in row)]
    assert len(irrational) == 2


def test_degree_one_characters_are_multiplicative(s4):
    tab = compute_character_table(s4)
    assert sorted(tab.degrees) == [1, 1, 2, 3, 3]


def test_class_fusion_examples(s3):
    H = s3.subgroup_generated([perm(3, (1, 2))])
    fus = class_fusion(s3, H)
    fused_sizes = [s3.conjugacy_classes()[i].size for i in fus.mapping]
    assert fused_sizes == [1, 3]
    idf = class_fusion(s3, s3.full_subgroup())
    assert list(idf.mapping) == list(range(3))
    A3 = s3.subgroup_generated([perm(3, (1, 2, 3))])
    fus3 = class_fusion(s3, A3)
    assert [s3.conjugacy_classes()[i].size for i in fus3.mapping] == [1, 2, 2]


def test_inclusion_matrix_s2_s3(s3):
    H = s3.subgroup_generated([perm(3, (1, 2))])
    M = inclusion_matrix(compute_character_table(s3),
                         compute_character_table(H.as_group()),
                         class_fusion(s3, H))
    assert M.to_lists() == [[1, 1, 0], [0, 1, 1]]


def test_inclusion_matrix_column_identity(a5):
    A4 = a5.subgroup_generated([perm(5, (1, 2, 3)), perm(5, (1, 2), (3, 4))])
    tabG = compute_character_table(a5)
    tabH = compute_character_table(A4.as_group())
    M = inclusion_matrix(tabG, tabH, class_fusion(a5, A4))
    for j in range(M.cols):
        assert sum(M.entries[i][j] * tabH.degrees[i] for i in range(M.rows)) \
            == tabG.degrees[j]
    assert all(any(row) for row in M.entries)
    assert all(any(M.entries[i][j] for i in range(M.rows)) for j in range(M.cols))


def test_permutation_character_examples(s3):
    H = s3.subgroup_generated([perm(3, (1, 2))])
    assert permutation_character(s3, H) == (3, 1, 0)
    assert permutation_character(s3, s3.full_subgroup()) == (1, 1, 1)
    assert permutation_character(s3, s3.trivial_subgroup()) == (6, 0, 0)


def test_permutation_character_properties(s4):
    tab = compute_character_table(s4)
    triv = tab.trivial_index()
    for H in s4.subgroups()[::4]:
        pc = permutation_character(s4, H)
        vals = [Cyc.rational(v) for v in pc]
        ip = tab.inner_product(vals, tab.irreducibles[triv])
        assert ip.as_fraction() >= 1
        assert pc[0] == s4.order // H.order


def test_frobenius_reciprocity(s3):
    # <chi down, phi> = <chi, phi up> on the S2 <= S3 pair
    H = s3.subgroup_generated([perm(3, (1, 2))])
    tabG = compute_character_table(s3)
    Hgrp = H.as_group()
    tabH = compute_character_table(Hgrp)
    fus = class_fusion(s3, H)
    M = inclusion_matrix(tabG, tabH, fus)
    for i, phi in enumerate(tabH.irreducibles):
        induced = induce_class_function(s3, H, phi)
        for j, chi in enumerate(tabG.irreducibles):
            lhs = M.entries[i][j]
            rhs = tabG.inner_product(chi, induced)
            assert rhs.as_fraction() == lhs


def test_perm_char_equals_induced_trivial_row(s3):
    # the permutation character is the trivial-row expansion of M
    H = s3.subgroup_generated([perm(3, (1, 2))])
    tabG = compute_character_table(s3)
    tabH = compute_character_table(H.as_group())
    M = inclusion_matrix(tabG, tabH, class_fusion(s3, H))
    triv_h = tabH.trivial_index()
    pc = permutation_character(s3, H)
    for cidx in range(len(tabG.classes)):
        acc = Cyc.zero()
        for j in range(M.cols):
            acc = acc + tabG.irreducibles[j][cidx] * M.entries[triv_h][j]
        assert acc.as_fraction() == pc[cidx]


def test_table_json_round_trip(s3):
    tab = compute_character_table(s3)
    data = tab.to_json()
    back = table_from_json(s3, data)
    assert tables_agree_up_to_row_permutation(tab, back)
    # a shuffled import still matches
    data["irreducibles"] = data["irreducibles"][::-1]
    shuffled = table_from_json(s3, data)
    assert tables_agree_up_to_row_permutation(tab, shuffled)


def test_table_import_errors(s3):
    tab = compute_character_table(s3)
    data = tab.to_json()
    bad = dict(data)
    bad["classes"] = data["classes"][:-1]
    with pytest.raises(ValueError):
        table_from_json(s3, bad)
    bad2 = dict(data)
    bad2["classes"] = [dict(c) for c in data["classes"]]
    bad2["classes"][1]["size"] = 99
    with pytest.raises(ValueError):
        table_from_json(s3, bad2)
    # corrupted values break orthogonality
    bad3 = dict(data)
    bad3["irreducibles"] = [row[:] for row in data["irreducibles"]]
    bad3["irreducibles"][0][1] = "7"
    with pytest.raises(AssertionError):
        table_from_json(s3, bad3)
