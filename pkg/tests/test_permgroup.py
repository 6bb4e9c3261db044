import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import make_a4, make_a5, make_s3, make_s4, perm
from subdepth.permgroup import (GroupTooLargeError, Permutation,
                                core_and_witness, depth_one_adjoint_test,
                                double_cosets, enumerate_group, group_from_json,
                                intersection_chain, is_ti_subgroup)


def test_permutation_basics():
    p = perm(4, (1, 2, 3))
    q = perm(4, (1, 2))
    assert (p * p * p).is_identity()
    assert p * p.inverse() == Permutation.identity(4)
    assert p.order() == 3 and q.order() == 2
    with pytest.raises(ValueError):
        Permutation([1, 1, 3])


@given(st.permutations(list(range(1, 6))), st.permutations(list(range(1, 6))),
       st.permutations(list(range(1, 6))))
@settings(max_examples=50, deadline=None)
def test_composition_associative_sampled(a, b, c):
    pa, pb, pc = Permutation(a), Permutation(b), Permutation(c)
    assert (pa * pb) * pc == pa * (pb * pc)
    assert (pa * pb).inverse() == pb.inverse() * pa.inverse()


def test_enumerate_s3():
    G = make_s3()
    assert G.order == 6
    assert G.degree == 3


def test_enumerate_a4():
    assert make_a4().order == 12


def test_enumerate_trivial():
    G = enumerate_group([], degree=3)
    assert G.order == 1


def test_enumeration_cap():
    with pytest.raises(GroupTooLargeError):
        enumerate_group([perm(5, (1, 2)), perm(5, (1, 2, 3, 4, 5))], cap=100)


def test_degree_mismatch():
    with pytest.raises(ValueError):
        enumerate_group([perm(3, (1, 2)), perm(4, (1, 2, 3, 4))])


def test_conjugacy_classes_s3():
    sizes = sorted(c.size for c in make_s3().conjugacy_classes())
    assert sizes == [1, 2, 3]


def test_conjugacy_classes_abelian_are_singletons():
    G = enumerate_group([perm(5, (1, 2, 3, 4, 5))])
    assert all(c.size == 1 for c in G.conjugacy_classes())


def test_conjugacy_classes_a5():
    G = make_a5()
    sizes = sorted(c.size for c in G.conjugacy_classes())
    assert sizes == [1, 12, 12, 15, 20]
    assert sum(sizes) == 60


def test_class_sizes_divide_group_order(s4):
    for c in s4.conjugacy_classes():
        assert s4.order % c.size == 0


def test_subgroup_lattice_counts(s4):
    assert len(make_s3().subgroups()) == 6
    assert len(s4.subgroups()) == 30


def test_core_and_witness_normal():
    G = make_s3()
    A3 = G.subgroup_generated([perm(3, (1, 2, 3))])
    cw = core_and_witness(G, A3)
    assert cw.r == 0 and cw.core.elements == A3.elements


def test_core_and_witness_sn():
    # point stabilizers in S_n intersect to the trivial core in n-2 steps
    G = make_s3()
    H = G.subgroup_generated([perm(3, (1, 2))])
    assert core_and_witness(G, H).r == 1
    G4 = make_s4()
    H3 = G4.subgroup_generated([perm(4, (1, 2)), perm(4, (1, 2, 3))])
    assert core_and_witness(G4, H3).r == 2


def test_core_and_witness_ti_pair():
    G = make_a4()
    C3 = G.subgroup_generated([perm(4, (1, 2, 3))])
    cw = core_and_witness(G, C3)
    assert cw.r == 1 and cw.core.order == 1


def test_core_properties(s4):
    for H in s4.subgroups()[:12]:
        cw = core_and_witness(s4, H)
        assert cw.core.is_normal()
        assert H.contains_subgroup(cw.core)
        # minimality: any shorter tuple cannot reach the core
        if cw.r >= 1:
            inter = set(H.elements)
            for g in cw.witness[:-1]:
                inter &= set(H.conjugate(g).elements)
            assert len(inter) > cw.core.order


def test_double_cosets_s2_s3():
    G = make_s3()
    H = G.subgroup_generated([perm(3, (1, 2))])
    dc = double_cosets(G, H, H)
    assert len(dc.reps) == 2 and sorted(dc.sizes) == [2, 4]
    assert sum(dc.sizes) == G.order


def test_double_cosets_full_group():
    G = make_s3()
    dc = double_cosets(G, G.full_subgroup(), G.subgroup_generated([perm(3, (1, 2))]))
    assert len(dc.reps) == 1


def test_double_cosets_normal_equals_cosets():
    G = make_s3()
    A3 = G.subgroup_generated([perm(3, (1, 2, 3))])
    dc = double_cosets(G, A3, A3)
    assert len(dc.reps) == G.order // A3.order


def test_double_coset_sizes_partition(a4):
    subs = a4.subgroups()
    for K in subs[:6]:
        for H in subs[:6]:
            dc = double_cosets(a4, K, H)
            assert sum(dc.sizes) == a4.order


def test_intersection_chain_normal():
    G = make_s3()
    A3 = G.subgroup_generated([perm(3, (1, 2, 3))])
    ic = intersection_chain(G, A3)
    assert ic.d_c_ev == 2
    assert not ic.d_c_is_one  # S3 != A3 C(A3)


def test_intersection_chain_ti():
    G = make_a4()
    C3 = G.subgroup_generated([perm(4, (1, 2, 3))])
    ic = intersection_chain(G, C3)
    assert ic.d_c_ev == 4
    assert len(ic.chain[1]) == 2  # {H, E}


def test_intersection_chain_sn():
    # S_{n-1} <= S_n stabilizes after n-1 steps, d_c_ev = 2(n-1)
    G = make_s4()
    H = G.subgroup_generated([perm(4, (1, 2)), perm(4, (1, 2, 3))])
    assert intersection_chain(G, H).d_c_ev == 6


def test_d_c_is_one_in_abelian_product():
    G = enumerate_group([perm(4, (1, 2)), perm(4, (3, 4))])
    H = G.subgroup_generated([perm(4, (1, 2))])
    assert intersection_chain(G, H).d_c_is_one


def test_intersection_chain_monotone(s4):
    H = s4.subgroup_generated([perm(4, (1, 2, 3, 4))])
    ic = intersection_chain(s4, H)
    for a, b in zip(ic.chain, ic.chain[1:]):
        assert a <= b


def test_depth_one_adjoint():
    G = make_s3()
    A3 = G.subgroup_generated([perm(3, (1, 2, 3))])
    assert not depth_one_adjoint_test(G, A3)
    assert depth_one_adjoint_test(G, G.trivial_subgroup())
    V = enumerate_group([perm(4, (1, 2)), perm(4, (3, 4))])
    H = V.subgroup_generated([perm(4, (1, 2))])
    assert depth_one_adjoint_test(V, H)


def test_ti_subgroup():
    G = make_a4()
    C3 = G.subgroup_generated([perm(4, (1, 2, 3))])
    st_ = is_ti_subgroup(G, C3)
    assert st_.ti and not st_.normal
    s3 = make_s3()
    A3 = s3.subgroup_generated([perm(3, (1, 2, 3))])
    flag = is_ti_subgroup(s3, A3)
    assert not flag.ti and flag.normal
    H = s3.subgroup_generated([perm(3, (1, 2))])
    assert is_ti_subgroup(s3, H).ti
    with pytest.raises(ValueError):
        is_ti_subgroup(s3, s3.trivial_subgroup())


def test_group_json_parsing():
    G, subs = group_from_json({
        "degree": 3,
        "generators": [[2, 1, 3], [2, 3, 1]],
        "subgroups": {"H": [[2, 1, 3]]},
    })
    assert G.order == 6 and subs["H"].order == 2
    with pytest.raises(ValueError):
        group_from_json({"generators": [[2, 1]]})
    with pytest.raises(ValueError):
        group_from_json({"degree": 2, "generators": [],
                         "subgroups": {"H": [[2, 1]]}})
