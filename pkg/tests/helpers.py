"""Shared builders and check routines for the test suite."""

from __future__ import annotations

import itertools

from subdepth.chartab import (class_fusion, compute_character_table,
                              inclusion_matrix)
from subdepth.corpus import (cached_table, corpus_groups,
                             subgroups_up_to_conjugacy)
from subdepth.depthmat import depth_report
from subdepth.hopfcore import build_group_algebra
from subdepth.permgroup import Permutation, enumerate_group


def perm(degree, *cycles):
    return Permutation.from_cycles(degree, list(cycles))


def make_s3():
    return enumerate_group([perm(3, (1, 2)), perm(3, (1, 2, 3))])


def make_s4():
    return enumerate_group([perm(4, (1, 2)), perm(4, (1, 2, 3, 4))])


def make_s5():
    return enumerate_group([perm(5, (1, 2)), perm(5, (1, 2, 3, 4, 5))])


def make_a4():
    return enumerate_group([perm(4, (1, 2, 3)), perm(4, (1, 2), (3, 4))])


def make_a5():
    return enumerate_group([perm(5, (1, 2, 3, 4, 5)), perm(5, (1, 2, 3))])


def pair_report(G, H, tabG=None, tabH=None):
    if tabG is None:
        tabG = compute_character_table(G)
    if tabH is None:
        tabH = compute_character_table(H.as_group())
    M = inclusion_matrix(tabG, tabH, class_fusion(G, H))
    return M, depth_report(M, group_data=(G, H))


def equal_up_to_row_col_permutation(a: list[list[int]], b: list[list[int]]) -> bool:
    """True iff some row and column permutation carries a onto b."""
    if len(a) != len(b) or len(a[0]) != len(b[0]):
        return False
    target_cols = sorted(tuple(row[j] for row in b) for j in range(len(b[0])))
    for sigma in itertools.permutations(range(len(a))):
        rows = [a[i] for i in sigma]
        cols = sorted(tuple(row[j] for row in rows) for j in range(len(rows[0])))
        if cols == target_cols:
            return True
    return False


def corpus_pairs_full(max_order=24):
    """(name, G, H) for every subgroup of every catalog group."""
    out = []
    for name, G in corpus_groups(max_order):
        for H in G.subgroups():
            out.append((name, G, H))
    return out


def corpus_pairs_reps(max_order=24):
    """(name, G, H) with one subgroup per conjugacy class."""
    out = []
    for name, G in corpus_groups(max_order):
        for H in subgroups_up_to_conjugacy(G):
            out.append((name, G, H))
    return out


_GROUP_ALGEBRAS: dict[int, object] = {}


def cached_group_algebra(G):
    key = id(G)
    if key not in _GROUP_ALGEBRAS:
        _GROUP_ALGEBRAS[key] = build_group_algebra(G)
    return _GROUP_ALGEBRAS[key]


def group_table(name, G):
    return cached_table(name, G)
