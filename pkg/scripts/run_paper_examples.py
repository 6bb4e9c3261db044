#!/usr/bin/env python3
"""Reproduce the three worked subgroup-pair examples and the 8-dimensional
quantum group pair, printing every computed invariant."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from subdepth.chartab import class_fusion, compute_character_table, inclusion_matrix
from subdepth.depthmat import depth_report, eigenvalues_via_class_formula
from subdepth.hopfcore import (annihilator_chain, idealizer_and_endQ,
                               integrals_and_modular, quotient_module,
                               build_small_quantum_group, trace_ideals)
from subdepth.mackey import combinatorial_bound_check, core_depth_bound, hecke_algebra
from subdepth.permgroup import Permutation, enumerate_group


def show_pair(title, G, H):
    print(f"== {title} ==")
    tabG = compute_character_table(G)
    tabH = compute_character_table(H.as_group())
    M = inclusion_matrix(tabG, tabH, class_fusion(G, H))
    rep = depth_report(M, group_data=(G, H))
    print("M:")
    print("  " + str(M).replace("\n", "\n  "))
    print(f"minpoly(B) = {rep.minpoly_B.to_string()}")
    print(f"minpoly(C) = {rep.minpoly_C.to_string()}")
    print(f"d_odd = {rep.d_odd}, d_ev = {rep.d_ev}, d_0 = {rep.d_0}, d_h = {rep.d_h}")
    es = eigenvalues_via_class_formula(G, H)
    print("class-formula eigenvalues:",
          "{" + ", ".join(str(v) for v in sorted(es.value_set())) + "}")
    cb = core_depth_bound(G, H, d_h=rep.d_h)
    comb = combinatorial_bound_check(G, H, d_h=rep.d_h)
    hk = hecke_algebra(G, H)
    print(f"core witness r = {cb.r} (d_h <= {cb.bound_dh}); d_c_ev = {comb.d_c_ev}; "
          f"Hecke dim = {hk.dimension}")
    print(f"C indecomposable: {rep.indecomposable_C}")
    print()


def cyc(degree, *cycles):
    return Permutation.from_cycles(degree, list(cycles))


def main():
    s3 = enumerate_group([cyc(3, (1, 2)), cyc(3, (1, 2, 3))])
    show_pair("S2 <= S3", s3, s3.subgroup_generated([cyc(3, (1, 2))]))

    a5 = enumerate_group([cyc(5, (1, 2, 3, 4, 5)), cyc(5, (1, 2, 3))])
    a4 = a5.subgroup_generated([cyc(5, (1, 2, 3)), cyc(5, (1, 2), (3, 4))])
    show_pair("A4 < A5", a5, a4)

    s4 = enumerate_group([cyc(4, (1, 2)), cyc(4, (1, 2, 3, 4))])
    d8 = s4.subgroup_generated([cyc(4, (1, 2, 3, 4)), cyc(4, (1, 3))])
    show_pair("D8 < S4", s4, d8)

    print("== 8-dimensional quantum group, R = <K,E> ==")
    H8, subs = build_small_quantum_group(2)
    R = subs["R2"]
    Q = quotient_module(H8, R)
    rep = integrals_and_modular(H8, R, Q)
    chain = annihilator_chain(Q)
    ti = trace_ideals(H8, R, Q, t_R=rep.t_R, ell_q=chain.ell_q)
    ir = idealizer_and_endQ(H8, R, Q)
    print(f"dim Q = {Q.dim_q}")
    print(f"t_R = " + " + ".join(f"({v.coeffs[0]})*{H8.labels[k]}"
                                 for k, v in sorted(rep.t_R.items())))
    print(f"annihilator chain dims: {[i.dim for i in chain.ideals]}; "
          f"ell_Q = {chain.ell_q}; Hopf core dim = {chain.hopf_core.dim}")
    print(f"trace ideal dims: {[i.dim for i in ti.ideals]}; "
          f"tau(Q) = H t_R H: {ti.htrh_matches}")
    print(f"dim T = {ir.dim_T}; dim End Q = {ir.dim_end_q}; normal: {ir.normal}")
    print(f"Frobenius extension: {rep.frobenius}; "
          f"integral in Q: {bool(rep.q_integral_basis)}")


if __name__ == "__main__":
    main()
