"""Command-line front end: file ingestion, report emission, sweep harness.

Exit status 0 means every assertion made during the run passed; any assertion
failure, parse error or cap violation exits nonzero with a message naming the
offending input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .chartab import (class_fusion, compute_character_table, inclusion_matrix,
                      load_table_file, permutation_character,
                      tables_agree_up_to_row_permutation)
from .corpus import run_sweep
from .depthmat import (DepthReport, bipartite_dot, depth_report,
                       eigenvalues_via_class_formula, ell_from_trivial_row)
from .exactalg import scalar_to_string
from .hopfcore import (DEFAULT_TENSOR_CAP, HopfAlgebraData, annihilator_chain,
                       idealizer_and_endQ, integrals_and_modular,
                       quotient_module, trace_ideals)
from .mackey import (combinatorial_bound_check, core_depth_bound, hecke_algebra,
                     mackey_restrict, q_tensor_decomposition)
from .chartab import InclusionMatrix
from .permgroup import DEFAULT_ORDER_CAP, load_group_file


@dataclass
class AnalysisRequest:
    mode: str                       # group-pair | matrix-only | hopf-pair | sweep
                                    # | mackey | hecke | chartab
    input_path: Optional[str] = None
    power: int = 2
    import_path: Optional[str] = None
    max_order: int = 24
    conjecture: bool = False
    cap_order: int = DEFAULT_ORDER_CAP
    cap_tensor_dim: int = DEFAULT_TENSOR_CAP
    json_path: Optional[str] = None
    dot_path: Optional[str] = None


def _print_matrix(title: str, grid) -> None:
    print(f"{title}:")
    width = max((len(str(x)) for row in grid for x in row), default=1)
    for row in grid:
        print("  " + " ".join(str(x).rjust(width) for x in row))


def _emit_json(data: dict, path: Optional[str]) -> None:
    if path:
        with open(path, "w") as fh:
            json.dump(data, fh, indent=2, sort_keys=False)
            fh.write("\n")


def _load_matrix_file(path: str) -> InclusionMatrix:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    if "matrix" not in data:
        raise ValueError(f"{path}: missing the field 'matrix'")
    rows = data["matrix"]
    p = len(rows)
    q = len(rows[0]) if p else 0
    if p == 0 or q == 0 or any(len(r) != q for r in rows):
        raise ValueError(f"{path}: 'matrix' must be a nonempty rectangular grid")
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            if not isinstance(x, int) or x < 0:
                raise ValueError(f"{path}: matrix entry ({i},{j}) must be a "
                                 "nonnegative integer")
    M = InclusionMatrix(p, q, tuple(tuple(r) for r in rows))
    for i in range(p):
        if not any(M.entries[i]):
            raise ValueError(f"{path}: row {i} of the matrix is zero; "
                             "not an inclusion matrix")
    for j in range(q):
        if not any(M.entries[i][j] for i in range(p)):
            raise ValueError(f"{path}: column {j} of the matrix is zero; "
                             "not an inclusion matrix")
    return M


def _depth_text(rep: DepthReport) -> None:
    _print_matrix("M", rep.M.to_lists())
    _print_matrix("B = M M^t", rep.B.to_int_grid())
    _print_matrix("C = M^t M", rep.C.to_int_grid())
    print(f"minpoly(B) = {rep.minpoly_B.to_string()}")
    print(f"minpoly(C) = {rep.minpoly_C.to_string()}")
    print(f"d_odd = {rep.d_odd}  d_ev = {rep.d_ev}  d_0 = {rep.d_0}  d_h = {rep.d_h}")
    eig = ", ".join(f"{v} (x{m})" for v, m in sorted(rep.eigen_B.values.items()))
    print(f"eigenvalues of B: {eig}; residual {rep.eigen_B.residual.to_string()}")
    print(f"C indecomposable: {rep.indecomposable_C}")
    if rep.pf_check is not None:
        print(f"Perron-Frobenius check (root = index): {rep.pf_check}")


def _run_group_pair(req: AnalysisRequest) -> int:
    G, subs = load_group_file(req.input_path, cap=req.cap_order)
    if "H" not in subs:
        raise ValueError(f"{req.input_path}: needs a subgroup named 'H'")
    H = subs["H"]
    tabG = compute_character_table(G)
    tabH = compute_character_table(H.as_group())
    M = inclusion_matrix(tabG, tabH, class_fusion(G, H))
    rep = depth_report(M, group_data=(G, H))
    print(f"group of order {G.order}, subgroup of order {H.order}, "
          f"index {G.order // H.order}")
    _depth_text(rep)
    es = eigenvalues_via_class_formula(G, H)
    print("class-formula eigenvalues: {"
          + ", ".join(str(v) for v in sorted(es.value_set()))
          + f"}} (t = {es.t}, d_0 <= {es.depth_bound})")
    nonzero = {v for v in rep.eigen_B.values if v != 0}
    assert es.value_set() == nonzero, "class formula disagrees with minpoly roots"
    ell = ell_from_trivial_row(rep.C, tabG.trivial_index())
    assert rep.d_h == 2 * ell + 1 or rep.d_h == 1, \
        "trivial-row stabilization disagrees with the pattern h-depth"
    cb = core_depth_bound(G, H, d_h=rep.d_h)
    print(f"core witness r = {cb.r}; bounds d(Q) <= {cb.bound_dQ}, d_h <= {cb.bound_dh}")
    comb = combinatorial_bound_check(G, H, d_h=rep.d_h)
    print(f"d_c_ev = {comb.d_c_ev}, bracket {comb.d_c_bracket}, "
          f"d_c = 1: {comb.d_c_is_one}")
    hk = hecke_algebra(G, H)
    from .hopfcore import build_group_algebra, subgroup_embedding
    HG = build_group_algebra(G)
    emb = subgroup_embedding(HG, G, H)
    ir = idealizer_and_endQ(HG, emb)
    print(f"Hecke dimension = {hk.dimension}; dim End Q = {ir.dim_end_q}; "
          f"normal = {ir.normal}")
    assert hk.dimension == ir.dim_end_q, "Hecke dimension differs from dim End Q"
    data = {
        "order": G.order, "subgroup_order": H.order,
        "depth": rep.to_json(),
        "class_formula": {"values": [str(v) for v in sorted(es.value_set())],
                          "t": es.t, "bound": es.depth_bound,
                          "all_classes_restrict_to_one": es.all_classes_restrict_to_one},
        "core": {"r": cb.r, "bound_dQ": cb.bound_dQ, "bound_dh": cb.bound_dh},
        "combinatorial": {"d_c_ev": comb.d_c_ev, "bracket": list(comb.d_c_bracket),
                          "d_c_is_one": comb.d_c_is_one},
        "hecke_dimension": hk.dimension,
        "dim_end_q": ir.dim_end_q,
    }
    _emit_json(data, req.json_path)
    if req.dot_path:
        with open(req.dot_path, "w") as fh:
            fh.write(bipartite_dot(M))
            fh.write("\n")
            fh.write(rep.mckay.dot())
            fh.write("\n")
    return 0


def _run_matrix(req: AnalysisRequest) -> int:
    M = _load_matrix_file(req.input_path)
    rep = depth_report(M)
    _depth_text(rep)
    _emit_json({"depth": rep.to_json()}, req.json_path)
    if req.dot_path:
        with open(req.dot_path, "w") as fh:
            fh.write(bipartite_dot(M))
            fh.write("\n")
            fh.write(rep.mckay.dot())
            fh.write("\n")
    return 0


def _run_mackey(req: AnalysisRequest) -> int:
    G, subs = load_group_file(req.input_path, cap=req.cap_order)
    if "H" not in subs:
        raise ValueError(f"{req.input_path}: needs a subgroup named 'H'")
    H = subs["H"]
    ms = q_tensor_decomposition(G, H, req.power)
    print(f"Q^(x{req.power}) of index-{G.order // H.order} subgroup decomposes as:")
    for rep_sub, mult in ms.merged():
        print(f"  {mult} x Q_S with |S| = {rep_sub.order} "
              f"(index {G.order // rep_sub.order})")
    char = ms.character()
    pc = permutation_character(G, H)
    want = tuple(v ** req.power for v in pc)
    assert char == want, "decomposition character differs from (eps induced)^n"
    print(f"character = {list(char)} = (induced trivial)^{req.power}")
    data = {"power": req.power, "summands": ms.to_json(),
            "character": list(char)}
    if "K" in subs:
        mr = mackey_restrict(G, subs["K"], H)
        data["restriction_of_K"] = mr.to_json()
        orders = sorted(s.order for _, s in mr.entries)
        print(f"Q_K restricted to H: summand subgroup orders {orders}")
    _emit_json(data, req.json_path)
    return 0


def _run_hecke(req: AnalysisRequest) -> int:
    G, subs = load_group_file(req.input_path, cap=req.cap_order)
    if "H" not in subs:
        raise ValueError(f"{req.input_path}: needs a subgroup named 'H'")
    H = subs["H"]
    hk = hecke_algebra(G, H)
    print(f"Hecke algebra of the pair: dimension {hk.dimension}, "
          f"commutative: {hk.is_commutative()}")
    print(f"double-coset indices: {list(hk.indices)}")
    _emit_json(hk.to_json(), req.json_path)
    return 0


def _run_chartab(req: AnalysisRequest) -> int:
    G, _ = load_group_file(req.input_path, cap=req.cap_order)
    tab = compute_character_table(G)
    print(f"character table of a group of order {G.order}: "
          f"{len(tab.classes)} classes, degrees {tab.degrees}")
    print("classes (representative, size): "
          + ", ".join(f"({r.rep!r}, {r.size})" for r in tab.classes))
    for i, row in enumerate(tab.irreducibles):
        print(f"  chi_{i}: " + " ".join(scalar_to_string(v) for v in row))
    if req.import_path:
        imported = load_table_file(G, req.import_path)
        ok = tables_agree_up_to_row_permutation(tab, imported)
        print(f"imported table agrees up to row permutation: {ok}")
        assert ok, "imported table disagrees with the computed table"
    _emit_json(tab.to_json(), req.json_path)
    return 0


def _run_hopf(req: AnalysisRequest) -> int:
    with open(req.input_path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{req.input_path}: line {exc.lineno}: {exc.msg}") from exc
    H, subs = HopfAlgebraData.from_json(data)
    print(f"Hopf algebra of dimension {H.dim} over Q(zeta_{H.field_order}); "
          f"axioms verified")
    if not subs:
        raise ValueError(f"{req.input_path}: needs at least one entry under "
                         "'subalgebras'")
    out = {"dim": H.dim, "pairs": {}}
    for name, emb in sorted(subs.items()):
        Q = quotient_module(H, emb)
        rep = integrals_and_modular(H, emb, Q)
        chain = annihilator_chain(Q, cap=req.cap_tensor_dim)
        ti = trace_ideals(H, emb, Q, cap=req.cap_tensor_dim, t_R=rep.t_R,
                          ell_q=chain.ell_q)
        ir = idealizer_and_endQ(H, emb, Q)
        print(f"pair {name}: dim R = {emb.dim}, dim Q = {Q.dim_q}")
        print(f"  Ann Q dims: {[i.dim for i in chain.ideals]}; "
              f"ell_Q = {chain.ell_q}; Hopf core dim = "
              f"{chain.hopf_core.dim if chain.hopf_core else None}")
        print(f"  trace ideal dims: {[i.dim for i in ti.ideals]}; L_Q = {ti.L_q}; "
              f"tau(Q) = H t_R H: {ti.htrh_matches}")
        print(f"  dim T = {ir.dim_T}; dim End Q = {ir.dim_end_q}; "
              f"normal: {ir.normal}")
        print(f"  Frobenius extension: {rep.frobenius}; "
              f"integral in Q: {bool(rep.q_integral_basis)}; "
              f"semisimple extension: {rep.semisimple_extension}")
        out["pairs"][name] = {
            "dim_R": emb.dim, "dim_Q": Q.dim_q,
            "ann_dims": [i.dim for i in chain.ideals],
            "ell_Q": chain.ell_q,
            "hopf_core_dim": chain.hopf_core.dim if chain.hopf_core else None,
            "trace_dims": [i.dim for i in ti.ideals],
            "L_Q": ti.L_q,
            "tau_matches_HtRH": ti.htrh_matches,
            "dim_T": ir.dim_T, "dim_end_q": ir.dim_end_q, "normal": ir.normal,
            "frobenius": rep.frobenius,
            "has_q_integral": bool(rep.q_integral_basis),
            "semisimple_extension": rep.semisimple_extension,
        }
    _emit_json(out, req.json_path)
    return 0


def _run_sweep(req: AnalysisRequest) -> int:
    report = run_sweep(req.max_order, check_conjecture=True)
    print(f"sweep over catalog groups of order <= {req.max_order}: "
          f"{len(report.rows)} subgroup pairs")
    for row in report.rows:
        print(f"  {row.group} #{row.subgroup_index} |H|={row.subgroup_order} "
              f"index={row.index} d_0={row.d_0} d_h={row.d_h} "
              f"eigen_ok={row.eigen_ok} pf_ok={row.pf_ok}")
    if req.conjecture:
        print(f"conjecture d_0 <= d_h: {len(report.violations)} violations")
    _emit_json(report.to_json(), req.json_path)
    if report.violations:
        for v in report.violations:
            print(f"VIOLATION: {v.group} subgroup #{v.subgroup_index}", file=sys.stderr)
        return 1
    return 0


def run(req: AnalysisRequest) -> int:
    handlers = {
        "group-pair": _run_group_pair,
        "matrix-only": _run_matrix,
        "mackey": _run_mackey,
        "hecke": _run_hecke,
        "chartab": _run_chartab,
        "hopf-pair": _run_hopf,
        "sweep": _run_sweep,
    }
    return handlers[req.mode](req)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="subdepth",
        description="Exact depth invariants of subgroup and Hopf-subalgebra pairs")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, dot=False):
        p.add_argument("--json", dest="json_path", metavar="PATH",
                       help="write a JSON report to PATH")
        if dot:
            p.add_argument("--dot", dest="dot_path", metavar="PATH",
                           help="write Graphviz output to PATH")
        p.add_argument("--cap-order", type=int, default=DEFAULT_ORDER_CAP,
                       help="group enumeration cap")
        p.add_argument("--cap-tensor-dim", type=int, default=DEFAULT_TENSOR_CAP,
                       help="tensor power dimension cap")

    p_depth = sub.add_parser("depth", help="depth invariants of a pair")
    dsub = p_depth.add_subparsers(dest="depth_mode", required=True)
    p_dg = dsub.add_parser("group", help="from a group-pair JSON file")
    p_dg.add_argument("file")
    common(p_dg, dot=True)
    p_dm = dsub.add_parser("matrix", help="from a bare inclusion matrix")
    p_dm.add_argument("file")
    common(p_dm, dot=True)

    p_mackey = sub.add_parser("mackey", help="tensor-power decompositions")
    p_mackey.add_argument("file")
    p_mackey.add_argument("--power", type=int, default=2)
    common(p_mackey)

    p_hecke = sub.add_parser("hecke", help="double-coset Hecke algebra")
    p_hecke.add_argument("file")
    common(p_hecke)

    p_chartab = sub.add_parser("chartab", help="exact character table")
    p_chartab.add_argument("file")
    p_chartab.add_argument("--import", dest="import_path", metavar="TABLE",
                           help="cross-validate against an imported table")
    common(p_chartab)

    p_hopf = sub.add_parser("hopf", help="Hopf-subalgebra pair report")
    p_hopf.add_argument("file")
    common(p_hopf)

    p_sweep = sub.add_parser("sweep", help="corpus sweep")
    p_sweep.add_argument("--max-order", type=int, default=24)
    p_sweep.add_argument("--conjecture", action="store_true",
                         help="report d_0 <= d_h violations")
    common(p_sweep)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "depth":
        mode = "group-pair" if args.depth_mode == "group" else "matrix-only"
    elif args.command == "hopf":
        mode = "hopf-pair"
    else:
        mode = args.command
    req = AnalysisRequest(
        mode=mode,
        input_path=getattr(args, "file", None),
        power=getattr(args, "power", 2),
        import_path=getattr(args, "import_path", None),
        max_order=getattr(args, "max_order", 24),
        conjecture=getattr(args, "conjecture", False),
        cap_order=getattr(args, "cap_order", DEFAULT_ORDER_CAP),
        cap_tensor_dim=getattr(args, "cap_tensor_dim", DEFAULT_TENSOR_CAP),
        json_path=getattr(args, "json_path", None),
        dot_path=getattr(args, "dot_path", None),
    )
    try:
        return run(req)
    except (ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
