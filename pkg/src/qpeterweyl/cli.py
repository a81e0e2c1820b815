"""Command-line entry point: ``qpw <command> [options]``.

Exit status: 0 on success, 1 when a verification fails, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .exactmath import ONE, PoleError, QMatrix, rank
from .uqrep import SL2, AlgebraSpec, IrrepLabel, gl

OUTPUT_DIR_ENV = "QPW_OUTPUT_DIR"


class UsageError(ValueError):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _algebra(args) -> AlgebraSpec:
    if args.algebra == "sl2":
        return SL2
    if args.k < 2:
        raise UsageError("--k must be at least 2")
    return gl(args.k)


def _label(alg: AlgebraSpec, text: str | None, flag: str) -> IrrepLabel:
    if text is None:
        raise UsageError(f"{flag} is required")
    try:
        parts = tuple(int(x) for x in text.split(","))
        return IrrepLabel(alg, parts)
    except ValueError as exc:
        raise UsageError(f"bad {flag} {text!r}: {exc}") from None


# -- commands ------------------------------------------------------------------


def cmd_threej(args):
    from .clebsch import threej

    alg = _algebra(args)
    table = threej(_label(alg, args.lam, "--lambda"), _label(alg, args.mu, "--mu"))
    d = table.to_dict()
    if args.format == "json":
        return 0, dumps(d)
    lines = [f"3j symbols for {table.lam} x {table.mu} ({alg})"]
    for kind in ("entries", "dual_entries"):
        lines.append(kind + ":")
        for r in d[kind]:
            nu = ",".join(map(str, r["nu"]))
            lines.append(f"  nu=({nu}) k={r['k']} b1={r['b1']} b2={r['b2']} b3={r['b3']}: {r['value']}")
    return 0, "\n".join(lines) + "\n"


def structure_constants_dict(lam: IrrepLabel, mu: IrrepLabel) -> dict:
    from .ofun import structure_constants

    table = structure_constants(lam, mu)
    return {
        "algebra": lam.algebra.to_dict(),
        "lambda": list(lam.hw),
        "mu": list(mu.hw),
        "products": [
            {"i1": i1, "j1": j1, "i2": i2, "j2": j2, "value": v.to_list()}
            for (i1, j1, i2, j2), v in sorted(table.items())
        ],
    }


def cmd_structure_constants(args):
    alg = _algebra(args)
    lam, mu = _label(alg, args.lam, "--lambda"), _label(alg, args.mu, "--mu")
    d = structure_constants_dict(lam, mu)
    if args.format == "json":
        return 0, dumps(d)
    lines = []
    for p in d["products"]:
        terms = " + ".join(
            f"({t['coeff']})*f({','.join(map(str, t['lambda']))})[{t['i']},{t['j']}]" for t in p["value"]
        ) or "0"
        lines.append(f"f{lam}[{p['i1']},{p['j1']}] * f{mu}[{p['i2']},{p['j2']}] = {terms}")
    return 0, "\n".join(lines) + "\n"


def cmd_hopf_check(args):
    from .ofun import verify_hopf

    alg = _algebra(args)
    rep = verify_hopf(alg, args.max_weight, args.samples, args.seed)
    if args.format == "json":
        out = {
            "algebra": alg.to_dict(),
            "max_weight": args.max_weight,
            "samples": args.samples,
            "seed": args.seed,
            "counts": dict(sorted(rep.counts.items())),
            "failures": [{"check": n, "witness": repr(w)} for n, w in rep.failures],
            "ok": rep.ok,
        }
        text = dumps(out)
    else:
        text = rep.summary() + "\n"
    return (0 if rep.ok else 1), text


def cmd_schur_weyl(args):
    from .schurweyl import check_hecke, schur_weyl_decompose

    if args.n is None or args.n < 1:
        raise UsageError("--n must be a positive integer")
    if args.k < 2:
        raise UsageError("--k must be at least 2")
    D = schur_weyl_decompose(args.k, args.n)
    checks = check_hecke(args.k, args.n) if args.n >= 2 else {}
    total = sum(r["dimV"] * r["dimW"] for r in D.dimension_table())
    ok = total == args.k**args.n and all(checks.values())
    if args.format == "json":
        text = dumps(
            {"k": args.k, "n": args.n, "isotypic": D.dimension_table(), "total": total, "checks": checks}
        )
    else:
        lines = [f"V^{args.n} for gl{args.k}: {D.summary()}"]
        for r in D.dimension_table():
            lines.append(f"  lambda=({','.join(map(str, r['lambda']))}) dimV={r['dimV']} dimW={r['dimW']}")
        lines += [f"  {name}: {'ok' if v else 'FAILED'}" for name, v in checks.items()]
        text = "\n".join(lines) + "\n"
    return (0 if ok else 1), text


def cmd_frt(args):
    from .schurweyl import frt_relations

    if args.k < 2:
        raise UsageError("--k must be at least 2")
    rep = frt_relations(args.k)
    if args.format == "json":
        text = dumps(rep.to_dict())
    else:
        text = "\n".join(rep.lines()) + "\n"
        for key, v in rep.witnesses:
            text += f"nonzero residual at {key}: {v}\n"
    return (0 if rep.ok else 1), text


def cmd_pi(args):
    from .schurweyl import pi_matrix, q_involution

    n = 2 if args.n is None else args.n
    if n < 1 or args.k < 2:
        raise UsageError("--n must be positive and --k at least 2")
    P = pi_matrix(args.k, n)
    checks = {"idempotent": P @ P == P, "rank": rank(P)}
    ok = checks["idempotent"]
    if n == 2:
        Q = q_involution(args.k)
        N = args.k**2
        checks["equals_half_one_plus_Q"] = P == (QMatrix.identity(N * N) + Q.T.kron(Q)).scale(ONE / 2)
        ok = ok and checks["equals_half_one_plus_Q"]
    if args.format == "json":
        text = dumps({"k": args.k, "n": n, "checks": checks, "matrix": P.to_dict()})
    else:
        text = f"pi on degree {n} functionals (k={args.k}): size {P.rows}, rank {checks['rank']}\n"
        text += "".join(f"  {k}: {v}\n" for k, v in checks.items() if k != "rank")
    return (0 if ok else 1), text


def cmd_eval(args):
    from .ofun import pairing, symbol

    alg = _algebra(args)
    lam = _label(alg, args.lam, "--lambda")
    if not (0 <= args.i < lam.dim and 0 <= args.j < lam.dim):
        raise UsageError(f"--i/--j must lie in [0, {lam.dim})")
    word = args.word.split() if args.word else []
    try:
        val = pairing(symbol(alg, lam, args.i, args.j), word)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad --word {args.word!r}: {exc}") from None
    out = {"lambda": list(lam.hw), "i": args.i, "j": args.j, "word": word, "value": str(val)}
    try:
        out["at_q_1"] = str(val.eval_at_one())
    except PoleError:
        out["at_q_1"] = None
    if args.format == "json":
        return 0, dumps(out)
    return 0, f"<f{lam}[{args.i},{args.j}], {' '.join(word) or '1'}> = {val}\n"


def export_goldens(directory: Path) -> list[Path]:
    """Write the canonical golden set into ``directory``."""
    from .clebsch import threej
    from .ofun import generators_m2
    from .schurweyl import frt_relations, schur_weyl_decompose

    directory.mkdir(parents=True, exist_ok=True)
    alg = gl(2)
    vec = IrrepLabel(alg, (1, 0))
    written = []

    def put(name, text):
        p = directory / name
        p.write_text(text, encoding="utf-8")
        written.append(p)

    put("structure_constants_gl2_degree2.json", dumps(structure_constants_dict(vec, vec)))
    g = generators_m2(alg)
    sym, alt = IrrepLabel(alg, (2, 0)), IrrepLabel(alg, (1, 1))
    expansions = {}
    for name in ("ad", "da", "bc", "cb"):
        f = g[name[0]] * g[name[1]]
        # s*(x)s and t*(x)t are the diagonal coefficients on the weight-zero vectors
        expansions[name] = {
            "s*s": str(f.coeff(next(s for s in f.terms if s.lam == sym))),
            "t*t": str(f.coeff(next(s for s in f.terms if s.lam == alt))),
            "peter_weyl": f.to_list(),
        }
    put("weight_zero_products_gl2.json", dumps(expansions))
    put("threej_gl2_vector_vector.json", dumps(threej(vec, vec).to_dict()))
    for k, n in ((2, 2), (2, 3), (3, 3)):
        D = schur_weyl_decompose(k, n)
        put(f"schur_weyl_k{k}_n{n}.json", dumps({"k": k, "n": n, "summary": D.summary(), "isotypic": D.dimension_table()}))
    rep = frt_relations(2)
    put("frt_k2.txt", "\n".join(rep.lines()) + "\n")
    put("frt_k2_q1.txt", "\n".join(rep.lines(at_one=True)) + "\n")
    return written


def cmd_export_goldens(args):
    target = args.out or os.environ.get(OUTPUT_DIR_ENV) or "goldens"
    files = export_goldens(Path(target))
    return 0, "".join(f"{p}\n" for p in files)


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", choices=["sl2", "gl"], default="gl")
    common.add_argument("--k", type=int, default=2)
    common.add_argument("--format", choices=["json", "text"], default="text")
    common.add_argument("--out", help="output file (directory for export-goldens); default stdout")

    p = argparse.ArgumentParser(prog="qpw", description="Peter-Weyl computations in quantized function algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    for name, fn, help_ in (
        ("threej", cmd_threej, "3j and dual 3j symbols of V_lambda (x) V_mu"),
        ("structure-constants", cmd_structure_constants, "products of Peter-Weyl basis elements"),
    ):
        sp = add(name, fn, help_)
        sp.add_argument("--lambda", dest="lam", help="highest weight, e.g. 2,1,0 or 3 for sl2")
        sp.add_argument("--mu", dest="mu")
    sp = add("hopf-check", cmd_hopf_check, "exact bialgebra axiom checks")
    sp.add_argument("--max-weight", type=int, default=2)
    sp.add_argument("--samples", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp = add("schur-weyl", cmd_schur_weyl, "decomposition of V^n and Hecke checks")
    sp.add_argument("--n", type=int)
    add("frt", cmd_frt, "derive the R X1 X2 = X2 X1 R relations")
    sp = add("pi", cmd_pi, "the projection onto equivariant functionals")
    sp.add_argument("--n", type=int)
    sp = add("eval", cmd_eval, "pair a basis function with a word in U_q")
    sp.add_argument("--lambda", dest="lam")
    sp.add_argument("--i", type=int, default=0)
    sp.add_argument("--j", type=int, default=0)
    sp.add_argument("--word", default="", help='space separated generators, e.g. "E1 K1"')
    add("export-goldens", cmd_export_goldens, "write the golden files")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        status, text = args.fn(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qpw: error: {exc}", file=sys.stderr)
        return 2
    if args.out and args.command != "export-goldens":
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
