"""Command-line front end.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from pathlib import Path

from . import __version__
from .apolarity import apolar_component, catalecticant, sylvester_lower_bound
from .certify import (
    CertificationError,
    apolar_ideal_theorem_report,
    build_ideal_I,
    certify_border_rank_q3,
    classify_ternary_quadratic,
    decompose_q2,
)
from .groebner import NotGroebnerError, buchberger_colon_check, hilbert_function, leading_ideal
from .harmonic import harmonic_basis_3
from .parser import PolySyntaxError, parse_poly
from .polynomial import UVZ, X, format_monomial, quadric

SUBCOMMANDS = ("apolar", "catalecticant", "harmonic-basis", "groebner-check", "hilbert",
               "certify", "classify", "decompose-q2")


class CheckFailed(Exception):
    def __init__(self, payload):
        self.payload = payload
        super().__init__("check failed")


@dataclass
class CliConfig:
    command: str
    output_format: str = "text"
    tolerance: float = 1e-9
    hilbert_window: int | None = None
    s: int | None = None
    d: int | None = None
    n: int = 3
    j: int | None = None
    theta: float = 0.0
    k: float = 0.0
    s_range: tuple | None = None
    out: str | None = None
    poly: list | None = None
    all_elements: bool = False


def _s_range(text: str) -> tuple:
    try:
        a, b = (int(x) for x in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return a, b


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="apolarity-lab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", dest="output_format", choices=("text", "json"), default="text")
        sp.add_argument("--out", metavar="FILE")
        return sp

    sp = common(sub.add_parser("apolar", help="apolar ideal components of a form (default q_n^s)"))
    sp.add_argument("poly", nargs="?", help="form in x1..xn")
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--s", type=int)
    sp.add_argument("--d", type=int, help="degree of the component; omit to check the whole ideal of q_n^s")

    sp = common(sub.add_parser("catalecticant", help="catalecticant ranks"))
    sp.add_argument("poly", nargs="?")
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--s", type=int)
    sp.add_argument("--j", type=int)

    sp = common(sub.add_parser("harmonic-basis", help="ladder basis p_{d,k} of degree-d harmonics"))
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--all", dest="all_elements", action="store_true", help="include negative k")

    sp = common(sub.add_parser("groebner-check", help="colon-criterion Gröbner check"))
    sp.add_argument("poly", nargs="*", help="generators in u, z, v (default p_{d,0..d})")
    sp.add_argument("--d", type=int)

    sp = common(sub.add_parser("hilbert", help="Hilbert function of I_{s+1}"))
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--window", dest="hilbert_window", type=int)

    sp = common(sub.add_parser("certify", help="border-rank certificate for q_3^s"))
    sp.add_argument("--s", type=int)
    sp.add_argument("--s-range", dest="s_range", type=_s_range)
    sp.add_argument("--window", dest="hilbert_window", type=int)

    sp = common(sub.add_parser("classify", help="border rank of g^s for a ternary quadratic g"))
    sp.add_argument("poly", nargs=1)

    sp = common(sub.add_parser("decompose-q2", help="minimal decomposition of (x1^2+x2^2)^s"))
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--theta", type=float, default=0.0)
    sp.add_argument("--k", type=float, default=0.0)
    sp.add_argument("--tol", dest="tolerance", type=float, default=1e-9)
    return p


def parse_config(argv, parser=None) -> CliConfig:
    parser = parser or build_parser()
    ns = parser.parse_args(argv)
    cfg = CliConfig(**{k: v for k, v in vars(ns).items() if k in CliConfig.__dataclass_fields__})
    _validate(cfg, parser)
    return cfg


def _validate(cfg: CliConfig, parser):
    def need(cond, msg):
        if not cond:
            parser.error(msg)

    if cfg.s is not None:
        need(cfg.s >= 1 if cfg.command in ("certify", "hilbert", "decompose-q2") else cfg.s >= 0,
             f"--s: invalid value {cfg.s}")
    if cfg.d is not None:
        need(cfg.d >= (1 if cfg.command == "groebner-check" else 0), f"--d: invalid value {cfg.d}")
    need(cfg.n >= 1, f"--n: invalid value {cfg.n}")
    need(cfg.tolerance > 0, f"--tol: must be positive, got {cfg.tolerance}")
    if cfg.hilbert_window is not None:
        need(cfg.hilbert_window >= 0, f"--window: invalid value {cfg.hilbert_window}")
    if cfg.command == "certify":
        need((cfg.s is None) != (cfg.s_range is None), "certify: give exactly one of --s, --s-range")
    if cfg.command in ("apolar", "catalecticant"):
        need(cfg.poly is not None or cfg.s is not None, f"{cfg.command}: give a form or --s")
    if cfg.command == "groebner-check":
        need(bool(cfg.poly) != (cfg.d is not None), "groebner-check: give generators or --d, not both")
    if cfg.command == "apolar" and cfg.d is None:
        need(cfg.poly is None, "apolar: --d is required for an explicit form")


# -- subcommands -----------------------------------------------------------


def _form(cfg: CliConfig):
    if cfg.poly:
        return parse_poly(cfg.poly if isinstance(cfg.poly, str) else cfg.poly[0], X(cfg.n))
    return quadric(X(cfg.n)) ** cfg.s


def cmd_apolar(cfg):
    if cfg.d is None:
        rep = apolar_ideal_theorem_report(cfg.n, cfg.s)
        data = {"n": cfg.n, "s": cfg.s, "ok": rep.ok, "degrees": rep.degrees}
        text = "\n".join(
            f"m={row['m']}: dim apolar={row['apolar_dim']} dim (H^{cfg.s + 1})={row['ideal_dim']} "
            f"{'equal' if row['equal'] else 'DIFFERENT'}" for row in rep.degrees)
        if not rep.ok:
            raise CheckFailed((data, text))
        return data, text
    f = _form(cfg)
    comp = apolar_component(f, cfg.d)
    data = {"f": str(f), "m": cfg.d, "dim": comp.dim, "basis": [str(b) for b in comp.basis]}
    text = f"dim = {comp.dim}\n" + "\n".join(str(b) for b in comp.basis)
    return data, text


def cmd_catalecticant(cfg):
    f = _form(cfg)
    if cfg.j is None:
        d = f.homogeneous_degree()
        ranks = [catalecticant(f, j).rank for j in range(d + 1)]
        lb = sylvester_lower_bound(f)
        data = {"f": str(f), "ranks": ranks, "lower_bound": lb}
        return data, f"ranks: {ranks}\nlower bound: {lb}"
    cat = catalecticant(f, cfg.j)
    data = {"f": str(f), "j": cfg.j, "rank": cat.rank, "shape": list(cat.matrix.shape),
            "matrix": [[str(x) for x in row] for row in cat.matrix.to_lists()]}
    return data, f"rank = {cat.rank} (matrix {cat.matrix.rows}x{cat.matrix.cols})"


def _cache_path(d: int, all_elements: bool):
    root = os.environ.get("APOLARITY_LAB_CACHE")
    if not root:
        return None
    return Path(root) / f"harmonic_basis_{d}{'_all' if all_elements else ''}.json"


def cmd_harmonic_basis(cfg):
    path = _cache_path(cfg.d, cfg.all_elements)
    if path is not None and path.exists():
        data = json.loads(path.read_text())
    else:
        basis = harmonic_basis_3(cfg.d)
        ks = range(cfg.d, -cfg.d - 1, -1) if cfg.all_elements else range(cfg.d, -1, -1)
        data = {"d": cfg.d, "elements": [{"k": k, "poly": str(basis[k])} for k in ks]}
        if path is not None:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(data))
    text = "\n".join(f"p[{cfg.d},{e['k']}] = {e['poly']}" for e in data["elements"])
    return data, text


def cmd_groebner_check(cfg):
    if cfg.poly:
        gens = [parse_poly(t, UVZ) for t in cfg.poly]
    else:
        gens = list(reversed(build_ideal_I(cfg.d).generators))
    w = buchberger_colon_check(gens)
    data = w.to_dict(UVZ, gens)
    if w.ok:
        data["leading_ideal"] = leading_ideal(gens).to_strings()
    lines = [f"generator {i}: {g}" for i, g in enumerate(gens)]
    for st in w.steps:
        for r in st.reductions:
            mono = format_monomial(UVZ, r["multiplier"]) or "1"
            lines.append(f"j={st.j}: {mono} * g{st.j} -> remainder {r['remainder']}")
    lines.append("Gröbner basis: " + ("yes" if w.ok else "NO"))
    text = "\n".join(lines)
    if not w.ok:
        raise CheckFailed((data, text))
    return data, text


def cmd_hilbert(cfg):
    s = cfg.s
    window = 2 * s + 4 if cfg.hilbert_window is None else cfg.hilbert_window
    P = build_ideal_I(s + 1)
    try:
        P.leading_ideal = leading_ideal(P.groebner_basis)
    except NotGroebnerError:
        P.leading_ideal = None
    values = [hilbert_function(P, a) for a in range(window + 1)]
    r = comb(s + 2, 2)
    ok = values == [min(comb(a + 2, 2), r) for a in range(window + 1)]
    data = {"s": s, "r": r, "values": values, "matches_h_r": ok}
    text = f"HF(I_{s + 1}) on 0..{window}: {values}\nmatches h_r (r={r}): {ok}"
    if not ok:
        raise CheckFailed((data, text))
    return data, text


def _certify_one(args):
    s, window = args
    try:
        return certify_border_rank_q3(s, window).to_dict(), None
    except CertificationError as exc:
        return None, {"s": s, "failed_step": exc.step, "witness": str(exc.witness)}


def cmd_certify(cfg):
    if cfg.s is not None:
        jobs = [(cfg.s, cfg.hilbert_window)]
    else:
        a, b = cfg.s_range
        jobs = [(s, cfg.hilbert_window) for s in range(a, b + 1)]
    if len(jobs) == 1:
        results = [_certify_one(jobs[0])]
    else:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_certify_one, jobs))
    certs = [c for c, _ in results if c is not None]
    failures = [e for _, e in results if e is not None]
    data = certs[0] if cfg.s is not None and certs else {"certificates": certs, "failures": failures}
    lines = [f"s={c['s']}: brk(q3^{c['s']}) = {c['conclusion']} "
             f"(lower {c['lower_bound']}, upper {c['upper_bound']})" for c in certs]
    lines += [f"s={e['s']}: FAILED at {e['failed_step']}: {e['witness']}" for e in failures]
    text = "\n".join(lines)
    if failures:
        raise CheckFailed((data if certs else {"failures": failures}, text))
    return data, text


def cmd_classify(cfg):
    g = parse_poly(cfg.poly[0], X(3))
    c = classify_ternary_quadratic(g)
    data = {"g": str(g), "matrix_rank": c.matrix_rank, "brk_formula": c.brk_formula_text,
            "brk_values": {str(s): c.brk_formula(s) for s in range(1, 7)}}
    text = f"rank {c.matrix_rank}, brk(g^s) = {c.brk_formula_text}"
    return data, text


def _num(x):
    x = complex(x)
    return x.real if x.imag == 0 else [x.real, x.imag]


def cmd_decompose_q2(cfg):
    try:
        dec = decompose_q2(cfg.s, cfg.theta, cfg.k, cfg.tolerance)
    except ArithmeticError as exc:
        raise CheckFailed(({"s": cfg.s, "error": str(exc)}, str(exc))) from None
    data = {"s": dec.s, "theta": dec.theta, "k": dec.k, "radius": dec.radius,
            "points": [[_num(a), _num(b)] for a, b in dec.points], "residual": dec.residual}
    text = "\n".join(f"({a}, {b})" for a, b in dec.points) + f"\nresidual = {dec.residual:.3e}"
    return data, text


HANDLERS = {
    "apolar": cmd_apolar,
    "catalecticant": cmd_catalecticant,
    "harmonic-basis": cmd_harmonic_basis,
    "groebner-check": cmd_groebner_check,
    "hilbert": cmd_hilbert,
    "certify": cmd_certify,
    "classify": cmd_classify,
    "decompose-q2": cmd_decompose_q2,
}


def _emit(cfg, data, text):
    body = json.dumps(data, indent=2) if cfg.output_format == "json" else text
    if cfg.out:
        Path(cfg.out).write_text(body + "\n")
    else:
        print(body)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        cfg = parse_config(argv, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        data, text = HANDLERS[cfg.command](cfg)
    except CheckFailed as exc:
        _emit(cfg, *exc.payload)
        return 1
    except (PolySyntaxError, ValueError) as exc:
        print(f"{parser.prog} {cfg.command}: error: {exc}", file=sys.stderr)
        return 2
    _emit(cfg, data, text)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
