"""Command-line front end.

Exit codes: 0 success, 1 bad input or usage, 2 methods disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import closedform, construct, ferrers, integrality, laplacian, oracle
from .core import Spectrum, ThresholdCode, fmt_rational
from .errors import ThresholdError

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2
EXACT_METHODS = ("thm1", "incremental", "cor", "ferrers")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _read_degrees(args) -> list[int]:
    if getattr(args, "degrees_file", None):
        text = Path(args.degrees_file).read_text(encoding="utf-8")
    else:
        text = args.degrees
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ThresholdError("empty degree sequence")
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ThresholdError(f"degree sequence must be integers: {text!r}") from None


def _eigen_json(spec: Spectrum) -> list[dict]:
    return [{"num": v.numerator, "den": v.denominator, "mult": m} for v, m in spec.entries]


def _numeric(code: ThresholdCode):
    return oracle.symmetric_eigenvalues(laplacian.laplacian_matrix(construct.build_hypergraph(code)))


def _resolve_input(args) -> tuple[ThresholdCode, list[int] | None]:
    if args.code is not None:
        return construct.parse_code(args.code), None
    degrees = _read_degrees(args)
    code, _ = ferrers.recover_code(degrees)
    return code, degrees


def _exact(method: str, code: ThresholdCode, degrees: list[int] | None) -> Spectrum:
    if method == "thm1":
        return closedform.threshold_spectrum(code)
    if method == "incremental":
        return closedform.incremental_spectrum(code)
    if method == "cor":
        return closedform.k_threshold_spectrum(code)
    if method == "ferrers":
        if degrees is None:
            degrees = construct.degree_sequence(construct.build_hypergraph(code))
        return ferrers.ferrers_spectrum(degrees)
    raise ValueError(method)


def _applicable(code: ThresholdCode) -> list[str]:
    methods = ["thm1", "incremental"]
    if code.uniform_k() is not None or code.d == 0:
        methods.append("cor")
    if code.uniform_k() is not None:
        methods.append("ferrers")
    return methods


def _fmt_float(x: float) -> str:
    return f"{x:.12g}"


def cmd_spectrum(args) -> int:
    code, degrees = _resolve_input(args)
    if args.method == "numeric":
        ev = _numeric(code)
        if args.format == "json":
            print(json.dumps({"n": len(ev), "method": "numeric", "eigenvalues": [float(x) for x in ev]}))
        elif args.format == "csv":
            print("\n".join(_fmt_float(x) for x in ev))
        else:
            print(", ".join(_fmt_float(x) for x in ev))
        return EXIT_OK
    if args.method != "all":
        spec = _exact(args.method, code, degrees)
        if args.format == "json":
            print(json.dumps({"n": spec.n, "method": args.method, "eigenvalues": _eigen_json(spec)}))
        elif args.format == "csv":
            print("\n".join(fmt_rational(v) for v in spec.values()))
        else:
            print(", ".join(fmt_rational(v) for v in spec.values()))
        return EXIT_OK

    results = {m: _exact(m, code, degrees) for m in _applicable(code)}
    reference = results["thm1"]
    agree = all(s == reference for s in results.values())
    ev = _numeric(code)
    report = oracle.compare_spectra(reference, ev, args.tol)
    agree = agree and report.passed
    if args.format == "json":
        payload = {
            "n": reference.n,
            "eigenvalues": _eigen_json(reference),
            "methods": {m: _eigen_json(s) for m, s in results.items()},
            "numeric": [float(x) for x in ev],
            "worst_deviation": report.worst_deviation,
            "agree": agree,
        }
        print(json.dumps(payload))
    elif args.format == "csv":
        for m, s in results.items():
            for v in s.values():
                print(f"{m},{fmt_rational(v)}")
        for x in ev:
            print(f"numeric,{_fmt_float(x)}")
    else:
        for m, s in results.items():
            print(f"{m}: " + ", ".join(fmt_rational(v) for v in s.values()))
        print("numeric: " + ", ".join(_fmt_float(x) for x in ev))
        print("agree: " + ("yes" if agree else "no"))
    return EXIT_OK if agree else EXIT_MISMATCH


def _verify_code(code: ThresholdCode, degrees, tol: float, out) -> bool:
    ok = True
    results = {m: _exact(m, code, degrees) for m in _applicable(code)}
    reference = results["thm1"]
    for m, s in results.items():
        same = s == reference
        ok &= same
        print(f"  {m:<12} {'exact match' if same else 'MISMATCH: ' + str(s)}", file=out)
    report = oracle.compare_spectra(reference, _numeric(code), tol)
    ok &= report.passed
    print(f"  {'numeric':<12} {report}", file=out)
    return ok


def cmd_verify(args) -> int:
    out = sys.stdout
    if args.expr is not None:
        expr = closedform.parse_coexpr(args.expr)
        spec = closedform.coexpr_spectrum(expr)
        h = closedform.build_coexpr(expr)
        report = oracle.compare_spectra(spec, oracle.symmetric_eigenvalues(laplacian.laplacian_matrix(h)), args.tol)
        print(f"expr {closedform.format_coexpr(expr)} (n={spec.n})")
        print(f"  {'numeric':<12} {report}")
        ok = report.passed
    elif args.seed is not None:
        codes = construct.random_codes(args.seed, args.count, args.max_d, args.max_k, args.max_m,
                                       k_threshold=args.k_threshold, positive_m=args.positive_m)
        ok = True
        for idx, code in enumerate(codes):
            print(f"[{idx}] code {code} (n={code.n})")
            ok &= _verify_code(code, None, args.tol, out)
    else:
        code, degrees = _resolve_input(args)
        print(f"code {code} (n={code.n})")
        ok = _verify_code(code, degrees, args.tol, out)
    print("OK" if ok else "MISMATCH")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_build(args) -> int:
    code = construct.parse_code(args.code)
    text = construct.to_edge_list(construct.build_hypergraph(code))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_laplacian(args) -> int:
    h = construct.build_hypergraph(construct.parse_code(args.code))
    sys.stdout.write(laplacian.laplacian_matrix(h).to_csv())
    return EXIT_OK


def cmd_ferrers(args) -> int:
    degrees = _read_degrees(args)
    diagram = ferrers.ferrers_from_degrees(degrees)
    code, k = ferrers.recover_code(degrees)
    d = code.d
    widths = ferrers.domination_widths(code)
    cols = [diagram.colsum(i) for i in range(1, d + 1)]
    print(f"d={d} k={k} D={','.join(map(str, widths))} C={','.join(map(str, cols))} code={code}")
    if args.render:
        sys.stdout.write(ferrers.render_ascii(diagram))
    return EXIT_OK


def _cert_lines(cert: integrality.IntegralityCertificate) -> str:
    if cert.all_zero:
        return "r = any (all eigenvalues are 0)"
    return f"r = {fmt_rational(cert.r)}"


def cmd_coexpr(args) -> int:
    expr = closedform.parse_coexpr(args.expr)
    spec = closedform.coexpr_spectrum(expr)
    cert = integrality.certify(spec)
    pred = integrality.predicted_ratio(expr)
    if args.format == "json":
        print(json.dumps({
            "n": spec.n,
            "eigenvalues": _eigen_json(spec),
            "certificate": cert.to_json(),
            "predicted": {"num": pred.numerator, "den": pred.denominator},
        }))
    else:
        print(", ".join(fmt_rational(v) for v in spec.values()))
        print(_cert_lines(cert))
        print(f"predicted ratio = {fmt_rational(pred)}")
    return EXIT_OK


def cmd_integrality(args) -> int:
    if args.expr is not None:
        expr = closedform.parse_coexpr(args.expr)
        spec = closedform.coexpr_spectrum(expr)
        pred = integrality.predicted_ratio(expr)
    else:
        code = construct.parse_code(args.code)
        spec = closedform.threshold_spectrum(code)
        pred = integrality.threshold_ratio(code.k)
    cert = integrality.certify(spec)
    holds = integrality.verify_integral(spec, pred)
    if args.format == "json":
        payload = cert.to_json()
        payload["predicted"] = {"num": pred.numerator, "den": pred.denominator}
        payload["predicted_holds"] = holds
        print(json.dumps(payload))
    else:
        print(_cert_lines(cert))
        print(f"predicted ratio = {fmt_rational(pred)} ({'holds' if holds else 'FAILS'})")
    return EXIT_OK if holds else EXIT_MISMATCH


def cmd_random(args) -> int:
    codes = construct.random_codes(args.seed, args.count, args.max_d, args.max_k, args.max_m,
                                   k_threshold=args.k_threshold, positive_m=args.positive_m)
    for code in codes:
        print(construct.serialize_code(code, runlength=args.runlength))
    return EXIT_OK


def _add_source(p, degrees=True, expr=False):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--code", help='threshold code, e.g. "0 3 0 3 0 0 3 3" or "0^3 1"')
    if degrees:
        g.add_argument("--degrees", help="degree sequence, comma or space separated")
        g.add_argument("--degrees-file", help="file with one degree per line")
    if expr:
        g.add_argument("--expr", help="co-expression, e.g. 'U(T(0 2), C(T(0 0 2)))'")
    return g


def _add_random_bounds(p):
    p.add_argument("--max-d", type=int, default=6)
    p.add_argument("--max-k", type=int, default=5)
    p.add_argument("--max-m", type=int, default=5)
    p.add_argument("--k-threshold", action="store_true", help="one shared k per code")
    p.add_argument("--positive-m", action="store_true", help="every m_i >= 1")
    p.add_argument("--count", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperthreshold", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", help="exact Laplacian spectrum")
    _add_source(p)
    p.add_argument("--method", choices=EXACT_METHODS + ("numeric", "all"), default="thm1")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--tol", type=float, default=oracle.COMPARE_TOL)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="check every closed form against the numeric oracle")
    g = _add_source(p, expr=True)
    g.add_argument("--seed", type=int, help="verify --count random codes from this seed")
    _add_random_bounds(p)
    p.add_argument("--tol", type=float, default=oracle.COMPARE_TOL)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("build", help="write the edge list of a code")
    p.add_argument("--code", required=True)
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("laplacian", help="exact Laplacian as CSV of num/den tokens")
    p.add_argument("--code", required=True)
    p.set_defaults(func=cmd_laplacian)

    p = sub.add_parser("ferrers", help="Ferrers diagram analysis of a degree sequence")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--degrees")
    g.add_argument("--degrees-file")
    p.add_argument("--render", action="store_true")
    p.set_defaults(func=cmd_ferrers)

    p = sub.add_parser("coexpr", help="spectrum of a co-k-threshold expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_coexpr)

    p = sub.add_parser("integrality", help="r-integrality certificate")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--code")
    g.add_argument("--expr")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_integrality)

    p = sub.add_parser("random", help="seeded random threshold codes")
    p.add_argument("--seed", type=int, required=True)
    _add_random_bounds(p)
    p.add_argument("--runlength", action="store_true")
    p.set_defaults(func=cmd_random)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ThresholdError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
