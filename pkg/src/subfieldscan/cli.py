"""Command-line interface, polynomial text parsing, and JSON reports.

Subcommands: quad, cubic (the scans), certify (re-verify a report's
certificates), corpus (emit test polynomials with ground-truth sidecars),
bench (run a directory of polynomials and collect timings).

All integers in report JSON are serialized as decimal strings so values
beyond 53 bits survive every JSON implementation.  Exit codes: 0 complete,
2 complete with unproven absences, 3 input error, 4 factoring budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from fractions import Fraction
from pathlib import Path

from .config import ScanConfig
from .errors import BudgetExceeded, MultipleVariables, PolyParseError, SubfieldScanError
from .nfroot import NumberField, RootCertificate, verify_certificate
from .poly import Poly
from .scan import (STATUS_PROVED, ExcludedEntry, ScanReport, SieveSummary,
                   SubfieldEntry, cubic_subfield_scan, quad_subfield_scan)
from . import testkit

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_UNPROVEN = 2
EXIT_INPUT_ERROR = 3
EXIT_BUDGET = 4


# -- polynomial text ----------------------------------------------------------

_TERM_RE = re.compile(r"""
    (?P<coeff>[0-9]+(?:/[0-9]+)?)?          # optional coefficient
    (?:\s*\*\s*)?                            # optional *
    (?P<var>[A-Za-z])?                       # optional variable
    (?:\^(?P<exp>[0-9]+))?                   # optional power
""", re.VERBOSE)


def parse_poly(text: str) -> Poly:
    """Parse either an expression in one variable (x or X) or a whitespace
    separated descending coefficient line."""
    text = text.strip()
    if not text:
        raise PolyParseError("empty polynomial")
    if not re.search(r"[A-Za-z]", text):
        parts = text.split()
        if len(parts) > 1 or "/" in text:
            coeffs = []
            for tok in parts:
                try:
                    coeffs.append(Fraction(tok))
                except ValueError as exc:
                    raise PolyParseError(f"bad coefficient {tok!r}") from exc
            return Poly.from_desc(coeffs)
    return _parse_expression(text)


def _parse_expression(text: str) -> Poly:
    terms: dict[int, Fraction] = {}
    var_seen = None
    pos = 0
    sign = 1
    expect_term = True
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "+":
            if expect_term and sign == 1 and not terms and pos != 0:
                raise PolyParseError("unexpected '+'", pos)
            pos += 1
            expect_term = True
            continue
        if ch == "-":
            sign = -sign
            pos += 1
            expect_term = True
            continue
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise PolyParseError(f"cannot parse near {text[pos:pos+10]!r}", pos)
        coeff_s, var, exp_s = m.group("coeff"), m.group("var"), m.group("exp")
        if coeff_s is None and var is None:
            raise PolyParseError(f"cannot parse near {text[pos:pos+10]!r}", pos)
        if var is not None:
            if var not in ("x", "X"):
                raise MultipleVariables(f"unexpected variable {var!r}", pos)
            if var_seen is None:
                var_seen = var
            exp = int(exp_s) if exp_s is not None else 1
        else:
            if exp_s is not None:
                raise PolyParseError("exponent without variable", pos)
            exp = 0
        coeff = Fraction(coeff_s) if coeff_s is not None else Fraction(1)
        terms[exp] = terms.get(exp, Fraction(0)) + sign * coeff
        sign = 1
        expect_term = False
        pos = m.end()
    if expect_term:
        raise PolyParseError("dangling operator or no terms found")
    top = max(terms)
    return Poly([terms.get(i, Fraction(0)) for i in range(top + 1)])


def render_poly(p: Poly) -> str:
    """Human-readable expression, descending powers, inverse of parse_poly."""
    if not p:
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p[i]
        if c == 0:
            continue
        neg = c < 0
        mag = -c if neg else c
        if i == 0:
            body = str(mag)
        else:
            xpart = "x" if i == 1 else f"x^{i}"
            body = xpart if mag == 1 else f"{mag}*{xpart}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def read_poly_file(path: str) -> Poly:
    lines = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise PolyParseError(f"no polynomial found in {path}")
    return parse_poly(" ".join(lines))


# -- report JSON ----------------------------------------------------------------


def _cert_to_dict(cert: RootCertificate) -> dict:
    return {"scaled_root": [str(c) for c in cert.scaled_root], "scaling": "fprime"}


def _cert_from_dict(d: dict, h: Poly) -> RootCertificate:
    return RootCertificate(tuple(int(s) for s in d["scaled_root"]), h)


def _entry_h(entry_dict: dict) -> Poly:
    if "delta" in entry_dict:
        return Poly([-int(entry_dict["delta"]), 0, 1])
    return parse_poly(entry_dict["minpoly"])


def report_to_dict(report: ScanReport, include_timings: bool = True) -> dict:
    subfields = []
    for e in report.subfields:
        d = {}
        if e.delta is not None:
            d["delta"] = str(e.delta)
        else:
            d["minpoly"] = render_poly(e.minpoly)
        d["certificate"] = _cert_to_dict(e.certificate)
        d["status"] = e.status
        subfields.append(d)
    excluded = []
    for e in report.excluded:
        d = {}
        if e.delta is not None:
            d["delta"] = str(e.delta)
        elif e.minpoly is not None:
            d["minpoly"] = render_poly(e.minpoly)
        d["status"] = e.status
        if e.witness_prime is not None:
            d["witness_prime"] = str(e.witness_prime)
        excluded.append(d)
    stats = {"direct_tests": str(report.direct_tests), "seed": str(report.seed)}
    stats["phase_ms"] = ({k: str(v) for k, v in report.phase_ms.items()}
                         if include_timings else {})
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": report.kind,
        "input": {"poly": render_poly(report.poly), "degree": str(report.degree),
                  "scale": str(report.scale)},
        "candidate_primes": [str(p) for p in report.candidate_primes],
        "gcd_value": str(report.gcd_value),
        "sieve": {
            "primes_used": [str(p) for p in report.sieve.primes_used],
            "rows": str(report.sieve.rows),
            "solution_dim": str(report.sieve.solution_dim),
            "inconsistent": report.sieve.inconsistent,
        },
        "subfields": subfields,
        "excluded": excluded,
        "stats": stats,
    }


def report_from_dict(d: dict) -> ScanReport:
    subfields = []
    for e in d["subfields"]:
        h = _entry_h(e)
        entry = SubfieldEntry(
            certificate=_cert_from_dict(e["certificate"], h),
            delta=int(e["delta"]) if "delta" in e else None,
            minpoly=parse_poly(e["minpoly"]) if "minpoly" in e else None,
            status=e["status"],
        )
        subfields.append(entry)
    excluded = []
    for e in d["excluded"]:
        excluded.append(ExcludedEntry(
            status=e["status"],
            delta=int(e["delta"]) if "delta" in e else None,
            minpoly=parse_poly(e["minpoly"]) if "minpoly" in e else None,
            witness_prime=int(e["witness_prime"]) if "witness_prime" in e else None,
        ))
    sieve = SieveSummary(
        primes_used=[int(p) for p in d["sieve"]["primes_used"]],
        rows=int(d["sieve"]["rows"]),
        solution_dim=int(d["sieve"]["solution_dim"]),
        inconsistent=bool(d["sieve"]["inconsistent"]),
    )
    return ScanReport(
        kind=d["kind"],
        poly=parse_poly(d["input"]["poly"]),
        scale=int(d["input"]["scale"]),
        degree=int(d["input"]["degree"]),
        candidate_primes=[int(p) for p in d["candidate_primes"]],
        gcd_value=int(d["gcd_value"]),
        sieve=sieve,
        subfields=subfields,
        excluded=excluded,
        phase_ms={k: int(v) for k, v in d["stats"].get("phase_ms", {}).items()},
        direct_tests=int(d["stats"]["direct_tests"]),
        seed=int(d["stats"]["seed"]),
    )


def report_json(report: ScanReport, include_timings: bool = True) -> str:
    return json.dumps(report_to_dict(report, include_timings), indent=2) + "\n"


def canonical_report_bytes(report: ScanReport) -> bytes:
    """Serialization with wall-clock noise removed; byte-identical for
    identical (input, config, seed)."""
    return json.dumps(report_to_dict(report, include_timings=False),
                      sort_keys=True, separators=(",", ":")).encode()


# -- subcommands ------------------------------------------------------------------


def _config_from_args(args) -> ScanConfig:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("SUBFIELD_SCAN_SEED", "0"))
    return ScanConfig(
        seed=seed,
        sieve_prime_bound=args.sieve_bound,
        sieve_max_rows=args.sieve_count,
        combo_limit=args.combo_limit,
        strategy=args.strategy,
        max_precision=args.max_precision,
        threads=args.threads,
    )


def _add_scan_args(sp):
    sp.add_argument("-i", "--input", required=True, help="polynomial file")
    sp.add_argument("--json", help="write the JSON report here")
    sp.add_argument("--sieve-bound", type=int, default=10_000)
    sp.add_argument("--sieve-count", type=int, default=40)
    sp.add_argument("--combo-limit", type=int, default=1024)
    sp.add_argument("--max-precision", type=int, default=None)
    sp.add_argument("--strategy", choices=["auto", "combinatorial", "lattice"],
                    default="auto")
    sp.add_argument("--seed", type=int, default=None,
                    help="default 0, or SUBFIELD_SCAN_SEED if set")
    sp.add_argument("--threads", type=int, default=1)


def _run_scan(args, kind: str) -> int:
    try:
        f_raw = read_poly_file(args.input)
    except (OSError, PolyParseError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    config = _config_from_args(args)
    try:
        scan_fn = quad_subfield_scan if kind == "quad" else cubic_subfield_scan
        report = scan_fn(f_raw, config)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, SubfieldScanError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    text = report_json(report)
    if args.json:
        Path(args.json).write_text(text)
    _print_summary(report)
    return EXIT_UNPROVEN if report.has_unproven() else EXIT_OK


def _print_summary(report: ScanReport):
    name = "quadratic" if report.kind == "quad" else "cyclic cubic"
    print(f"{name} subfields of degree-{report.degree} field "
          f"(scale {report.scale}, candidate primes {report.candidate_primes}, "
          f"gcd {report.gcd_value})")
    print(f"sieve: {report.sieve.rows} rows from primes up to "
          f"{report.sieve.primes_used[-1] if report.sieve.primes_used else '-'}; "
          f"solution dimension {report.sieve.solution_dim}"
          + ("; inconsistent (no subfield exists)" if report.sieve.inconsistent else ""))
    for e in report.subfields:
        label = f"delta = {e.delta}" if e.delta is not None else render_poly(e.minpoly)
        print(f"  subfield: {label}  [{e.status}]")
    for e in report.excluded:
        label = f"delta = {e.delta}" if e.delta is not None else (
            render_poly(e.minpoly) if e.minpoly is not None else "?")
        extra = f" (witness prime {e.witness_prime})" if e.witness_prime else ""
        print(f"  excluded: {label}  [{e.status}]{extra}")
    print(f"found {len(report.subfields)}, excluded {len(report.excluded)}, "
          f"direct root tests {report.direct_tests}, "
          f"total {report.phase_ms.get('total', 0)} ms")


def _cmd_certify(args) -> int:
    try:
        f_raw = read_poly_file(args.input)
        data = json.loads(Path(args.cert).read_text())
    except (OSError, PolyParseError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if isinstance(data, dict) and "subfields" in data:
        entries = data["subfields"]
    elif isinstance(data, list):
        entries = data
    else:
        entries = [data]
    from .poly import normalize_input

    f, _ = normalize_input(f_raw)
    field = NumberField(f)
    bad = 0
    for i, e in enumerate(entries):
        try:
            h = _entry_h(e)
            cert = _cert_from_dict(e["certificate"], h)
            ok = verify_certificate(field, h, cert)
        except (KeyError, ValueError, PolyParseError):
            ok = False
        label = e.get("delta") or e.get("minpoly") or f"entry {i}"
        print(f"  certificate for {label}: {'VALID' if ok else 'INVALID'}")
        bad += 0 if ok else 1
    if bad:
        print(f"{bad} invalid certificate(s)", file=sys.stderr)
        return 1
    print(f"all {len(entries)} certificate(s) valid")
    return EXIT_OK


def _cmd_corpus(args) -> int:
    try:
        entry = testkit.corpus_generate(args.kind, args.params)
    except (ValueError, SubfieldScanError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    poly_text = render_poly(entry.poly)
    sidecar = {
        "poly": poly_text,
        "quad": [str(d) for d in entry.quad],
        "cubic": [render_poly(m) for m in entry.cubic],
        "recipe": entry.recipe,
    }
    if args.output:
        Path(args.output).write_text(poly_text + "\n")
        Path(args.output + ".truth.json").write_text(json.dumps(sidecar, indent=2) + "\n")
        print(f"wrote {args.output} and {args.output}.truth.json")
    else:
        print(poly_text)
        print(json.dumps(sidecar, indent=2))
    return EXIT_OK


def _cmd_bench(args) -> int:
    directory = Path(args.dir)
    if not directory.is_dir():
        print(f"input error: {args.dir} is not a directory", file=sys.stderr)
        return EXIT_INPUT_ERROR
    config = ScanConfig(seed=args.seed if args.seed is not None else 0)
    results = []
    for path in sorted(directory.glob("*.txt")):
        try:
            f_raw = read_poly_file(str(path))
        except (OSError, PolyParseError) as exc:
            results.append({"file": path.name, "error": str(exc)})
            continue
        item = {"file": path.name, "degree": str(f_raw.degree)}
        t0 = time.perf_counter()
        if f_raw.degree % 2 == 0:
            rep = quad_subfield_scan(f_raw, config)
            item["quad_ms"] = str(int(1000 * (time.perf_counter() - t0)))
            item["quad_found"] = str(len(rep.subfields))
        t0 = time.perf_counter()
        if f_raw.degree % 3 == 0:
            rep = cubic_subfield_scan(f_raw, config)
            item["cubic_ms"] = str(int(1000 * (time.perf_counter() - t0)))
            item["cubic_found"] = str(len(rep.subfields))
        results.append(item)
        print(f"  {path.name}: " + ", ".join(f"{k}={v}" for k, v in item.items() if k != "file"))
    payload = json.dumps({"results": results}, indent=2) + "\n"
    if args.json:
        Path(args.json).write_text(payload)
    return EXIT_OK


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="subfieldscan",
        description="Quadratic and cyclic cubic subfields of number fields, "
                    "with verifiable certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("quad", help="find all quadratic subfields")
    _add_scan_args(sp)
    sp = sub.add_parser("cubic", help="find all cyclic cubic subfields")
    _add_scan_args(sp)

    sp = sub.add_parser("certify", help="re-verify certificates from a report")
    sp.add_argument("-i", "--input", required=True, help="polynomial file")
    sp.add_argument("--cert", required=True, help="report or certificate JSON")

    sp = sub.add_parser("corpus", help="emit a test polynomial with ground truth")
    sp.add_argument("--kind", required=True,
                    choices=["multiquadratic", "cyclotomic", "cubic-compositum"])
    sp.add_argument("--params", required=True,
                    help="multiquadratic: prime list '2,3,5'; cyclotomic: m; "
                         "cubic-compositum: conductor list like '7,9' or '7,q5'")
    sp.add_argument("-o", "--output", help="polynomial file to write")

    sp = sub.add_parser("bench", help="scan every *.txt polynomial in a directory")
    sp.add_argument("--dir", required=True)
    sp.add_argument("--json", help="write timing JSON here")
    sp.add_argument("--seed", type=int, default=None)

    args = parser.parse_args(argv)
    if args.command == "quad":
        return _run_scan(args, "quad")
    if args.command == "cubic":
        return _run_scan(args, "cubic")
    if args.command == "certify":
        return _cmd_certify(args)
    if args.command == "corpus":
        return _cmd_corpus(args)
    if args.command == "bench":
        return _cmd_bench(args)
    parser.error("unknown command")


if __name__ == "__main__":
    sys.exit(main())
