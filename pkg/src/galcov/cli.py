"""Command-line interface: one subcommand per computation, deterministic
table or JSON reports, stable exit codes per error family."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import enumeration
from .config import (
    ParsedInput,
    character_to_json,
    class_key_to_json,
    label_to_json,
    parse_config,
)
from .cover import CoverSpec
from .differentials import (
    IrrepClassData,
    cw_multiplicity,
    delta_info,
    dim_omega_chi,
    eichler_trace,
    omega_divisor,
    total_dim_omega,
)
from .divisors import h_chi_divisor
from .errors import ConfigError, GalcovError, NotAbelian
from .jacobian import decompose

EXIT_CODES = {
    "error": 1,
    "config": 2,
    "non-integral-invariant": 3,
    "degenerate-cover": 4,
    "branched-at-infinity": 5,
    "unsupported-base-genus": 6,
    "not-abelian": 7,
    "search-space-too-large": 8,
    "admissibility": 9,
    "n-table-mismatch": 10,
    "non-integral-dimension": 11,
    "identity-element": 12,
    "non-invariant-input": 13,
    "internal-inconsistency": 14,
}

COMMANDS = (
    "validate",
    "genus",
    "tchi",
    "hchi",
    "dims",
    "nonspecial",
    "degree-gm1",
    "omega",
    "traces",
    "chevalley-weil",
    "jacobian",
    "all",
)


def _checked_cover(parsed: ParsedInput) -> CoverSpec:
    parsed.cover.validate().raise_for_status()
    return parsed.cover


def _parse_character(cover: CoverSpec, text: str):
    if cover.is_abelian:
        try:
            return cover.group.character([int(k) for k in text.split(",")])
        except ValueError as exc:
            raise ConfigError(str(exc), "--char") from None
    for chi in cover.characters():
        if chi.name == text:
            return chi
    raise ConfigError(f"unknown character {text!r}", "--char")


def _characters(cover: CoverSpec, char_flag: str | None):
    if char_flag is None:
        return cover.characters()
    return (_parse_character(cover, char_flag),)


def _divisor_record(div) -> dict:
    return {
        "buckets": list(div.buckets),
        "p": div.p,
        "exponents": [
            {"label": label_to_json(div.cover.branch_points[j].label), "exp": div.exponent(j)}
            for j in range(len(div.buckets))
        ],
        "degree": div.degree(),
    }


def cmd_validate(parsed: ParsedInput, args) -> dict:
    report = parsed.cover.validate()
    issues = [
        {"kind": issue.kind, "character": character_to_json(issue.character), "detail": issue.detail}
        for issue in report.issues
    ]
    degenerate_tuple = None
    if parsed.equations is not None:
        from .equations import check_nondegeneracy

        failing = check_nondegeneracy(parsed.equations)
        if failing is not None:
            degenerate_tuple = list(failing)
    out = {"command": "validate", "valid": report.ok and degenerate_tuple is None, "issues": issues}
    if degenerate_tuple is not None:
        out["degenerate_monomial"] = degenerate_tuple
    return out


def cmd_genus(parsed: ParsedInput, args) -> dict:
    return {"command": "genus", "genus": _checked_cover(parsed).genus()}


def cmd_tchi(parsed: ParsedInput, args) -> dict:
    cover = _checked_cover(parsed)
    classes = [
        {"psi": class_key_to_json(cls.key), "order": cls.order, "count": cls.count}
        for cls in cover.branch_classes
    ]
    rows = [
        {
            "character": character_to_json(chi),
            "t": cover.t_chi(chi),
            "u": [cover.u_value(chi, cls.key) for cls in cover.branch_classes],
        }
        for chi in _characters(cover, args.char)
    ]
    return {"command": "tchi", "classes": classes, "characters": rows}


def cmd_hchi(parsed: ParsedInput, args) -> dict:
    cover = _checked_cover(parsed)
    rows = []
    for chi in _characters(cover, args.char):
        div = h_chi_divisor(cover, chi)
        rows.append(
            {
                "character": character_to_json(chi),
                "branch_exponents": list(div.branch_exponents),
                "infinity_exponent": div.infinity_exponent,
                "degree": div.degree(),
            }
        )
    return {"command": "hchi", "characters": rows}


def cmd_dims(parsed: ParsedInput, args) -> dict:
    cover = _checked_cover(parsed)
    info = delta_info(cover, args.q, args.gamma_degree)
    rows = [
        {
            "character": character_to_json(chi),
            "dim": dim_omega_chi(cover, chi, args.q, args.gamma_degree),
        }
        for chi in _characters(cover, args.char)
    ]
    out = {
        "command": "dims",
        "q": args.q,
        "gamma_degree": args.gamma_degree,
        "delta": info.delta,
        "characters": rows,
    }
    if info.delta:
        out["delta_character"] = character_to_json(info.character)
    if cover.is_abelian and args.char is None:
        out["total"] = total_dim_omega(cover, args.q, args.gamma_degree)
    return out


def _cmd_enumerate(parsed: ParsedInput, args, family: str) -> dict:
    cover = _checked_cover(parsed)
    count = enumeration.count_by_cardinality(cover, family)
    name = "nonspecial" if family == "integral" else "degree-gm1"
    out = {"command": name, "count": count}
    if not args.count_only:
        if count > args.cap:
            raise enumeration.SearchSpaceTooLarge(count, args.cap)
        items = (
            enumeration.enumerate_nonspecial_integral(cover)
            if family == "integral"
            else enumeration.enumerate_degree_gm1(cover)
        )
        out["divisors"] = [_divisor_record(d) for d in items]
    return out


def cmd_omega(parsed: ParsedInput, args) -> dict:
    cover = _checked_cover(parsed)
    rows = []
    for chi in _characters(cover, args.char):
        div = omega_divisor(cover, chi, args.q)
        rows.append(
            {
                "character": character_to_json(chi),
                "branch_exponents": list(div.branch_exponents),
                "infinity_exponent": div.infinity_exponent,
                "degree": div.degree(),
                "presentation": div.presentation(),
            }
        )
    return {"command": "omega", "q": args.q, "characters": rows}


def cmd_traces(parsed: ParsedInput, args) -> dict:
    cover = _checked_cover(parsed)
    if not cover.is_abelian:
        raise NotAbelian("traces need an abelian deck group on the command line")
    group = cover.group
    if args.tau is not None:
        try:
            taus = [group.element([int(a) for a in args.tau.split(",")])]
        except ValueError as exc:
            raise ConfigError(str(exc), "--tau") from None
    else:
        taus = [x for x in group.elements() if group.element_order(x) > 1]
    rows = []
    for tau in taus:
        trace = eichler_trace(cover, tau, args.q, args.gamma_degree)
        rows.append(
            {
                "tau": list(tau.exponents),
                "value": [trace.value.real, trace.value.imag],
                "delta": trace.delta,
                "terms": [
                    {"order": t.order, "exponent": t.exponent, "multiplicity": t.multiplicity}
                    for t in trace.terms
                ],
            }
        )
    return {"command": "traces", "q": args.q, "gamma_degree": args.gamma_degree, "traces": rows}


def _load_irreps(cover: CoverSpec, path: str) -> list[tuple[str, IrrepClassData]]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            document = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read irrep table: {exc}", path)
    if not isinstance(document, dict) or not isinstance(document.get("irreps"), list):
        raise ConfigError("irrep table must be {'irreps': [...]}", path)
    by_key = {}
    for cls in cover.branch_classes:
        by_key[json.dumps(class_key_to_json(cls.key))] = cls.key
    out = []
    for k, rec in enumerate(document["irreps"]):
        where = f"{path}:irreps[{k}]"
        if not isinstance(rec, dict):
            raise ConfigError("irrep records are objects", where)
        name = rec.get("name", f"rho{k}")
        dim = rec.get("dim")
        rows = rec.get("classes")
        if not isinstance(dim, int) or not isinstance(rows, dict):
            raise ConfigError("irrep records need 'dim' and 'classes'", where)
        table = []
        for raw_key, row in sorted(rows.items()):
            try:
                key = by_key[json.dumps(json.loads(raw_key))] if raw_key.startswith("[") else raw_key
            except (json.JSONDecodeError, KeyError):
                raise ConfigError(f"unknown class {raw_key!r}", where)
            if not isinstance(row, list) or not all(isinstance(v, int) for v in row):
                raise ConfigError(f"multiplicity row for {raw_key!r} must be a list", where)
            table.append((key, tuple(row)))
        out.append((str(name), IrrepClassData(dim, tuple(table))))
    return out


def cmd_chevalley_weil(parsed: ParsedInput, args) -> dict:
    cover = _checked_cover(parsed)
    rows = []
    if args.irrep_file:
        for name, rho in _load_irreps(cover, args.irrep_file):
            rows.append(
                {
                    "irrep": name,
                    "dim": rho.dim,
                    "multiplicity": cw_multiplicity(cover, rho, args.q, args.gamma_degree),
                }
            )
    else:
        for chi in _characters(cover, args.char):
            rows.append(
                {
                    "irrep": character_to_json(chi),
                    "dim": 1,
                    "multiplicity": cw_multiplicity(cover, chi, args.q, args.gamma_degree),
                }
            )
    out = {
        "command": "chevalley-weil",
        "q": args.q,
        "gamma_degree": args.gamma_degree,
        "multiplicities": rows,
    }
    if cover.is_abelian and args.char is None and not args.irrep_file:
        out["total"] = total_dim_omega(cover, args.q, args.gamma_degree)
    return out


def cmd_jacobian(parsed: ParsedInput, args) -> dict:
    cover = _checked_cover(parsed)
    report = decompose(cover)
    return {
        "command": "jacobian",
        "genus": report.genus,
        "analytic": [
            {"character": character_to_json(chi), "multiplicity": m} for chi, m in report.analytic
        ],
        "rational": [
            {"character": character_to_json(chi), "multiplicity": m} for chi, m in report.rational
        ],
        "orbits": [
            {
                "representative": character_to_json(s.orbit.representative),
                "size": len(s.orbit.characters),
                "order": s.orbit.order,
                "field_degree": s.orbit.field_degree,
                "dim_A": s.dim_A,
                "dim_B": s.dim_B,
            }
            for s in report.orbits
        ],
        "quotients": [
            {
                "representative": character_to_json(p.orbit.representative),
                "order": p.quotient_order,
                "quotient_genus": p.quotient_genus,
                "dim": p.dim,
                "dim_from_quotient": p.dim_from_quotient,
                "nontrivial": p.nontrivial,
            }
            for p in report.quotients
        ],
    }


def cmd_all(parsed: ParsedInput, args) -> dict:
    cover = parsed.cover
    out: dict[str, Any] = {"command": "all", "validate": cmd_validate(parsed, args)}
    if not out["validate"]["valid"]:
        return out
    out["genus"] = cover.genus()
    out["tchi"] = cmd_tchi(parsed, args)["characters"]
    out["dims"] = cmd_dims(parsed, args)
    if cover.is_abelian and cover.base_genus == 0:
        out["counts"] = {
            "nonspecial": enumeration.count_by_cardinality(cover, "integral"),
            "degree_gm1": enumeration.count_by_cardinality(cover, "gm1"),
        }
    if cover.is_abelian:
        out["jacobian"] = cmd_jacobian(parsed, args)
    return out


HANDLERS = {
    "validate": cmd_validate,
    "genus": cmd_genus,
    "tchi": cmd_tchi,
    "hchi": cmd_hchi,
    "dims": cmd_dims,
    "nonspecial": lambda parsed, args: _cmd_enumerate(parsed, args, "integral"),
    "degree-gm1": lambda parsed, args: _cmd_enumerate(parsed, args, "gm1"),
    "omega": cmd_omega,
    "traces": cmd_traces,
    "chevalley-weil": cmd_chevalley_weil,
    "jacobian": cmd_jacobian,
    "all": cmd_all,
}


def run_command(name: str, parsed: ParsedInput, args) -> dict:
    return HANDLERS[name](parsed, args)


# -- formatting ----------------------------------------------------------------


def _format_table(value, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for key in value:
            item = value[key]
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.extend(_format_table(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {item}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_format_table(item, indent + 1))
            else:
                lines.append(f"{pad}- {item}")
    else:
        lines.append(f"{pad}{value}")
    return lines


def format_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2)
    return "\n".join(_format_table(report))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galcov",
        description="Exact invariants of Galois covers of Riemann surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("config", help="path to a JSON configuration document, or - for stdin")
        cmd.add_argument("--format", choices=("table", "json"), default="table")
        cmd.add_argument("--stream", action="store_true", help="emit NDJSON for enumerations")
        cmd.add_argument("--cap", type=int, default=100_000, help="bound on returned list sizes")
        cmd.add_argument("--q", type=int, default=1)
        cmd.add_argument("--gamma-degree", type=int, default=0, dest="gamma_degree")
        cmd.add_argument("--char", default=None, help="character: k1,k2,... or a name")
        cmd.add_argument("--tau", default=None, help="group element: a1,a2,...")
        cmd.add_argument("--irrep-file", default=None, dest="irrep_file")
        cmd.add_argument("--count-only", action="store_true", dest="count_only")
    return parser


def _stream_enumeration(parsed: ParsedInput, args, family: str, out) -> int:
    cover = _checked_cover(parsed)
    items = (
        enumeration.iter_nonspecial_integral(cover)
        if family == "integral"
        else enumeration.iter_degree_gm1(cover)
    )
    for div in items:
        print(json.dumps(_divisor_record(div), sort_keys=True), file=out)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.config == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.config, "r", encoding="utf-8") as handle:
                    text = handle.read()
            except OSError as exc:
                raise ConfigError(str(exc), args.config)
        parsed = parse_config(text)
        if args.stream and args.command in ("nonspecial", "degree-gm1"):
            family = "integral" if args.command == "nonspecial" else "gm1"
            return _stream_enumeration(parsed, args, family, sys.stdout)
        report = run_command(args.command, parsed, args)
    except GalcovError as exc:
        error = {"error": {"code": exc.code, "message": str(exc)}}
        print(format_report(error, args.format), file=sys.stderr)
        return EXIT_CODES.get(exc.code, 1)
    print(format_report(report, args.format))
    if args.command == "validate" and not report["valid"]:
        issues = report["issues"]
        if issues:
            kind = issues[0]["kind"]
            return EXIT_CODES["non-integral-invariant" if kind == "non-integral" else "degenerate-cover"]
        return EXIT_CODES["degenerate-cover"]
    return 0


if __name__ == "__main__":
    sys.exit(main())
