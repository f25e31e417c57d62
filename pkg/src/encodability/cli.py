"""Command-line surface: rank, canon, compare, derive, retract, iso, verify.

Exit codes: 0 success, 1 usage or parse error (diagnostic with offset on
stderr), 2 domain refusal (for instance a retraction request whose source
outranks its target), 3 verification failure.  ``--json`` switches every
command to a single JSON object on stdout with a fixed key set.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .canonical import canonicalize, compare_types, rank
from .coercions import iso_witness
from .derivations import LeDerivation, derive_le
from .ordinals import Ordering, parse_ordinal, print_ordinal
from .synthesis import NotEncodable, Retraction, synth_retraction
from .terms import TypeCheckError, parse_term, print_term, typecheck
from .typesyntax import Arrow, ParseError, parse_type, print_type
from .verify import VerifyReport, verify_semantic, verify_symbolic

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUSED = 2
EXIT_VERIFY = 3


class _UsageError(Exception):
    pass


class _Refusal(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 instead of argparse's default 2
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="encodability",
        description=(
            "Decide whether one simple type over N encodes into another, "
            "and synthesize verified encoder/decoder terms."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str, *positional: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        for arg in positional:
            p.add_argument(arg)
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        return p

    add("rank", "ordinal rank of a type", "type")
    canon = add("canon", "canonical form of a type", "type")
    canon.add_argument(
        "--witness", action="store_true", help="also print the coercion terms"
    )
    add("compare", "order two types by rank", "type_a", "type_b")
    add("derive", "derivation tree for an ordinal pair", "ordinal_a", "ordinal_b")
    retract = add("retract", "synthesize an encoder/decoder pair", "source", "target")
    retract.add_argument(
        "--no-verify", action="store_true", help="skip the round-trip check"
    )
    retract.add_argument("--samples", type=int, default=0, metavar="N",
                         help="additionally run N semantic samples")
    retract.add_argument("--seed", type=int, default=0, metavar="S")
    iso = add("iso", "coercions between trivially isomorphic types", "type_a", "type_b")
    verify = add(
        "verify",
        "check an external encoder/decoder pair read from files",
        "source",
        "target",
        "enc_file",
        "dec_file",
    )
    verify.add_argument("--samples", type=int, default=100, metavar="N")
    verify.add_argument("--seed", type=int, default=0, metavar="S")
    return parser


def _payload(command: str, inputs: list[str]) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "rank_source": None,
        "rank_target": None,
        "relation": None,
        "derivation": None,
        "encoder": None,
        "decoder": None,
        "verified": None,
        "report": None,
    }


def _derivation_dict(d: LeDerivation) -> dict:
    return {
        "clause": d.clause_name,
        "lhs": print_ordinal(d.lhs),
        "rhs": print_ordinal(d.rhs),
        "children": [_derivation_dict(c) for c in d.children()],
    }


def _derivation_lines(d: LeDerivation, indent: int = 0) -> list[str]:
    line = f"{'  ' * indent}{d.clause_name}: {print_ordinal(d.lhs)} <= {print_ordinal(d.rhs)}"
    lines = [line]
    for child in d.children():
        lines.extend(_derivation_lines(child, indent + 1))
    return lines


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _cmd_rank(args, payload, lines) -> int:
    t = parse_type(args.type)
    payload["rank_source"] = print_ordinal(rank(t))
    lines.append(payload["rank_source"])
    return EXIT_OK


def _cmd_canon(args, payload, lines) -> int:
    t = parse_type(args.type)
    canonical = canonicalize(t)
    payload["canonical"] = print_type(canonical)
    payload["rank_source"] = print_ordinal(rank(t))
    lines.append(print_type(canonical))
    if args.witness:
        witness = iso_witness(t, canonical)
        payload["encoder"] = print_term(witness.fwd)
        payload["decoder"] = print_term(witness.bwd)
        lines.append(f"to_canonical: {print_term(witness.fwd)}")
        lines.append(f"from_canonical: {print_term(witness.bwd)}")
    return EXIT_OK


def _cmd_compare(args, payload, lines) -> int:
    a = parse_type(args.type_a)
    b = parse_type(args.type_b)
    relation = compare_types(a, b)
    payload["rank_source"] = print_ordinal(rank(a))
    payload["rank_target"] = print_ordinal(rank(b))
    payload["relation"] = relation.value
    lines.append(f"A {relation.value} B")
    return EXIT_OK


def _cmd_derive(args, payload, lines) -> int:
    a = parse_ordinal(args.ordinal_a)
    b = parse_ordinal(args.ordinal_b)
    try:
        derivation = derive_le(a, b)
    except ValueError as exc:
        raise _Refusal(str(exc)) from None
    payload["rank_source"] = print_ordinal(a)
    payload["rank_target"] = print_ordinal(b)
    payload["derivation"] = _derivation_dict(derivation)
    lines.extend(_derivation_lines(derivation))
    return EXIT_OK


def _retraction_fields(payload, r: Retraction) -> None:
    payload["rank_source"] = print_ordinal(rank(r.source))
    payload["rank_target"] = print_ordinal(rank(r.target))
    payload["relation"] = compare_types(r.source, r.target).value
    payload["encoder"] = print_term(r.enc)
    payload["decoder"] = print_term(r.dec)


def _cmd_retract(args, payload, lines) -> int:
    source = parse_type(args.source)
    target = parse_type(args.target)
    try:
        r = synth_retraction(source, target, verify=False)
    except NotEncodable as exc:
        raise _Refusal(str(exc)) from None
    _retraction_fields(payload, r)
    lines.append(f"encoder: {print_term(r.enc)}")
    lines.append(f"decoder: {print_term(r.dec)}")
    code = EXIT_OK
    if not args.no_verify:
        if args.samples > 0:
            report = verify_semantic(r, args.samples, args.seed)
            payload["report"] = report.as_dict()
            verified = report.ok
        else:
            verified = verify_symbolic(r)
        payload["verified"] = verified
        lines.append(f"verified: {_bool(verified)}")
        if not verified:
            code = EXIT_VERIFY
    return code


def _cmd_iso(args, payload, lines) -> int:
    a = parse_type(args.type_a)
    b = parse_type(args.type_b)
    try:
        witness = iso_witness(a, b)
    except ValueError as exc:
        raise _Refusal(str(exc)) from None
    payload["rank_source"] = print_ordinal(rank(a))
    payload["rank_target"] = print_ordinal(rank(b))
    payload["relation"] = Ordering.EQUAL.value
    payload["encoder"] = print_term(witness.fwd)
    payload["decoder"] = print_term(witness.bwd)
    lines.append(f"fwd: {print_term(witness.fwd)}")
    lines.append(f"bwd: {print_term(witness.bwd)}")
    fwd_ok = verify_symbolic(
        Retraction(a, b, witness.fwd, witness.bwd, provenance=None)
    )
    bwd_ok = verify_symbolic(
        Retraction(b, a, witness.bwd, witness.fwd, provenance=None)
    )
    payload["verified"] = fwd_ok and bwd_ok
    lines.append(f"verified: {_bool(fwd_ok and bwd_ok)}")
    return EXIT_OK if fwd_ok and bwd_ok else EXIT_VERIFY


def _read_term_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from None
    return parse_term(text.strip())


def _cmd_verify(args, payload, lines) -> int:
    source = parse_type(args.source)
    target = parse_type(args.target)
    enc = _read_term_file(args.enc_file)
    dec = _read_term_file(args.dec_file)
    enc_ty = typecheck([], enc)
    dec_ty = typecheck([], dec)
    expected_enc = Arrow(source, target)
    expected_dec = Arrow(target, source)
    if enc_ty != expected_enc or dec_ty != expected_dec:
        lines.append("verified: false")
        payload["verified"] = False
        detail = (
            f"encoder has type {print_type(enc_ty)}, expected {print_type(expected_enc)}"
            if enc_ty != expected_enc
            else f"decoder has type {print_type(dec_ty)}, expected {print_type(expected_dec)}"
        )
        lines.append(f"type error: {detail}")
        payload["report"] = {"type_error": detail}
        return EXIT_VERIFY
    r = Retraction(source, target, enc, dec, provenance=None)
    report = verify_semantic(r, args.samples, args.seed)
    payload["report"] = report.as_dict()
    payload["verified"] = report.ok
    lines.append(f"symbolic: {_bool(report.symbolic_ok)}")
    lines.append(
        f"semantic: {report.semantic_samples} samples, "
        f"{len(report.semantic_failures)} failures"
    )
    for failure in report.semantic_failures[:3]:
        lines.append(
            f"  mismatch: inhabitant {print_term(failure.inhabitant)} "
            f"expected {failure.expected}, got {failure.got}"
        )
    lines.append(f"verified: {_bool(report.ok)}")
    return EXIT_OK if report.ok else EXIT_VERIFY


_COMMANDS = {
    "rank": _cmd_rank,
    "canon": _cmd_canon,
    "compare": _cmd_compare,
    "derive": _cmd_derive,
    "retract": _cmd_retract,
    "iso": _cmd_iso,
    "verify": _cmd_verify,
}


def main(
    argv: Sequence[str] | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    inputs = [
        getattr(args, name)
        for name in (
            "type", "type_a", "type_b", "ordinal_a", "ordinal_b",
            "source", "target", "enc_file", "dec_file",
        )
        if hasattr(args, name)
    ]
    payload = _payload(args.command, inputs)
    lines: list[str] = []
    try:
        code = _COMMANDS[args.command](args, payload, lines)
    except ParseError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except _UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except TypeCheckError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_VERIFY
    except _Refusal as exc:
        print(f"refused: {exc}", file=err)
        return EXIT_REFUSED

    if args.json:
        print(json.dumps(payload, indent=2), file=out)
    else:
        for line in lines:
            print(line, file=out)
    return code


if __name__ == "__main__":
    sys.exit(main())
