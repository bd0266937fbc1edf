"""Command-line front end.

Exit codes: 0 pass, 1 a check failed, 2 invalid input, 3 enumeration budget refused.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from gonalkit import __version__
from gonalkit.action import gonal_census, paper_epimorphism, verify_theorem
from gonalkit.errors import BudgetExceeded, InvalidParameterError
from gonalkit.group_engine import build_dihedral_product, format_element
from gonalkit.search import DEFAULT_MAX_SPACE, SearchBudget, enumerate_generating_vectors
from gonalkit.signature_rh import family_signature, theorem_params

SCHEMA_VERSION = 1
EXIT_PASS, EXIT_FAIL, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3
MAX_SPACE_ENV = "GONALKIT_MAX_SPACE"


def envelope(command: str, parameters: dict, status: str, result=None, error=None) -> dict:
    env = {
        "schema_version": SCHEMA_VERSION,
        "tool": "gonalkit",
        "version": __version__,
        "command": command,
        "parameters": parameters,
        "status": status,
        "result": result,
    }
    if error is not None:
        env["error"] = error
    return env


def dumps(env: dict) -> str:
    return json.dumps(env, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def default_max_space() -> int:
    raw = os.environ.get(MAX_SPACE_ENV)
    if raw is None:
        return DEFAULT_MAX_SPACE
    try:
        return int(float(raw))
    except ValueError:
        raise InvalidParameterError(f"{MAX_SPACE_ENV} must be an integer, got {raw!r}") from None


# text renderers -------------------------------------------------------------


def _text_params(res: dict) -> list[str]:
    return [
        f"p = {res['p']}, n = {res['n']}",
        f"d = {res['d']}",
        f"g = {res['g']}",
        f"signature = {res['signature']}",
    ]


def _text_census(res: dict) -> list[str]:
    lines = [f"order-{res['p']} subgroups and quotient genera (target n = {res['n']}):"]
    width = max(len(row["label"]) for row in res["subgroups"]) if res["subgroups"] else 0
    gonal = {row["label"] for row in res["gonal_groups"]}
    for row in res["subgroups"]:
        mark = "  *gonal*" if row["label"] in gonal else ""
        lines.append(f"  {row['label']:<{width}}  genus {row['quotient_genus']}{mark}")
    lines.append(f"gonal groups: {len(res['gonal_groups'])}")
    for i, cls in enumerate(res["conjugacy_classes"], 1):
        members = ", ".join(f"{m['subgroup']} (witness {m['witness']})" for m in cls["members"])
        lines.append(f"  class {i}: {members}")
    lines.append(f"note: {res['limitation']}")
    return lines


def _text_verify(res: dict) -> list[str]:
    lines = _text_params(res["params"])
    lines.append("vector = (" + ", ".join(res["vector"]) + ")")
    lines.append(f"computed genus = {res['computed_genus']}")
    lines.append(f"teichmuller dimension = {res['dimension']}")
    for name, ok in res["checks"].items():
        lines.append(f"[{'PASS' if ok else 'FAIL'}] {name}")
    for failure in res["validation"]["failures"]:
        lines.append(f"  {failure}")
    groups = ", ".join(row["label"] for row in res["census"]["gonal_groups"])
    lines.append(f"gonal groups: {groups}")
    lines.append(f"conjugate = {str(res['conjugate']).lower()}")
    lines.append("automorphism group order claim: " + res["automorphism_group_order_claim"])
    lines.append("overall: " + ("PASS" if res["passed"] else "FAIL"))
    return lines


def _text_enumerate(res: dict) -> list[str]:
    lines = [
        f"signature = {res['signature']}",
        f"search space = {res['search_space_size']}",
        f"count = {res['total_count']}",
    ]
    if res["classes_up_to_conjugation"] is not None:
        lines.append(f"classes up to conjugation = {res['classes_up_to_conjugation']}")
    for words in res["sample"]:
        lines.append("sample: (" + ", ".join(words) + ")")
    return lines


# commands -------------------------------------------------------------------


def cmd_params(p: int, n: int) -> tuple[dict, int]:
    params = theorem_params(p, n)
    return envelope("params", {"p": p, "n": n}, "pass", params.to_dict()), EXIT_PASS


def cmd_verify(p: int, n: int) -> tuple[dict, int]:
    report = verify_theorem(p, n)
    status = "pass" if report.passed else "fail"
    code = EXIT_PASS if report.passed else EXIT_FAIL
    return envelope("verify", {"p": p, "n": n}, status, report.to_dict()), code


def cmd_census(p: int, n: int) -> tuple[dict, int]:
    gv = paper_epimorphism(theorem_params(p, n))
    census = gonal_census(gv, p, n)
    return envelope("census", {"p": p, "n": n}, "pass", census.to_dict()), EXIT_PASS


def cmd_enumerate(
    p: int,
    d: int,
    max_space: Optional[int] = None,
    sample: int = 0,
    time_limit: Optional[float] = None,
    workers: int = 1,
    classes: bool = False,
) -> tuple[dict, int]:
    if d < 1:
        raise InvalidParameterError(f"d must be >= 1, got {d}")
    G = build_dihedral_product(p)
    sig = family_signature(p, d)
    budget = SearchBudget(max_space if max_space is not None else default_max_space(), time_limit)
    result = enumerate_generating_vectors(G, sig, budget, sample=sample, workers=workers, collect=classes)
    payload = {"signature": str(sig), **result.to_dict()}
    params = {"p": p, "d": d, "max_space": budget.max_space, "sample": sample}
    return envelope("enumerate", params, "pass", payload), EXIT_PASS


RENDERERS = {
    "params": _text_params,
    "verify": _text_verify,
    "census": _text_census,
    "enumerate": _text_enumerate,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="no stdout")
    common.add_argument("--out", default=argparse.SUPPRESS, help="also write the output to this file")

    parser = argparse.ArgumentParser(prog="gonalkit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"gonalkit {__version__}")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--quiet", action="store_true", help="no stdout")
    parser.add_argument("--out", default=None, help="also write the output to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("params", "derive d, g and the signature from (p, n)"),
        ("verify", "check every claim of the construction for (p, n)"),
        ("census", "quotient genus of every order-p subgroup"),
    ):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("enumerate", parents=[common], help="count all generating vectors")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--max-space", type=int, default=None,
                    help=f"search-space cap (default ${MAX_SPACE_ENV} or {DEFAULT_MAX_SPACE})")
    sp.add_argument("--time-limit", type=float, default=None, help="wall-clock cap in seconds")
    sp.add_argument("--sample", type=int, default=0, help="number of solutions to print")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--classes", action="store_true", help="also count classes up to conjugation")
    return parser


def _run(args) -> tuple[dict, int]:
    if args.command == "enumerate":
        return cmd_enumerate(
            args.p, args.d, args.max_space, args.sample, args.time_limit, args.workers, args.classes
        )
    return {"params": cmd_params, "verify": cmd_verify, "census": cmd_census}[args.command](args.p, args.n)


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    parameters = {k: v for k, v in vars(args).items() if k not in ("command", "json", "quiet", "out")}
    try:
        env, code = _run(args)
    except InvalidParameterError as exc:
        env, code = envelope(args.command, parameters, "error", error=str(exc)), EXIT_INVALID
    except BudgetExceeded as exc:
        env = envelope(
            args.command, parameters, "refused",
            {"search_space_size": exc.space_size, "max_space": exc.limit}, error=str(exc),
        )
        code = EXIT_BUDGET

    if args.json:
        text = dumps(env)
    elif env["status"] in ("error", "refused"):
        text = f"error: {env['error']}\n"
    else:
        text = "\n".join(RENDERERS[args.command](env["result"])) + "\n"

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    if not args.quiet:
        stream = sys.stderr if (code >= EXIT_INVALID and not args.json) else sys.stdout
        stream.write(text)
    return code
