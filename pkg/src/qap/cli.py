"""Command-line surface: enumeration, verification, table emission,
classification, sequence connection, and the matrix-oracle self-test.

Exit codes: 0 pass, 1 invariant failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import extension, oracle, partition, transform
from .extension import count_kind, count_total, enumerate_all
from .partition import build_qap, cell_label, qap_to_json, render_table, verify_closure
from .subalgebra import CartanSubalgebra, parse_label

PASS, FAIL, USAGE = 0, 1, 2

GUARDS = {
    "count": 5,
    "enumerate": 5,
    "table": 6,
    "qap": 6,
    "coqa": 6,
    "lift": 6,
    "verify": 4,
    "oracle": 3,
    "classify": 4,
    "connect": 4,
}

# The bundled reference tables carry the source captions as aliases; the
# two k >= 2 captions list only the k self parities, which do not pin the
# mutual parities, so they cannot be parsed as canonical labels.
TABLE_ALIASES = {
    "C^{10}_{[001,100]}": "C^{110}_{[001,100]}",
    "C^{100}_{[001,010,100]}": "C^{101000}_{[001,010,100]}",
}


@dataclass
class RunConfig:
    p: int = 3
    fmt: str = "text"
    seed: int = 0
    out: Optional[str] = None
    n: int = 100


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _guard(command: str, p: int) -> None:
    if not 1 <= p <= GUARDS[command]:
        raise SystemExit2(f"{command} is guarded to 1 <= p <= {GUARDS[command]}")


class SystemExit2(Exception):
    """Usage error carrying its message to stderr."""


def _resolve_label(text: str) -> CartanSubalgebra:
    return parse_label(TABLE_ALIASES.get(text.replace(" ", ""), text))


# ---------------------------------------------------------------------------
# subcommands


def cmd_count(cfg: RunConfig) -> int:
    _guard("count", cfg.p)
    atlas = enumerate_all(cfg.p)  # raises if enumeration != closed form
    enumerated = [len(atlas.by_kind[k]) for k in range(cfg.p + 1)]
    closed = [count_kind(cfg.p, k) for k in range(cfg.p + 1)]
    if enumerated != closed or atlas.total != count_total(cfg.p):
        _emit(cfg, f"count mismatch: enumerated {enumerated}, closed form {closed}")
        return FAIL
    if cfg.fmt == "json":
        _emit(cfg, json.dumps({"p": cfg.p, "by_kind": enumerated, "total": atlas.total}))
    elif cfg.fmt == "csv":
        rows = ["kind,count"] + [f"{k},{n}" for k, n in enumerate(enumerated)]
        _emit(cfg, "\n".join(rows + [f"total,{atlas.total}"]))
    else:
        _emit(cfg, " ".join(str(n) for n in enumerated) + f" | total {atlas.total}")
    return PASS


def cmd_enumerate(cfg: RunConfig) -> int:
    _guard("enumerate", cfg.p)
    atlas = enumerate_all(cfg.p)
    _emit(cfg, extension.atlas_jsonl(atlas))
    return PASS


def cmd_table(cfg: RunConfig, label: str) -> int:
    c = _resolve_label(label)
    _guard("table", c.p)
    _emit(cfg, render_table(build_qap(c)))
    return PASS


def cmd_qap(cfg: RunConfig, label: str) -> int:
    c = _resolve_label(label)
    _guard("qap", c.p)
    q = build_qap(c)
    _emit(cfg, qap_to_json(q) if cfg.fmt == "json" else render_table(q))
    return PASS


def cmd_coqa(cfg: RunConfig, label: str, cell: str) -> int:
    c = _resolve_label(label)
    _guard("coqa", c.p)
    q = build_qap(c)
    try:
        b_part, e_part = cell.split("/")
        key = (int(b_part.split(":")[1]), int(e_part.split(":")[1]))
    except (ValueError, IndexError):
        raise SystemExit2(f"cannot parse cell {cell!r}; expected B:<i>/eps:<0|1>")
    view = partition.coquotient_view(q, key)
    lines = [f"center {cell_label(view.center)}"]
    lines.append(
        f"degrade: {{{cell_label(view.degrade[0])}, {cell_label(view.degrade[1])}}}"
    )
    lines.append(
        f"irregular: {{{cell_label(view.irregular[0])}, {cell_label(view.irregular[1])}}}"
    )
    for a, b in view.regular:
        lines.append(f"regular: {{{cell_label(a)}, {cell_label(b)}}}")
    _emit(cfg, "\n".join(lines))
    return PASS


def cmd_verify(cfg: RunConfig) -> int:
    _guard("verify", cfg.p)
    if cfg.p <= 3:
        members = list(enumerate_all(cfg.p).members())
    else:
        atlas = enumerate_all(cfg.p)
        pool = list(atlas.members())
        members = random.Random(cfg.seed).sample(pool, min(cfg.n, len(pool)))
    checked = 0
    for c in members:
        q = build_qap(c, verify=False)
        report = verify_closure(q)
        if not report.ok or not q.is_partition():
            _emit(cfg, f"closure FAILED for {c.label}: {report.failures[:1]}")
            return FAIL
        checked += report.checked_pairs
    _emit(
        cfg,
        f"verify pass: {len(members)} partitions at p={cfg.p}, "
        f"{checked} anti-commuting pairs checked",
    )
    return PASS


def cmd_oracle(cfg: RunConfig) -> int:
    _guard("oracle", cfg.p)
    report = oracle.run_oracle(cfg.p)
    _emit(cfg, str(report))
    return PASS if report.ok else FAIL


def cmd_classify(cfg: RunConfig) -> int:
    _guard("classify", cfg.p)
    atlas = enumerate_all(cfg.p)
    index = extension.classify_local(atlas)
    expected = 1 << (cfg.p * (cfg.p - 1) // 2)
    sizes = {mu: len(v) for mu, v in sorted(index.items())}
    ok = len(index) == expected and sum(sizes.values()) == atlas.total
    if cfg.fmt == "json":
        _emit(cfg, json.dumps({"classes": sizes, "expected": expected, "ok": ok}))
    else:
        lines = [f"{mu or '-'}: {n}" for mu, n in sizes.items()]
        lines.append(f"{len(index)} classes (expected {expected}), members {sum(sizes.values())}")
        _emit(cfg, "\n".join(lines))
    return PASS if ok else FAIL


def cmd_connect(cfg: RunConfig) -> int:
    _guard("connect", cfg.p)
    atlas = enumerate_all(cfg.p)
    members = list(atlas.members())
    rng = random.Random(cfg.seed)
    qap_cache: dict[CartanSubalgebra, partition.QAPartition] = {}
    done = 0
    for _ in range(cfg.n):
        c = rng.choice(members)
        if c not in qap_cache:
            qap_cache[c] = build_qap(c)
        seq = transform.random_sequence(qap_cache[c], rng)
        try:
            transform.connect(seq)  # asserts the full contract
        except AssertionError as exc:
            _emit(cfg, f"connector FAILED after {done} sequences: {exc}")
            return FAIL
        done += 1
    _emit(cfg, f"{done}/{cfg.n} sequences connected at p={cfg.p} (seed {cfg.seed})")
    return PASS


def cmd_lift(cfg: RunConfig, label: str) -> int:
    c = _resolve_label(label)
    _guard("lift", c.p)
    circuit, lifted = extension.local_lift(c)
    payload = {
        "source": c.label,
        "circuit": str(circuit),
        "factors": circuit.factor_strings(),
        "local": circuit.is_local,
        "lifted": lifted.label,
        "kind": lifted.kind,
    }
    if cfg.fmt == "json":
        _emit(cfg, json.dumps(payload))
    else:
        _emit(cfg, "\n".join(f"{k}: {v}" for k, v in payload.items()))
    return PASS


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qap",
        description="Exact quotient-algebra-partition toolkit for su(2^p).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, label_arg: bool = False) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        if label_arg:
            sp.add_argument("label", help="Cartan label, e.g. C^{110}_{[001,100]}")
        sp.add_argument("--p", type=int, default=3)
        sp.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", default=None)
        sp.add_argument("--n", type=int, default=100, help="trial count for randomized audits")
        return sp

    add("count", "Cartan subalgebra counts by kind, enumeration vs closed form")
    add("enumerate", "export the full atlas as JSON lines")
    add("table", "render the quotient-algebra table for a label", label_arg=True)
    add("qap", "dump the partition cells for a label", label_arg=True)
    coqa = add("coqa", "re-pair the partition around a conditioned subspace", label_arg=True)
    coqa.add_argument("--cell", required=True, help="center cell, e.g. B:1/eps:1")
    add("verify", "closure verification across partitions")
    add("oracle", "exact matrix-oracle self-test")
    add("classify", "local-equivalence classes of the atlas")
    add("connect", "randomized connector audits")
    add("lift", "local lift of a label to the top kind", label_arg=True)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses its own exit codes
        return USAGE if exc.code not in (0, None) else PASS
    cfg = RunConfig(p=args.p, fmt=args.fmt, seed=args.seed, out=args.out, n=args.n)
    handlers: dict[str, Callable[[], int]] = {
        "count": lambda: cmd_count(cfg),
        "enumerate": lambda: cmd_enumerate(cfg),
        "table": lambda: cmd_table(cfg, args.label),
        "qap": lambda: cmd_qap(cfg, args.label),
        "coqa": lambda: cmd_coqa(cfg, args.label, args.cell),
        "verify": lambda: cmd_verify(cfg),
        "oracle": lambda: cmd_oracle(cfg),
        "classify": lambda: cmd_classify(cfg),
        "connect": lambda: cmd_connect(cfg),
        "lift": lambda: cmd_lift(cfg, args.label),
    }
    try:
        return handlers[args.command]()
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except AssertionError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
