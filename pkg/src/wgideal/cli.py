"""
``wgf``: build, decompose and verify W-graphs from the command line.

Generator indices on the command line are 1-based.  Words are dot-separated
generator indices (``2.1`` is ``s2 s1``), ``e`` is the identity, and lists
of words are comma-separated.  Exit status is 0 when everything requested
passes, 1 when a verification fails and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import io
import itertools
import sys
from contextlib import redirect_stdout
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import serialize as ser
from .cells import cells, extract_subideal, up_set_ideals
from .coxeter import CoxeterSystem, GroupTooLargeError, UnsupportedGroupError, cached_system
from .hecke import canonical_basis_oracle, oracle_applicable
from .ideals import Ideal, coset_ideal, full_ideal, ideal_from_generators
from .parabolic import cell_union_check, deodhar_check, descent_match_check, run_checks
from .typea import (partitions, rs, permutation, specht_basis_action, specht_wgraph,
                    validate_partition, hook_length)
from .wgraph import NotWGraphIdeal, Report, kl_recursion, verify_ideal, verify_wgraph, wgraph_of_ideal

__all__ = ["RunConfig", "UsageError", "build_parser", "parse_config", "run", "main",
           "seed_corpus", "CORPUS"]

ALL_CHECKS = ("braid", "oracle", "deodhar", "cells", "divisibility")
PARABOLIC_CHECKS = ("deodhar", "descents", "cellUnion", "maxCellIdeal")


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    group: str | None = None
    ideal: str = "full"
    gens: str = ""
    j: tuple[int, ...] = ()
    out: str = "json"
    checks: tuple[str, ...] = ()
    n: int | None = None
    partition: tuple[int, ...] | None = None
    action: bool = False

    def to_argv(self) -> list[str]:
        """Flags that parse back to this config."""
        argv = [self.command]
        if self.group is not None:
            argv += ["--group", self.group]
        if self.command in ("wgraph", "cells", "verify"):
            argv += ["--ideal", self.ideal]
            if self.gens:
                argv += ["--gens", self.gens]
        if self.command in ("wgraph", "cells", "verify", "parabolic"):
            argv += ["--j", ",".join(map(str, self.j))]
        if self.command in ("group", "wgraph", "cells", "specht"):
            argv += ["--out", self.out]
        if self.checks:
            argv += ["--checks", ",".join(self.checks)]
        if self.n is not None:
            argv += ["--n", str(self.n)]
        if self.partition is not None:
            argv += ["--partition", ",".join(map(str, self.partition))]
        if self.action:
            argv.append("--action")
        return argv


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wgf", description="W-graphs from W-graph ideals.")
    p.add_argument("--seed-corpus", metavar="DIR", help="write the golden-file corpus into DIR and exit")
    sub = p.add_subparsers(dest="command")

    def common(sp, ideal=True, out=("json", "dot", "text")):
        sp.add_argument("--group", help='type descriptor, e.g. A3, B3, I2(7), "matrix:[[1,3],[3,1]]"')
        if ideal:
            sp.add_argument("--ideal", default="full", choices=("full", "dj", "gens", "specht"))
            sp.add_argument("--gens", default="", help='generators, e.g. "2.1,3"')
            sp.add_argument("--partition", help="partition for --ideal specht, e.g. 3,2")
        sp.add_argument("--j", default="", help='1-based generator indices, e.g. "1,3"')
        if out:
            sp.add_argument("--out", default=out[0], choices=out)

    sp = sub.add_parser("group", help="describe a Coxeter group")
    sp.add_argument("--group", required=True)
    sp.add_argument("--out", default="json", choices=("json", "text"))
    common(sub.add_parser("wgraph", help="W-graph of an ideal"))
    common(sub.add_parser("cells", help="cell decomposition of an ideal's W-graph"))
    sp = sub.add_parser("parabolic", help="checks comparing D_J with the regular W-graph")
    common(sp, ideal=False, out=None)
    sp.add_argument("--check", "--checks", dest="checks", default="all")
    sp = sub.add_parser("specht", help="Specht W-graph of a partition")
    sp.add_argument("--n", type=int)
    sp.add_argument("--partition", required=True)
    sp.add_argument("--out", default="json", choices=("json", "dot", "text"))
    sp.add_argument("--action", action="store_true", help="include the action on the tableau basis")
    sp = sub.add_parser("verify", help="run verification checks")
    common(sp, out=None)
    sp.add_argument("--checks", "--check", dest="checks", default="all")
    return p


def _ints(text: str | None) -> tuple[int, ...]:
    if not text or not text.strip():
        return ()
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_config(argv: Sequence[str]) -> RunConfig:
    ns = build_parser().parse_args(list(argv))
    if ns.command is None:
        raise UsageError("a subcommand is required")
    checks = ()
    if getattr(ns, "checks", None) is not None:
        allowed = PARABOLIC_CHECKS if ns.command == "parabolic" else ALL_CHECKS
        raw = ns.checks.split(",")
        if raw == ["all"]:
            checks = allowed
        else:
            bad = [c for c in raw if c not in allowed]
            if bad:
                raise UsageError(f"unknown checks {bad}; choose from {list(allowed)} or all")
            checks = tuple(c for c in allowed if c in raw)
    part = getattr(ns, "partition", None)
    return RunConfig(
        command=ns.command, group=getattr(ns, "group", None),
        ideal=getattr(ns, "ideal", "full"), gens=getattr(ns, "gens", ""),
        j=_ints(getattr(ns, "j", "")), out=getattr(ns, "out", None) or "json",
        checks=checks, n=getattr(ns, "n", None),
        partition=_ints(part) if part else None, action=getattr(ns, "action", False))


# -- helpers -------------------------------------------------------------------

def _system(desc: str | None) -> CoxeterSystem:
    if not desc:
        raise UsageError("--group is required")
    try:
        return cached_system(desc)
    except (UnsupportedGroupError, GroupTooLargeError, ValueError) as exc:
        raise UsageError(f"unknown or unsupported group {desc!r}: {exc}") from None


def _j(system: CoxeterSystem, j: tuple[int, ...]) -> frozenset[int]:
    bad = [s for s in j if not 1 <= s <= system.rank]
    if bad:
        raise UsageError(f"generator indices {bad} out of range 1..{system.rank}")
    return ser.gens_in(j)


def _words(system: CoxeterSystem, text: str) -> list[int]:
    out = []
    for item in filter(None, text.replace(" ", "").split(",")):
        try:
            letters = [] if item == "e" else [int(x) for x in item.split(".")]
        except ValueError:
            raise UsageError(f"bad word {item!r}") from None
        if any(not 1 <= x <= system.rank for x in letters):
            raise UsageError(f"bad word {item!r}: letters must lie in 1..{system.rank}")
        out.append(ser.word_in(system, letters))
    return out


def _partition(cfg: RunConfig) -> tuple[int, ...]:
    if not cfg.partition:
        raise UsageError("--partition is required")
    try:
        lam = validate_partition(cfg.partition)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if cfg.n is not None and sum(lam) != cfg.n:
        raise UsageError(f"partition {lam} is not a partition of {cfg.n}")
    return lam


def _ideal(cfg: RunConfig):
    """Returns (ideal, graph) for the config's ideal spec."""
    if cfg.ideal == "specht":
        lam = _partition(cfg)
        mod = specht_wgraph(lam, check=sum(lam) <= 5)
        return mod.ideal, mod.graph
    W = _system(cfg.group)
    J = _j(W, cfg.j)
    if cfg.ideal == "full":
        if J:
            raise UsageError("--ideal full takes no J")
        ideal = full_ideal(W)
    elif cfg.ideal == "dj":
        ideal = coset_ideal(W, J)
    else:
        gens = _words(W, cfg.gens)
        if not gens:
            raise UsageError("--ideal gens needs --gens")
        try:
            ideal = ideal_from_generators(W, gens, J)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return ideal, wgraph_of_ideal(ideal)


def _emit(obj, cfg: RunConfig, dot=None, text=None) -> None:
    if cfg.out == "dot" and dot is not None:
        sys.stdout.write(dot())
    elif cfg.out == "text" and text is not None:
        sys.stdout.write(text())
    else:
        sys.stdout.write(ser.dumps(obj))


# -- subcommands -----------------------------------------------------------------

def cmd_group(cfg: RunConfig) -> int:
    W = _system(cfg.group)
    info = {"group": W.descriptor, "type": W.type_tag, "rank": W.rank, "order": W.size,
            "coxeterMatrix": [list(r) for r in W.coxeter_matrix],
            "longest": ser.word_out(W, W.longest), "longestLength": W.length(W.longest)}

    def text():
        rows = "\n".join("  " + " ".join(f"{x:>2}" for x in r) for r in W.coxeter_matrix)
        return (f"{W.descriptor}: type {W.type_tag}, rank {W.rank}, order {W.size}\n{rows}\n"
                f"longest element {W.word_str(W.longest)} (length {W.length(W.longest)})\n")
    _emit(info, cfg, text=text)
    return 0


def cmd_wgraph(cfg: RunConfig) -> int:
    _, g = _ideal(cfg)
    _emit(ser.wgraph_to_json(g), cfg, lambda: ser.wgraph_to_dot(g), lambda: ser.wgraph_to_text(g))
    return 0


def cmd_cells(cfg: RunConfig) -> int:
    _, g = _ideal(cfg)
    dec = cells(g)
    obj = ser.cells_to_json(dec)
    obj["cellWords"] = [[g.system.word_str(v) for v in c] for c in dec.cells]
    _emit(obj, cfg, lambda: ser.cells_to_dot(dec), lambda: ser.cells_to_text(dec))
    return 0


def cmd_parabolic(cfg: RunConfig) -> int:
    W = _system(cfg.group)
    J = _j(W, cfg.j)
    rep = run_checks(W, J, cfg.checks or PARABOLIC_CHECKS)
    sys.stdout.write(ser.dumps(rep))
    failed = any(v == "fail" or (isinstance(v, str) and v.startswith("fail")) for v in rep.values())
    return 1 if failed else 0


def cmd_specht(cfg: RunConfig) -> int:
    lam = _partition(cfg)
    mod = specht_wgraph(lam, check=sum(lam) <= 5)
    g = mod.graph
    obj = ser.wgraph_to_json(g)
    obj["partition"] = list(lam)
    lines = None
    if cfg.action:
        act = specht_basis_action(lam, mod.system)
        entries = []
        for (s, t), a in sorted(act.items(), key=lambda kv: (str(kv[0][1]), kv[0][0])):
            entries.append({"s": s + 1, "t": t.to_json(), "case": a.case.value,
                            "image": [{"u": u.to_json(), "coeff": str(c)}
                                      for u, c in sorted(a.image.items(), key=lambda kv: str(kv[0]))]})
        obj["action"] = entries
        lines = [f"T_{e['s']} b[{_tab_str(e['t'])}] ({e['case']}) = "
                 + " + ".join(f"({i['coeff']}) b[{_tab_str(i['u'])}]" for i in e["image"])
                 for e in entries]

    def text():
        body = ser.wgraph_to_text(g)
        return body + ("\n".join(lines) + "\n" if lines else "")
    _emit(obj, cfg, lambda: ser.wgraph_to_dot(g, name=f"S{','.join(map(str, lam))}"), text)
    return 0


def _tab_str(rows) -> str:
    return "/".join(",".join(map(str, r)) for r in rows)


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _verify_group(W: CoxeterSystem, checks: Sequence[str]) -> tuple[dict, list[str]]:
    """Checks across the regular module, every D_J and every cell-derived sub-ideal."""
    result: dict = {}
    failures: list[str] = []
    all_j = [frozenset(c) for k in range(W.rank + 1) for c in itertools.combinations(range(W.rank), k)]
    full = full_ideal(W)
    ideals = [full] + [coset_ideal(W, J) for J in all_j if J]
    counts: dict = {}

    if "braid" in checks:
        rep = Report()
        for ideal in ideals:
            rep.merge(verify_wgraph(wgraph_of_ideal(ideal)), f"J={ser.gens_out(ideal.j)} ")
        result["braid"] = _status(rep.passed)
        failures += rep.failures
        counts["braidGraphs"] = len(ideals)
    if "oracle" in checks:
        ok = True
        for ideal in ideals:
            if oracle_applicable(ideal) and kl_recursion(ideal).q != canonical_basis_oracle(ideal):
                ok = False
                failures.append(f"oracle: q-tables differ for J={ser.gens_out(ideal.j)}")
        result["oracle"] = _status(ok)
        counts["oracleIdeals"] = len(ideals)
    if "deodhar" in checks:
        rep = Report()
        for J in all_j:
            rep.merge(deodhar_check(W, J))
        result["deodhar"] = _status(rep.passed)
        failures += rep.failures
    subideals: list[Ideal] = []
    if "cells" in checks or "divisibility" in checks:
        g = wgraph_of_ideal(full)
        dec = cells(g)
        rtable0 = verify_ideal(full, g.qtable, check_braid=False).rtable
        seen = set()
        for i in range(len(dec.cells)):
            for sub in up_set_ideals(g, i, dec):
                if len(sub) and sub.member_set not in seen:
                    seen.add(sub.member_set)
                    subideals.append(sub)
        counts["cells"] = len(dec.cells)
        counts["subideals"] = len(subideals)
    if "cells" in checks:
        rep = Report()
        for J in all_j:
            rep.merge(descent_match_check(W, J))
            rep.merge(cell_union_check(W, J))
        for sub in subideals:
            try:
                extract_subideal(full, g.qtable, sub, rtable0)
                rep.record("extraction", True)
            except (AssertionError, NotWGraphIdeal) as exc:
                rep.record("extraction", False, f"{[W.word_str(w) for w in sub.generators]}: {exc}")
        if W.type_tag.startswith("A") and "x" not in W.type_tag:
            n = W.rank + 1
            by_q: dict = {}
            for w in range(W.size):
                by_q.setdefault(rs(permutation(W, w))[1], set()).add(w)
            ok = {frozenset(c) for c in dec.cells} == {frozenset(v) for v in by_q.values()}
            rep.record("rsCensus", ok, None if ok else "cells differ from the RS partition")
            counts["standardTableaux"] = sum(hook_length(lam) for lam in partitions(n))
        result["cells"] = _status(rep.passed)
        failures += rep.failures
    if "divisibility" in checks:
        ok = True
        for ideal in ideals + subideals:
            try:
                verify_ideal(ideal, check_braid=False)
            except NotWGraphIdeal as exc:
                ok = False
                failures.append(f"divisibility: {exc}")
        result["divisibility"] = _status(ok)
    result["counts"] = counts
    return result, failures


def _verify_ideal(ideal: Ideal, checks: Sequence[str]) -> tuple[dict, list[str]]:
    W = ideal.system
    result: dict = {}
    failures: list[str] = []
    try:
        ver = verify_ideal(ideal, check_braid="braid" in checks)
    except NotWGraphIdeal as exc:
        msg = str(exc)
        braid_failed = "braid" in msg or "quadratic" in msg
        result = {c: "not run" for c in checks}
        result["braid" if braid_failed else "divisibility"] = "fail"
        return result, [msg]
    if "braid" in checks:
        result["braid"] = _status(ver.report.checks.get("braid", True) and ver.report.checks.get("quadratic", True))
    if "divisibility" in checks:
        result["divisibility"] = "pass"
    if "oracle" in checks:
        if oracle_applicable(ideal):
            ok = ver.qtable.q == canonical_basis_oracle(ideal)
            result["oracle"] = _status(ok)
            if not ok:
                failures.append("oracle: q-tables differ")
        else:
            result["oracle"] = "not applicable"
    if "deodhar" in checks:
        if ideal.members == tuple(coset_ideal(W, ideal.j).members):
            rep = deodhar_check(W, ideal.j)
            result["deodhar"] = _status(rep.passed)
            failures += rep.failures
        else:
            result["deodhar"] = "not applicable"
    if "cells" in checks:
        g, dec = ver.wgraph, cells(ver.wgraph)
        rep = Report()
        for i in range(len(dec.cells)):
            for sub in up_set_ideals(g, i, dec):
                if len(sub):
                    try:
                        extract_subideal(ideal, ver.qtable, sub, ver.rtable)
                        rep.record("extraction", True)
                    except (AssertionError, NotWGraphIdeal) as exc:
                        rep.record("extraction", False, str(exc))
        result["cells"] = _status(rep.passed)
        failures += rep.failures
    return result, failures


def cmd_verify(cfg: RunConfig) -> int:
    checks = cfg.checks or ALL_CHECKS
    explicit = cfg.ideal != "full" or cfg.j
    if explicit:
        ideal, _ = _ideal(cfg)
        result, failures = _verify_ideal(ideal, checks)
        head = {"group": ideal.system.descriptor, "ideal": ser.ideal_to_json(ideal)}
    else:
        W = _system(cfg.group)
        result, failures = _verify_group(W, checks)
        head = {"group": W.descriptor}
    counts = result.pop("counts", None)
    report = dict(head, checks=result, failures=failures, passed=not failures and
                  all(v in ("pass", "not applicable") for v in result.values()))
    if counts:
        report["counts"] = counts
    sys.stdout.write(ser.dumps(report))
    return 0 if report["passed"] else 1


COMMANDS = {"group": cmd_group, "wgraph": cmd_wgraph, "cells": cmd_cells,
            "parabolic": cmd_parabolic, "specht": cmd_specht, "verify": cmd_verify}


def run(cfg: RunConfig) -> int:
    return COMMANDS[cfg.command](cfg)


# -- golden corpus ---------------------------------------------------------------

CORPUS: dict[str, list[str]] = {
    "group_B3.json": ["group", "--group", "B3"],
    "wgraph_A2_full.json": ["wgraph", "--group", "A2", "--ideal", "full", "--j", "", "--out", "json"],
    "wgraph_A2_full.dot": ["wgraph", "--group", "A2", "--ideal", "full", "--out", "dot"],
    "wgraph_A3_gens.json": ["wgraph", "--group", "A3", "--ideal", "gens", "--gens", "3.2", "--j", "1"],
    "cells_A2_dj2.json": ["cells", "--group", "A2", "--ideal", "dj", "--j", "2"],
    "cells_A3_full.dot": ["cells", "--group", "A3", "--out", "dot"],
    "parabolic_A3_j2.json": ["parabolic", "--group", "A3", "--j", "2", "--check", "all"],
    "specht_3-2.json": ["specht", "--n", "5", "--partition", "3,2", "--out", "json"],
    "specht_3-2.dot": ["specht", "--n", "5", "--partition", "3,2", "--out", "dot"],
    "specht_2-1_action.json": ["specht", "--partition", "2,1", "--action"],
    "verify_A3.json": ["verify", "--group", "A3", "--checks", "all"],
    "verify_A3_gens.json": ["verify", "--group", "A3", "--ideal", "gens", "--gens", "3.2", "--j", "1"],
}


def capture(argv: Sequence[str]) -> tuple[int, str]:
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def seed_corpus(directory: str | Path) -> list[Path]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    written = []
    for name, argv in CORPUS.items():
        code, text = capture(argv)
        if code != 0:
            raise RuntimeError(f"corpus command {argv} exited with {code}")
        path = d / name
        path.write_text(text)
        written.append(path)
    return written


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        ns, _ = build_parser().parse_known_args(argv)
        if ns.seed_corpus:
            for path in seed_corpus(ns.seed_corpus):
                print(path, file=sys.stderr)
            return 0
        return run(parse_config(argv))
    except UsageError as exc:
        print(f"wgf: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
