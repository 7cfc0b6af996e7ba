"""Command-line entry point: ``subgames <command> ...``.

Exit codes: 0 success, 1 a verification found a mismatch, 2 bad usage or an
unreadable input file.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .automata import HALTING, Configuration, ca_history, initial_config, tm_run, tm_trace
from .game_compiler import compile_rule, verify_simulation
from .game_core import DifferenceSet, Solver, find_period_1d, solve_up_to_sum
from .kayles import kayles_to_msg, kayles_value, verify_kayles_reduction
from .nand_circuit import TruthTable
from .parallel_machine import (
    HeadTimingError, TimeBudget, ZoneTape, min_assignments, reduction_position,
    profile_of, run_until_result, u_alphabet_size, word_at, zone_offset,
)

OK, MISMATCH, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _position(text: str, dim: int) -> tuple[int, ...]:
    try:
        x = tuple(int(c) for c in text.split(","))
    except ValueError:
        raise UsageError(f"bad position {text!r}; use comma-separated integers") from None
    if len(x) != dim or any(c < 0 for c in x):
        raise UsageError(f"position {text!r} must have {dim} non-negative coordinates")
    return x


def _pn(v: int) -> str:
    return "N" if v else "P"


def cmd_solve(args, out) -> int:
    game = formats.read(args.gamefile, formats.parse_game)
    if args.sum_bound is not None:
        table = solve_up_to_sum(game, args.sum_bound)
        for x in sorted(table.values, key=lambda x: (sum(x), x)):
            out.write(f"{' '.join(map(str, x))} {_pn(table[x])}\n")
        return OK
    if not args.positions:
        raise UsageError("give positions or --sum-bound")
    solver = Solver(game)
    for p in args.positions:
        out.write(_pn(solver.value(_position(p, game.dimension))) + "\n")
    return OK


def cmd_period(args, out) -> int:
    game = formats.read(args.gamefile, formats.parse_game)
    if not isinstance(game, DifferenceSet) or game.dimension != 1:
        raise UsageError("period needs a one-dimensional difference set")
    per = find_period_1d(game, args.horizon)
    if per is None:
        out.write("none\n")
    else:
        out.write(f"pre={per.preperiod} period={per.period}\n")
    return OK


def cmd_kayles(args, out) -> int:
    g = formats.read(args.graphfile, formats.parse_graph)
    if args.reduce or args.verify:
        try:
            red = kayles_to_msg(g)
        except ValueError as e:
            raise UsageError(str(e)) from None
        if args.reduce:
            out.write(f"# start {' '.join(map(str, red.start))}\n")
            out.write(formats.format_difference_set(red.game))
            return OK
        ok = verify_kayles_reduction(g)
        out.write("OK\n" if ok else "MISMATCH\n")
        return OK if ok else MISMATCH
    out.write(_pn(kayles_value(g)) + "\n")
    return OK


def _symbols(text: str) -> list[int]:
    try:
        return [int(c) for c in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad configuration {text!r}") from None


def cmd_ca_run(args, out) -> int:
    ca = formats.read(args.rulefile, formats.parse_rule_table)
    if args.init is None:
        # single-cell seed: 0 on a binary tape of 1s, else 1 on 0s
        init = [0] if ca.blank == 1 else [1]
    else:
        init = _symbols(args.init)
    if any(not ca.in_alphabet(a) for a in init):
        raise UsageError("initial configuration uses symbols outside the alphabet")
    conf = Configuration(args.offset, tuple(init), ca.blank)
    for t, c in enumerate(ca_history(ca, conf, args.steps)):
        lo, hi = c.span
        lo, hi = min(lo, args.offset - ca.radius * t), max(hi, args.offset + len(init) - 1 + ca.radius * t)
        out.write(f"{t} {lo} {' '.join(str(c[i]) for i in range(lo, hi + 1))}\n")
    return OK


def cmd_tm_run(args, out) -> int:
    m = formats.read(args.tmfile, formats.parse_tm)
    word = "" if args.word == "-" else args.word
    if any(c not in "01" for c in word):
        raise UsageError("the input word must be binary ('-' for the empty word)")
    if args.trace:
        for cfg in tm_trace(m, initial_config(m, word), args.max_steps):
            lo, hi = cfg.tape.span
            lo, hi = min(lo, cfg.head), max(hi, cfg.head)
            cells = " ".join(f"[{cfg.tape[i]}]" if i == cfg.head else str(cfg.tape[i]) for i in range(lo, hi + 1))
            out.write(f"q={cfg.state} {cells}\n")
            if cfg.state in HALTING:
                break
    run = tm_run(m, word, args.max_steps)
    out.write(f"{run.status} steps={run.steps}\n")
    return OK


def cmd_compile(args, out) -> int:
    ca = formats.read(args.rulefile, formats.parse_rule_table)
    if tuple(ca.alphabet) != (0, 1) or ca.blank != 1:
        raise UsageError("compile needs a binary rule table with blank 1")
    rule = lambda *w: ca.rule(w)  # noqa: E731
    if not TruthTable.from_function(ca.radius, rule).blank_preserving():
        raise UsageError("rule is not blank-preserving")
    circuit, modular, lifted = compile_rule(ca.radius, rule)
    if args.emit:
        Path(args.emit).write_text(formats.format_difference_set(lifted.game))
    if args.emit_modular:
        Path(args.emit_modular).write_text(formats.format_modular_game(modular.game))
    if args.emit_circuit:
        Path(args.emit_circuit).write_text(formats.format_circuit(circuit))
    out.write(f"N={circuit.size} dim={lifted.dimension} vectors={len(lifted.game)}\n")
    report = verify_simulation(ca.radius, rule, circuit, args.tmax, lifted=not args.no_lifted)
    lines = report.lines()
    if len(lines) > args.max_lines + 1:
        lines = lines[:args.max_lines] + [f"... {len(lines) - 1 - args.max_lines} more", lines[-1]]
    out.write("\n".join(lines) + "\n")
    return OK if report.passed else MISMATCH


def cmd_u_sim(args, out) -> int:
    m = formats.read(args.tmfile, formats.parse_tm)
    budget = TimeBudget(args.C, args.budget_exp)
    tape = ZoneTape(m, budget)
    status = OK
    last = (1 << (args.max_len + 1)) - 1
    try:
        for k in range(1, last + 1):
            w = word_at(k)
            res = run_until_result(m, budget, w, tape=tape, stage_budget=args.stage_budget)
            direct = tm_run(m, w, budget(len(w))).status
            _, rc = zone_offset(w, budget)
            zone = tape.zones[k - 1]
            ok = res.verdict == direct and zone.result_cell == rc
            if not ok:
                status = MISMATCH
            out.write(
                f"w={w or '-'} k={k} result={res.verdict} direct={direct} t_res={res.t_res} "
                f"bound={res.bound} within={'yes' if res.within_bound else 'no'} "
                f"block={zone.result_cell} formula={rc} {'ok' if ok else 'MISMATCH'}\n"
            )
    except HeadTimingError as e:
        out.write(f"timing violation: {e}\n")
        return MISMATCH
    except RuntimeError as e:
        out.write(f"error: {e}\n")
        return MISMATCH
    n0 = profile_of(tape, args.max_len).n0
    out.write(f"visits={tape.first_block_visits} mod3=ok n0={'-' if n0 is None else n0}\n")
    return status


def cmd_reduce(args, out) -> int:
    m = formats.read(args.tmfile, formats.parse_tm)
    word = "" if args.word == "-" else args.word
    if any(c not in "01" for c in word):
        raise UsageError("the input word must be binary ('-' for the empty word)")
    L = args.L if args.L is not None else u_alphabet_size(m, args.u_states)
    N = args.N if args.N is not None else min_assignments(L)
    point = reduction_position(word, N, L, kappa=args.budget_exp, C=args.C, strict=False)
    out.write(point.report_line() + "\n")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="subgames", description="Subtraction games and the machinery that simulates automata with them.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="P/N values of positions")
    s.add_argument("gamefile")
    s.add_argument("positions", nargs="*", help="comma-separated coordinates, e.g. 3,1")
    s.add_argument("--sum-bound", type=int, help="dump every position with coordinate sum up to this bound")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("period", help="period of a one-dimensional game")
    s.add_argument("gamefile")
    s.add_argument("--horizon", type=int, default=1000)
    s.set_defaults(func=cmd_period)

    s = sub.add_parser("kayles", help="Node Kayles value, reduction or its check")
    s.add_argument("graphfile")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--reduce", action="store_true", help="print the subtraction game and its start position")
    g.add_argument("--verify", action="store_true", help="compare the game value with the direct value")
    s.set_defaults(func=cmd_kayles)

    s = sub.add_parser("ca-run", help="run a cellular automaton from a rule table")
    s.add_argument("rulefile")
    s.add_argument("--steps", type=int, default=10)
    s.add_argument("--init", help="initial symbols, space or comma separated")
    s.add_argument("--offset", type=int, default=0, help="cell of the first initial symbol")
    s.set_defaults(func=cmd_ca_run)

    s = sub.add_parser("tm-run", help="run a Turing machine on a word")
    s.add_argument("tmfile")
    s.add_argument("word", help="binary input, '-' for the empty word")
    s.add_argument("--max-steps", type=int, default=10000)
    s.add_argument("--trace", action="store_true")
    s.set_defaults(func=cmd_tm_run)

    s = sub.add_parser("compile", help="compile a binary rule into games and check the simulation")
    s.add_argument("rulefile")
    s.add_argument("--tmax", type=int, default=6)
    s.add_argument("--emit", help="write the lifted subtraction game here")
    s.add_argument("--emit-modular", help="write the modular game here")
    s.add_argument("--emit-circuit", help="write the normalized circuit here")
    s.add_argument("--no-lifted", action="store_true", help="check the modular game only")
    s.add_argument("--max-lines", type=int, default=20, help="mismatch lines to print")
    s.set_defaults(func=cmd_compile)

    s = sub.add_parser("u-sim", help="run the parallel machine on all short words")
    s.add_argument("tmfile")
    s.add_argument("--max-len", type=int, default=3)
    s.add_argument("--C", type=int, default=1)
    s.add_argument("--budget-exp", type=int, default=1, help="kappa in T(n) = C 2^(n^kappa)")
    s.add_argument("--stage-budget", type=int, help="stages allowed per word (default 2^(n+1) + T(n))")
    s.set_defaults(func=cmd_u_sim)

    s = sub.add_parser("reduce", help="game position encoding the verdict on a word")
    s.add_argument("tmfile")
    s.add_argument("word", help="binary input, '-' for the empty word")
    s.add_argument("--budget-exp", type=int, default=1, help="kappa")
    s.add_argument("--C", type=int, default=1)
    s.add_argument("--L", type=int, help="alphabet size of the encoded automaton")
    s.add_argument("--u-states", type=int, default=1, help="state count used to size L when --L is absent")
    s.add_argument("--N", type=int, help="assignment count of the compiled circuit (default: a lower bound)")
    s.set_defaults(func=cmd_reduce)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as e:
        print(f"subgames {args.command}: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
