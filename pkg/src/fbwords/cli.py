"""Command-line front end.

Usage:
    fbwords analyze 00101
    fbwords census --max-len 18 --out census.txt --bless
    fbwords verify all --max-len 12 --format json
    fbwords generate-f --max-len 8 --with-trace
    fbwords descend 00 101

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path

import click

from fbwords import harness
from fbwords.fully_bordered import (
    census,
    descent_chain,
    fb_pair_of,
    generate_f,
    is_fb_pair,
    is_fully_bordered,
)
from fbwords.words import (
    Order,
    WordError,
    borders,
    is_lyndon,
    is_primitive,
    local_root,
    parse_word,
    period,
    root_decomposition,
    two_palindrome_splits,
)

FORMATS = click.Choice(["text", "csv", "json"])


class WordParam(click.ParamType):
    name = "word"

    def convert(self, value, param, ctx):
        try:
            w = parse_word(value)
        except WordError as exc:
            self.fail(str(exc), param, ctx)
        if not w:
            self.fail("word must be nonempty", param, ctx)
        return w


WORD = WordParam()


def _cell(value):
    if isinstance(value, (int, str)) and not isinstance(value, bool):
        return value
    return json.dumps(value, sort_keys=True)


def emit(fmt: str, command: str, params: dict, result, records: list[dict], text: list[str]) -> None:
    if fmt == "json":
        click.echo(json.dumps({"command": command, "params": params, "result": result}, sort_keys=True))
    elif fmt == "csv":
        buf = io.StringIO()
        if records:
            writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
            writer.writerow(list(records[0]))
            for rec in records:
                writer.writerow([_cell(v) for v in rec.values()])
        click.echo(buf.getvalue(), nl=False)
    else:
        for line in text:
            click.echo(line)


@click.group()
@click.option("--threads", type=click.IntRange(min=1), default=None, help="Worker threads for scans (default: all CPUs).")
@click.pass_context
def cli(ctx, threads):
    """Fully bordered binary words: analysis, census, verification."""
    ctx.obj = {"threads": threads}


@cli.command()
@click.argument("word", type=WORD)
@click.option("--format", "fmt", type=FORMATS, default="text")
def analyze(word, fmt):
    """Report borders, roots, Lyndon status, local roots and the census of WORD."""
    dec = root_decomposition(word)
    pair = fb_pair_of(word)
    result = {
        "word": word,
        "length": len(word),
        "borders": borders(word),
        "period": period(word),
        "root_decomposition": {"s": dec.s, "t": dec.t, "k": dec.k},
        "primitive": is_primitive(word),
        "lyndon": {o.value: is_lyndon(word, o) for o in Order},
        "local_roots": [
            {"point": r.point, "root": r.root, "trivial": r.trivial}
            for r in (local_root(word, m) for m in range(len(word)))
        ],
        "unbordered_points": list(census(word).unbordered_points),
        "fully_bordered": is_fully_bordered(word),
        "fb_pair": list(pair) if pair else None,
        "palindrome_splits": two_palindrome_splits(word),
    }
    records = [{"field": k, "value": _cell(v)} for k, v in result.items()]
    text = [f"{k}: {json.dumps(v)}" for k, v in result.items()]
    emit(fmt, "analyze", {"word": word}, result, records, text)


@cli.command("census")
@click.option("--max-len", "max_n", type=click.IntRange(2, harness.CENSUS_BOUND), default=harness.PAIR_SUITE_BOUND)
@click.option("--format", "fmt", type=FORMATS, default="text")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Golden census file.")
@click.option("--bless", is_flag=True, help="Write the golden file instead of comparing against it.")
@click.pass_context
def census_cmd(ctx, max_n, fmt, out, bless):
    """Count fully bordered words for every length up to --max-len."""
    rows = harness.census_table(max_n, ctx.obj["threads"])
    records = [
        {
            "n": r.n,
            "fb_words": r.fb_words,
            "fb_classes": r.fb_classes,
            "f_pairs": r.f_pairs,
            "histogram": ",".join(f"{k}:{v}" for k, v in sorted(r.unbordered_histogram.items())),
        }
        for r in rows
    ]
    text = ["n fb_words fb_classes f_pairs histogram"] + [r.to_line() for r in rows]
    emit(fmt, "census", {"max_n": max_n}, records, records, text)

    golden = harness.format_census(rows)
    bad = [f"n={r.n}: {v}" for r in rows for v in r.violations()]
    if bad:
        click.echo("census invariants violated: " + "; ".join(bad), err=True)
        sys.exit(1)
    if out is None:
        return
    if bless:
        out.write_text(golden)
        click.echo(f"blessed {out}", err=True)
    elif out.exists():
        if out.read_text() != golden:
            click.echo(f"census drift against golden file {out}", err=True)
            sys.exit(1)
        click.echo(f"matches golden file {out}", err=True)


@cli.command()
@click.argument("suite", type=click.Choice(harness.SUITES + ("all",)))
@click.option("--max-len", "max_n", type=click.IntRange(min=2), default=harness.PAIR_SUITE_BOUND)
@click.option("--format", "fmt", type=FORMATS, default="text")
@click.pass_context
def verify(ctx, suite, max_n, fmt):
    """Run verification SUITE (main, palindromes, descent, lemmas or all)."""
    if suite in ("descent", "all") and max_n < 3:
        raise click.BadParameter("descent needs --max-len >= 3", param_hint="--max-len")
    reports = harness.run_suites(suite, max_n, ctx.obj["threads"])
    result = [r.to_dict() for r in reports]
    records = [
        {
            "suite": r.suite,
            "bound": r.bound,
            "items_checked": r.items_checked,
            "failure_count": r.failure_count,
            "passed": r.passed,
            "stats": r.stats,
            "failures": r.failures,
        }
        for r in reports
    ]
    text = [
        f"{'PASS' if r.passed else 'FAIL'} {r.suite} bound={r.bound} checked={r.items_checked} "
        f"failures={r.failure_count}" + (f" {json.dumps(r.stats, sort_keys=True)}" if r.stats else "")
        for r in reports
    ]
    text += [f"  {r.suite}: {json.dumps(f)}" for r in reports for f in r.failures]
    emit(fmt, "verify", {"suite": suite, "max_n": max_n}, result, records, text)
    sys.exit(0 if all(r.passed for r in reports) else 1)


@cli.command("generate-f")
@click.option("--max-len", "max_n", type=click.IntRange(min=2), default=8)
@click.option("--format", "fmt", type=FORMATS, default="text")
@click.option("--with-trace", is_flag=True, help="Include one derivation per pair.")
def generate_f_cmd(max_n, fmt, with_trace):
    """List the members (u, v) of F with |uv| <= --max-len."""
    members = generate_f(max_n)
    records = []
    for (u, v), trace in members.items():
        rec = {"u": u, "v": v, "length": len(u) + len(v)}
        if with_trace:
            rec["start"] = list(trace.start)
            rec["trace"] = [str(s) for s in trace.steps]
        records.append(rec)
    text = [
        f"{r['u']} {r['v']}" + ("  " + " ".join([f"base{tuple(r['start'])}"] + r["trace"]) if with_trace else "")
        for r in records
    ]
    emit(fmt, "generate-f", {"max_n": max_n, "with_trace": with_trace}, records, records, text)


@cli.command()
@click.argument("u", type=WORD)
@click.argument("v", type=WORD)
@click.option("--format", "fmt", type=FORMATS, default="text")
def descend(u, v, fmt):
    """Descend from the fully bordered pair (U, V) down to a base pair."""
    if not is_fb_pair(u, v):
        points = list(census(u + v).unbordered_points)
        click.echo(f"({u}, {v}) is not a fully bordered pair: unbordered conjugates of {u + v} at {points}", err=True)
        sys.exit(1)
    records = []
    for i, (pair, res) in enumerate(descent_chain(u, v)):
        nxt = (pair[1], pair[0]) if res is None else res.next
        records.append(
            {
                "step": i,
                "u": pair[0],
                "v": pair[1],
                "action": "swap" if res is None else res.case.value,
                "next_u": nxt[0],
                "next_v": nxt[1],
                "witness": list(res.witness) if res is not None and res.witness else None,
            }
        )
    text = [
        f"({r['u']}, {r['v']}) --{r['action']}--> ({r['next_u']}, {r['next_v']})"
        + (f"  v = {'.'.join(r['witness'])}" if r["witness"] else "")
        for r in records
    ]
    end = (records[-1]["next_u"], records[-1]["next_v"]) if records else (u, v)
    text.append(f"base pair ({end[0]}, {end[1]}) reached")
    emit(fmt, "descend", {"u": u, "v": v}, {"chain": records, "base": list(end)}, records, text)


def main(argv=None):
    cli.main(args=argv, prog_name="fbwords")


if __name__ == "__main__":
    main()
