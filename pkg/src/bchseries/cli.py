"""Command-line interface: series terms, single coefficients, census, verify.

All data is written to stdout and diagnostics to stderr.  Exit codes: 0 on
success, 1 when a verification fails, 2 on usage errors.  Output bytes are
deterministic for a given command line.
"""

from __future__ import annotations

import json
import sys

import click

from .algebra import word_format, word_parse
from .census import (
    bound_checks,
    census_sweep,
    census_to_csv,
    census_to_json,
    property_report_to_json,
    property_suite,
)
from .engine import PRESET_NAMES, engine_coefficient, preset, series_terms
from .forms import check_forms
from .lie import dynkin_series, expand_comm_poly, format_comm_poly
from .oracle import goldberg_direct

VERIFY_SUITES = ("properties", "bounds", "dynkin", "oracle", "commutator-forms")

_variant_option = click.option(
    "--variant",
    type=click.Choice(PRESET_NAMES),
    default="standard",
    show_default=True,
    help="Which product of exponentials to expand.",
)
_format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(("text", "json", "csv")),
    default="text",
    show_default=True,
    help="Output format.",
)


@click.group()
def main() -> None:
    """Exact series terms, word coefficients, and coefficient censuses."""


@main.command()
@_variant_option
@click.option("--order", type=click.IntRange(min=1), required=True, help="Truncation degree N.")
@_format_option
@click.option("--quiet", is_flag=True, help="Print only per-degree term counts, not the terms.")
def terms(variant: str, order: int, fmt: str, quiet: bool) -> None:
    """Print the series terms of degrees 1..N for a variant."""
    series = series_terms(preset(variant), order)
    if fmt == "json":
        entries = []
        for term in series:
            if quiet:
                entries.append({"degree": term.degree, "count": len(term.body)})
            else:
                entries.append(
                    {
                        "degree": term.degree,
                        "words": [
                            {
                                "word": word_format(w),
                                "num": str(c.numerator),
                                "den": str(c.denominator),
                            }
                            for w, c in term.body.sorted_items()
                        ],
                    }
                )
        click.echo(json.dumps({"variant": variant, "terms": entries}, indent=2))
    elif fmt == "csv":
        if quiet:
            lines = ["degree,count"] + [f"{t.degree},{len(t.body)}" for t in series]
        else:
            lines = ["degree,word,num,den"]
            for term in series:
                for w, c in term.body.sorted_items():
                    lines.append(
                        f"{term.degree},{word_format(w)},{c.numerator},{c.denominator}"
                    )
        click.echo("\n".join(lines))
    else:
        for term in series:
            if quiet:
                click.echo(f"degree {term.degree}: {len(term.body)} terms")
            else:
                click.echo(f"degree {term.degree}: {term.body}")


@main.command()
@click.option("--word", "word_text", required=True, help="Word text, e.g. X^4Y^4.")
@click.option(
    "--mode",
    type=click.Choice(("engine", "oracle", "both")),
    default="engine",
    show_default=True,
    help="Compute via the matrix engine, the direct block sum, or both.",
)
def goldberg(word_text: str, mode: str) -> None:
    """Print the coefficient of one word in the standard-product series."""
    try:
        w = word_parse(word_text)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    if w.length < 1:
        raise click.UsageError("the empty word has no coefficient")
    if mode == "engine":
        click.echo(str(engine_coefficient(w)))
    elif mode == "oracle":
        click.echo(str(goldberg_direct(w)))
    else:
        from_engine = engine_coefficient(w)
        from_oracle = goldberg_direct(w)
        click.echo(f"engine: {from_engine}")
        click.echo(f"oracle: {from_oracle}")
        if from_engine != from_oracle:
            click.echo("MISMATCH", err=True)
            sys.exit(1)


@main.command()
@click.option("--max", "max_n", type=click.IntRange(min=2), required=True, help="Largest degree.")
@_variant_option
@_format_option
def census(max_n: int, variant: str, fmt: str) -> None:
    """Count non-zero coefficients per degree for n = 2..max."""
    records = census_sweep(max_n, preset(variant))
    if fmt == "csv":
        click.echo(census_to_csv(records), nl=False)
    elif fmt == "json":
        click.echo(census_to_json(records), nl=False)
    else:
        click.echo(f"{'n':>3} {'count':>8} {'bound':>8} ratio")
        for r in records:
            click.echo(f"{r.n:>3} {r.count:>8} {r.bound:>8} {r.ratio}")


@main.command()
@click.argument("suite", type=click.Choice(VERIFY_SUITES))
@click.option("--max", "max_n", type=click.IntRange(min=2), required=True, help="Largest degree.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(("text", "json")),
    default="text",
    show_default=True,
    help="Output format.",
)
def verify(suite: str, max_n: int, fmt: str) -> None:
    """Run a verification suite up to degree max; exit 1 on any failure."""
    failures = 0
    if suite == "properties":
        reports = [property_suite(n) for n in range(2, max_n + 1)]
        if fmt == "json":
            for report in reports:
                click.echo(property_report_to_json(report), nl=False)
        else:
            for report in reports:
                for name, result in report.checks.items():
                    status = "PASS" if result.passed else "FAIL"
                    witness = (
                        "" if result.witness is None else f" witness={word_format(result.witness)}"
                    )
                    click.echo(f"{status} n={report.n} {name}{witness}")
        failures = sum(0 if report.ok else 1 for report in reports)
    elif suite == "bounds":
        report = bound_checks(max_n)
        rows_payload = []
        for row in report.rows:
            status = "PASS" if row.ok else "FAIL"
            notes = []
            if row.prime:
                notes.append(f"prime, saturated={row.prime_saturated}")
            if row.even_bound is not None:
                notes.append(
                    f"even bound {row.even_bound}, holds={row.even_bound_holds},"
                    f" saturated={row.even_saturated} (expected {row.even_saturation_expected})"
                )
            if fmt == "json":
                rows_payload.append(
                    {
                        "n": row.n,
                        "count": row.count,
                        "pass": row.ok,
                        "notes": "; ".join(notes),
                    }
                )
            else:
                click.echo(f"{status} n={row.n} count={row.count} {'; '.join(notes)}")
            failures += 0 if row.ok else 1
        if fmt == "json":
            click.echo(json.dumps({"suite": "bounds", "rows": rows_payload}, indent=2))
    elif suite == "dynkin":
        rows_payload = []
        for n in range(1, max_n + 1):
            expanded = expand_comm_poly(dynkin_series(n))
            body = series_terms(preset("standard"), max_n)[n - 1].body
            ok = expanded == body
            failures += 0 if ok else 1
            if fmt == "json":
                rows_payload.append({"n": n, "pass": ok})
            else:
                click.echo(f"{'PASS' if ok else 'FAIL'} n={n} nested-commutator identity")
        if fmt == "json":
            click.echo(json.dumps({"suite": "dynkin", "rows": rows_payload}, indent=2))
    elif suite == "oracle":
        from .algebra import all_words

        rows_payload = []
        for n in range(1, max_n + 1):
            bad = None
            for w in all_words(n):
                if engine_coefficient(w) != goldberg_direct(w):
                    bad = w
                    break
            ok = bad is None
            failures += 0 if ok else 1
            if fmt == "json":
                rows_payload.append(
                    {"n": n, "pass": ok, "witness": word_format(bad) if bad else None}
                )
            else:
                witness = "" if bad is None else f" witness={word_format(bad)}"
                click.echo(f"{'PASS' if ok else 'FAIL'} n={n} engine vs direct sum{witness}")
        if fmt == "json":
            click.echo(json.dumps({"suite": "oracle", "rows": rows_payload}, indent=2))
    else:  # commutator-forms
        verdicts = check_forms(max_degree=max_n)
        rows_payload = []
        for verdict in verdicts:
            form = verdict.form
            failures += 0 if verdict.ok else 1
            if fmt == "json":
                rows_payload.append(
                    {
                        "label": form.label,
                        "strict": form.strict,
                        "claim": form.claim,
                        "matches": verdict.matches,
                        "pass": verdict.ok,
                        "diff": str(verdict.diff) if not verdict.matches else None,
                        "engine_form_is_lie": all(
                            verdict.engine_content_is_lie.values()
                        ),
                    }
                )
            else:
                status = "PASS" if verdict.ok else "FAIL"
                line = f"{status} {form.label}: claim {form.claim}"
                if verdict.matches:
                    line += " matches the engine term"
                else:
                    line += (
                        f" does NOT match the engine term"
                        f" (report-only: engine form is "
                        f"{'a Lie element' if all(verdict.engine_content_is_lie.values()) else 'NOT a Lie element'})"
                        if not form.strict
                        else " does NOT match the engine term"
                    )
                click.echo(line)
                if not verdict.matches:
                    click.echo(f"  diff (claim minus engine): {verdict.diff}")
                    click.echo(f"  engine term: {verdict.engine_body}")
                    click.echo(f"  claim expands to: {format_comm_poly(verdict.claim_poly)}"
                               f" -> {expand_comm_poly(verdict.claim_poly)}")
        if fmt == "json":
            click.echo(json.dumps({"suite": "commutator-forms", "rows": rows_payload}, indent=2))
    if failures:
        sys.exit(1)


if __name__ == "__main__":
    main()
