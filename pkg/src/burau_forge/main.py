"""Command line entry points: ``burau-forge`` and ``burau-forge-debug``."""
from pathlib import Path
from typing import Any, Dict, Optional
import json
import logging
import sys

import click

from . import APP_LOGGER_NAME
from .core.algebra import field_from_tag, is_unitary
from .core.algebra.serialization import dump_matrix, load_matrix, matrix_to_dict
from .core.braids.words import parse_braid
from .core.building import explore, parse_gens, verify_building_identity
from .core.burau import (
    BurauKind,
    burau_matrix,
    gamma_membership,
    gamma_prime_membership,
    laurent_criteria,
    reduced_squier_form,
    squier_form,
)
from .core.counterexample import run_counterexample
from .core.errors import BraidError, BurauForgeError, ConfigurationError, ParseError, PreconditionError
from .core.similitude import GenWord, NotFound, q_normal_form, verify_relation, word_matrix
from .core.stallings import a_words_in_l, fold, read_words
from .utils.config import SettingsManager
from .utils.logger import setup_logger
from .verification import run_scorecard

logger = logging.getLogger(APP_LOGGER_NAME)

USAGE_ERRORS = (ParseError, BraidError, PreconditionError, ConfigurationError)


def _emit(ctx: click.Context, data: Dict[str, Any], text: str):
    if ctx.obj["json"]:
        click.echo(json.dumps(data, indent=2, default=str))
    else:
        click.echo(text)


def _run(func):
    """Map library errors to exit codes: 2 for bad input, 1 for everything else."""
    try:
        return func()
    except USAGE_ERRORS as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(2)
    except BurauForgeError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(1)


@click.group()
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="YAML settings file (default: burau_forge.yaml)")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[str], as_json: bool):
    """Exact verification toolkit for Burau images and their companion groups."""
    try:
        settings = SettingsManager(Path(config_path) if config_path else None).settings
    except ConfigurationError as e:
        raise click.UsageError(str(e))
    root = logging.getLogger(APP_LOGGER_NAME)
    if root.level > logging.DEBUG:
        setup_logger(level=getattr(logging, settings.log_level))
    ctx.obj = {"settings": settings, "json": as_json}


@cli.command()
@click.argument("word")
@click.option("-n", "--strands", type=int, required=True, help="Number of strands")
@click.option("--kind", type=click.Choice(["u", "r"]), default="r", help="Unreduced or reduced")
@click.option("--field", "field_tag", default="q", help="Coefficient field tag: q, qi, fp:<p>")
@click.pass_context
def burau(ctx, word, strands, kind, field_tag):
    """Burau matrix of a braid word such as 's1 s2^-1 b1'."""
    def body():
        field = field_from_tag(field_tag)
        kind_ = BurauKind.parse(kind)
        A = burau_matrix(parse_braid(word, strands), kind_, field)
        J = squier_form(strands, field) if kind_ is BurauKind.UNREDUCED else reduced_squier_form(strands, field)
        unitary = is_unitary(A, J)
        data = matrix_to_dict(A)
        data["unitary"] = unitary
        _emit(ctx, data, f"{A}\nunitary: {unitary}")
    _run(body)


@cli.command()
@click.argument("matrix_file", type=click.Path(exists=True, dir_okay=False))
@click.option("-n", "--strands", type=int, default=None, help="Test Gamma_n membership for an unreduced image")
@click.pass_context
def check(ctx, matrix_file, strands):
    """Target-group membership and evaluation criteria for a matrix file."""
    def body():
        A = load_matrix(Path(matrix_file))
        data: Dict[str, Any] = {"matrix": matrix_to_dict(A)}
        lines = [str(A)]
        if strands is not None:
            report = gamma_membership(A, strands)
            data["gamma"] = report.to_dict()
            lines.append(f"Gamma_{strands}: {report.conditions}")
        elif A.n == 3:
            report = gamma_prime_membership(A)
            data["gamma_prime"] = report.to_dict()
            lines.append(f"Gamma'_4: {report.conditions}")
            if A.is_laurent():
                crit = laurent_criteria(A)
                data["criteria"] = {"p1": crit.p1, "p2": crit.p2, "p3": crit.p3}
                lines.append(f"criteria: tame={crit.p1} stabilized={crit.p2} backward={crit.p3}")
        else:
            raise PreconditionError("pass --strands for unreduced images; reduced checks need a 3x3 matrix")
        _emit(ctx, data, "\n".join(lines))
        if not report.passed:
            sys.exit(1)
    _run(body)


@cli.group()
def similitude():
    """Similitude generator relations and normal forms."""


@similitude.command("verify")
@click.argument("relation")
@click.option("--field", "field_tag", default="q", help="Coefficient field tag")
@click.option("-r", "r", default=None, help="Rational parameter r")
@click.option("-f", "f", default=None, help="Polynomial f in x over F_2")
@click.option("-g", "g", default=None, help="Second polynomial for additivity")
@click.pass_context
def similitude_verify(ctx, relation, field_tag, r, f, g):
    """Check one relation, e.g. 'h0-conjugation -r 1/2'."""
    def body():
        holds = verify_relation(relation, field_from_tag(field_tag), r=r, f=f, g=g)
        _emit(ctx, {"relation": relation, "field": field_tag, "holds": holds}, f"{relation}: {holds}")
        if not holds:
            sys.exit(1)
    _run(body)


@similitude.command("nf")
@click.argument("source")
@click.option("--field", "field_tag", default="q", help="Field for generator words")
@click.option("--max-len", type=int, default=None, help="Search bound (default from settings)")
@click.pass_context
def similitude_nf(ctx, source, field_tag, max_len):
    """Normal form of a 2x2 matrix file or of a generator word such as 'g[1/2] h0'."""
    def body():
        settings = ctx.obj["settings"]
        if Path(source).is_file():
            A = load_matrix(Path(source))
        else:
            A = word_matrix(GenWord.parse(source), field_from_tag(field_tag))
        found = q_normal_form(A, max_len=max_len or settings.nf_max_len,
                              step_budget=settings.explore_step_budget)
        missing = isinstance(found, NotFound)
        _emit(ctx, {"found": not missing, "word": str(found)}, str(found))
        if missing:
            sys.exit(1)
    _run(body)


@cli.group()
def counterexample():
    """The assembled counterexample and its checks."""


@counterexample.command("run")
@click.option("--exponents", nargs=2, type=int, default=None, help="Exponents of s1 and s3 s2 s3")
@click.option("--materialize", nargs=2, type=int, default=None,
              help="Also build the product symbolically for these small exponents")
@click.option("--emit-matrix", type=click.Path(dir_okay=False), default=None, help="Write A0 as matrix JSON")
@click.pass_context
def counterexample_run(ctx, exponents, materialize, emit_matrix):
    def body():
        settings = ctx.obj["settings"]
        report = run_counterexample(tuple(exponents or settings.eigen_exponents), materialize)
        if emit_matrix and report.A0 is not None:
            dump_matrix(report.A0, Path(emit_matrix))
        text = "\n".join(f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in report.checks.items())
        _emit(ctx, report.to_dict(), text + (f"\nA0 = {report.A0}" if report.A0 is not None else ""))
        if not report.passed:
            sys.exit(1)
    _run(body)


@cli.group()
def building():
    """Lattice classes of the building and identities among its generators."""


@building.command("explore")
@click.option("--gens", default="d1,d2,g1,g2,g3,g4", help="Comma separated generators")
@click.option("--radius", type=int, default=None, help="Word length bound (default from settings)")
@click.option("--emit-dot", type=click.Path(dir_okay=False), default=None)
@click.option("--emit-json", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def building_explore(ctx, gens, radius, emit_dot, emit_json):
    def body():
        settings = ctx.obj["settings"]
        report = explore(parse_gens(gens), radius=settings.explore_radius if radius is None else radius,
                         step_budget=settings.explore_step_budget, threads=settings.threads)
        if emit_dot:
            report.write_dot(emit_dot)
        if emit_json:
            report.to_json(emit_json)
        summary = {k: v for k, v in report.to_dict().items() if k not in ("vertices", "graph")}
        text = (f"{report.vertex_count} vertices {report.type_counts()}, {report.edge_count} edges, "
                f"{report.triangle_count} triangles" + (" (truncated)" if report.truncated else "")
                + f"\ntype-1 link of [I]: {', '.join(report.link_of_type(1))}")
        _emit(ctx, summary, text)
    _run(body)


@building.command("verify")
@click.argument("identity")
@click.option("-r", "r", default=None)
@click.option("--r1", default=None)
@click.option("--r2", default=None)
@click.option("-j", "j", type=int, default=None)
@click.pass_context
def building_verify(ctx, identity, r, r1, r2, j):
    """Check one identity, e.g. 'link-chain -r 2' or 'unipotent-words -j 3'."""
    def body():
        holds = verify_building_identity(identity, r=r, r1=r1, r2=r2, j=j)
        _emit(ctx, {"identity": identity, "holds": holds}, f"{identity}: {holds}")
        if not holds:
            sys.exit(1)
    _run(body)


@cli.command("fold")
@click.option("--alphabet", type=int, default=9, help="Rank of the ambient free group")
@click.option("--gens-file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="One word per line in 'l1 L2' syntax; defaults to the a_j")
@click.option("--member", multiple=True, help="Word to test for membership")
@click.option("--emit-graph", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def fold_command(ctx, alphabet, gens_file, member, emit_graph):
    """Fold a subgroup of a free group and report its rank."""
    def body():
        if gens_file:
            with open(gens_file) as f:
                words = read_words(f)
        else:
            words = [w for _, w in sorted(a_words_in_l().items())]
        graph = fold(words, alphabet)
        if emit_graph:
            graph.to_json(emit_graph)
        members = {text: graph.accepts(read_words([text])[0]) for text in member}
        data = {"rank": graph.rank(), "vertices": len(graph.vertices()), "edges": len(graph.edges()),
                "canonical_hash": graph.canonical_hash(), "members": members}
        lines = [f"rank {graph.rank()} ({len(graph.vertices())} vertices, {len(graph.edges())} edges)"]
        lines += [f"{text}: {'member' if ok else 'not a member'}" for text, ok in members.items()]
        _emit(ctx, data, "\n".join(lines))
    _run(body)


@cli.command("verify")
@click.argument("prefix", required=False)
@click.option("--export", "export_path", type=click.Path(dir_okay=False), default=None,
              help="Write the scorecard as .json, .csv or .yaml")
@click.pass_context
def verify(ctx, prefix, export_path):
    """Run every registered check whose id starts with PREFIX."""
    def body():
        card = run_scorecard(prefix, ctx.obj["settings"])
        if export_path:
            card.export(Path(export_path))
        _emit(ctx, card.to_dict(), card.format_table())
        sys.exit(0 if card.passed else 1)
    _run(body)


cli.add_command(verify, "verify-paper")


def main(level=logging.INFO):
    setup_logger(level=level)
    cli(prog_name="burau-forge")


def main_debug():
    main(level=logging.DEBUG)


if __name__ == '__main__':
    main()
