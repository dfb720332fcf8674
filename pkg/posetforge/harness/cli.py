"""Command-line interface

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 ambiguous reconstruction.

.. code-block:: text

   posetforge catalog build --max-edges 5 --out catalog5.g6
   posetforge poset build --kind q --graph 'n=4; 0-1,1-2,2-3' --abstract
   posetforge poset iso a.poset b.poset
   posetforge collisions --kind q --max-edges 4 --require-different omega
   posetforge reconstruct --target omega --input q.poset --catalog catalog5.g6
   posetforge verify --suite main-theorem --max-edges 6 --jobs 4
"""
import functools
import logging
import sys

import click

from posetforge.base import settings
from posetforge.base.errors import (PosetForgeError, PosetValidationError,
                                    ReconstructionError)
from posetforge.base.poset import KIND_Q
from posetforge.graphs.catalog import Catalog, enumerate_catalog
from posetforge.graphs.formats import format_graph6, parse_graph_input
from posetforge.harness.cache import PosetCache
from posetforge.harness.collisions import collision_classes
from posetforge.harness.suites import SUITES, run_suite
from posetforge.posets.builders import build_poset, normalize_kind
from posetforge.posets.certificates import poset_isomorphic
from posetforge.posets.io import format_poset, parse_poset, read_poset
from posetforge.reconstruct.reconstruction import reconstruct as run_reconstruct

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_AMBIGUOUS = 3

KIND_CHOICE = click.Choice(['q', 'p', 'omega'])


def handle_errors(fn):
    """Turn library errors into messages and exit codes."""
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ReconstructionError as e:
            click.echo("error: %s" % e, err=True)
            for g in e.witnesses:
                click.echo("witness %s" % format_graph6(g), err=True)
            sys.exit(EXIT_FAILURE)
        except (PosetForgeError, IOError, OSError) as e:
            click.echo("error: %s" % e, err=True)
            sys.exit(EXIT_USAGE)
    return wrapper


def _emit(text, out):
    if out is None:
        click.echo(text, nl=False)
    else:
        with open(out, 'w') as f:
            f.write(text)
        LOGGER.info("wrote %s", out)


def _catalog(ctx, max_edges=None, path=None):
    """Load the catalog at path, or enumerate one up to max_edges."""
    kwargs = {'cache': ctx.obj['cache'], 'n_jobs': ctx.obj['jobs']}
    if path is not None:
        return Catalog.load(path, **kwargs)
    return enumerate_catalog(max_edges, **kwargs)


@click.group()
@click.option('-v', '--verbose', is_flag=True, help="Log at DEBUG level.")
@click.option('--cache/--no-cache', default=settings.CACHE_ENABLED,
              help="Keep built posets under POSETFORGE_CACHE.")
@click.option('--jobs', default=settings.N_JOBS, type=int,
              help="Worker count for catalog-wide sweeps.")
@click.pass_context
def cli(ctx, verbose, cache, jobs):
    """Edge-subgraph posets, bond lattices and their reconstruction."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format='%(levelname)s %(name)s: %(message)s')
    ctx.obj = {'cache': PosetCache() if cache else None, 'jobs': jobs,
               'verbose': verbose}


@cli.group()
def catalog():
    """Enumerate graphs without isolated vertices."""


@catalog.command('build')
@click.option('--max-edges', required=True, type=int)
@click.option('--out', required=True, type=click.Path(dir_okay=False))
@click.pass_context
@handle_errors
def catalog_build(ctx, max_edges, out):
    """Write every graph with 1..MAX_EDGES edges as graph6, one per line."""
    result = _catalog(ctx, max_edges=max_edges)
    result.save(out)
    for m, count in enumerate(result.counts_by_level(), 1):
        click.echo("edges=%d graphs=%d" % (m, count))
    click.echo("total=%d" % len(result))


@cli.group()
def poset():
    """Build and compare weighted posets."""


@poset.command('build')
@click.option('--kind', required=True, type=KIND_CHOICE)
@click.option('--graph', 'graph_text', required=True,
              help="graph6 string or edge list 'n=<v>; u-v,...'.")
@click.option('--abstract', is_flag=True, help="Drop graph labels.")
@click.option('--out', type=click.Path(dir_okay=False))
@handle_errors
def poset_build(kind, graph_text, abstract, out):
    """Build Q(G), P(G) or Omega(G) and write it in the poset file format."""
    graph = parse_graph_input(graph_text)
    result = build_poset(graph, normalize_kind(kind))
    _emit(format_poset(result, abstract=abstract), out)


@poset.command('iso')
@click.argument('file_a', type=click.Path(exists=True, dir_okay=False))
@click.argument('file_b', type=click.Path(exists=True, dir_okay=False))
@handle_errors
def poset_iso(file_a, file_b):
    """Decide whether two poset files hold isomorphic weighted posets."""
    if poset_isomorphic(read_poset(file_a), read_poset(file_b)):
        click.echo("isomorphic")
    else:
        click.echo("not isomorphic")
        sys.exit(EXIT_FAILURE)


@cli.command()
@click.option('--kind', required=True, type=KIND_CHOICE)
@click.option('--max-edges', required=True, type=int)
@click.option('--require-different', type=click.Choice(['q', 'p', 'omega']))
@click.option('--catalog', 'catalog_path',
              type=click.Path(exists=True, dir_okay=False))
@click.pass_context
@handle_errors
def collisions(ctx, kind, max_edges, require_different, catalog_path):
    """List catalog graphs sharing the abstract poset of a kind."""
    graphs = _catalog(ctx, max_edges=max_edges, path=catalog_path)
    classes = collision_classes(graphs, kind, require_different)
    for members in classes:
        click.echo("class %s" % ' '.join(format_graph6(g) for g in members))
    click.echo("classes=%d" % len(classes))


@cli.command()
@click.option('--target', required=True, type=click.Choice(['omega', 'p']))
@click.option('--input', 'input_path', required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Abstract Q-poset file.")
@click.option('--catalog', 'catalog_path',
              type=click.Path(exists=True, dir_okay=False),
              help="Catalog file; enumerated up to the top rank if omitted.")
@click.option('--out', type=click.Path(dir_okay=False))
@click.pass_context
@handle_errors
def reconstruct(ctx, target, input_path, catalog_path, out):
    """Reconstruct Omega or P from an abstract Q-poset."""
    with open(input_path) as f:
        abstract_q, _ = parse_poset(f.read())
    if abstract_q.kind != KIND_Q:
        raise PosetValidationError("expected a Q poset, got %s"
                                   % abstract_q.kind)
    abstract_q = abstract_q.abstract()
    top_rank = int(abstract_q.ranks[abstract_q.top])
    graphs = _catalog(ctx, max_edges=top_rank, path=catalog_path)
    outcome = run_reconstruct(target, abstract_q, graphs)
    _emit(outcome.format(), out)
    if not outcome.succeeded:
        sys.exit(EXIT_AMBIGUOUS)


@cli.command()
@click.option('--suite', required=True, type=click.Choice(sorted(SUITES)))
@click.option('--max-edges', type=int, default=settings.DEFAULT_VERIFY_BOUND,
              show_default=True)
@click.option('--extended', is_flag=True,
              help="Verify at bound %d." % settings.EXTENDED_VERIFY_BOUND)
@click.option('--jobs', type=int,
              help="Worker count, overriding the group option.")
@click.option('--verbose', is_flag=True, help="List passing checks too.")
@click.option('--catalog', 'catalog_path',
              type=click.Path(exists=True, dir_okay=False))
@click.option('--out', type=click.Path(dir_okay=False))
@click.pass_context
@handle_errors
def verify(ctx, suite, max_edges, extended, jobs, verbose, catalog_path,
           out):
    """Run a verification suite; exit 1 if any check fails."""
    if extended:
        max_edges = settings.EXTENDED_VERIFY_BOUND
    if jobs is not None:
        ctx.obj['jobs'] = jobs
    graphs = _catalog(ctx, max_edges=max_edges, path=catalog_path)
    report = run_suite(suite, graphs, n_jobs=ctx.obj['jobs'])
    _emit(report.format(verbose=verbose or ctx.obj['verbose']), out)
    if not report.ok:
        sys.exit(EXIT_FAILURE)


def main():
    cli(prog_name='posetforge')


if __name__ == '__main__':
    main()
