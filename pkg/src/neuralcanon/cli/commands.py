"""CLI commands for Neuralcanon."""

import functools
import logging
import re
import sys
import time
from pathlib import Path
from typing import Optional

import click

from ..core.config import NeuralCanonConfig, load_config
from ..core.errors import DomainError, MonomialParseError, NeuralCanonError
from ..core.models import MonomialIdeal, SfMonomial
from ..core.parser import monomial_from_factors, parse_ideal_text, scan_factors

logger = logging.getLogger(__name__)

EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_DIVERGENCE = 4

_SUB_PATTERN = re.compile(r"^\s*z(\d+)\s*=\s*(.*)$")


def reports_errors(func):
    """Turn library errors into a message on stderr and the matching exit status."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except MonomialParseError as e:
            click.echo(f"parse error: {e}", err=True)
            sys.exit(EXIT_PARSE)
        except (NeuralCanonError, ValueError) as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(EXIT_DOMAIN)
    return wrapper


def read_source(source: Optional[str], gens: tuple[str, ...]) -> str:
    """Input text from -g generators, a file, or stdin when source is '-'."""
    if gens:
        return "\n".join(gens)
    if source is None:
        raise click.UsageError("give an input file, '-' for stdin, or generators with -g")
    with click.open_file(source) as f:
        return f.read()


def load_ideal(source: Optional[str], gens: tuple[str, ...], n: Optional[int]) -> MonomialIdeal:
    return parse_ideal_text(read_source(source, gens), n)


def parse_monomial_args(texts: tuple[str, ...], structural: int, n: Optional[int]) -> list[SfMonomial]:
    """Parse g-monomials given on the command line into a common width.

    The width is n when given, otherwise the largest index seen but at least
    the number of structural indices.
    """
    scanned = [scan_factors(t, line=position) for position, t in enumerate(texts, start=1)]
    if n is None:
        n = max([structural, 1] + [f.index for fs in scanned for f in fs])
    return [monomial_from_factors(fs, n, position) for position, fs in enumerate(scanned, start=1)]


def emit_json(report) -> None:
    click.echo(report.model_dump_json(indent=2))


def wants_json(config: NeuralCanonConfig, as_json: bool) -> bool:
    return as_json or config.output.format == "json"


def configure_logging(verbose: int, level: str) -> None:
    if verbose >= 2:
        level = "DEBUG"
    elif verbose == 1:
        level = "INFO"
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


source_argument = click.argument('source', required=False, type=click.Path(allow_dash=True))
gen_option = click.option('--gen', '-g', 'gens', multiple=True, help='Generator, e.g. x1*y2 (repeatable)')
width_option = click.option('--n', 'n', type=int, help='Ambient width override')
json_option = click.option('--json', 'as_json', is_flag=True, help='Output as JSON')


@click.group()
@click.version_option()
@click.option('--verbose', '-v', count=True, help='Log INFO (-v) or DEBUG (-vv) to stderr')
@click.option('--config-dir', type=click.Path(file_okay=False, path_type=Path), help='Directory holding neuralcanon.yaml')
@click.pass_context
def cli(ctx: click.Context, verbose: int, config_dir: Optional[Path]):
    """Neuralcanon - canonical forms of polarized neural ideals."""
    try:
        config = load_config(config_dir)
    except NeuralCanonError as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(EXIT_DOMAIN)
    configure_logging(verbose, config.logging.level)
    ctx.obj = config


@cli.command()
@source_argument
@gen_option
@width_option
@click.option('--fast', is_flag=True, help='Shortcut recomposition (no decomposition)')
@click.option('--full', is_flag=True, help='Recompose through primary decomposition')
@click.option('--strategy', type=click.Choice(['fast', 'full', 'both']), help='Strategy (default from config)')
@click.option('--decomposition', type=click.Choice(['split', 'transversal']), help='Minimal prime strategy for --full')
@click.option('--almost', is_flag=True, help='Emit the almost canonical form instead')
@json_option
@click.pass_obj
@reports_errors
def canon(config: NeuralCanonConfig, source: Optional[str], gens: tuple[str, ...], n: Optional[int],
          fast: bool, full: bool, strategy: Optional[str], decomposition: Optional[str],
          almost: bool, as_json: bool):
    """Compute the canonical form of an ideal."""
    from ..engine.canonical import almost_canonical, canonical_fast, canonical_full
    from .formatter import CanonReport, canon_report, format_diff, format_ideal

    if fast and full:
        raise click.UsageError("--fast and --full are mutually exclusive")
    if fast:
        strategy = "fast"
    elif full:
        strategy = "full"
    strategy = strategy or config.engine.strategy
    decomposition = decomposition or config.engine.decomposition

    a = load_ideal(source, gens, n)

    if almost:
        result = almost_canonical(a)
        if wants_json(config, as_json):
            emit_json(CanonReport(
                n=a.n,
                input=[str(g) for g in a.gens],
                result=[str(g) for g in result.gens],
                canonical=a.generator_set == result.generator_set,
                strategy="almost",
            ))
        else:
            click.echo(format_ideal(result), nl=False)
        return

    if strategy == "both":
        by_fast = canonical_fast(a)
        by_full = canonical_full(a, decomposition)
        if not by_fast.canonical.same_generators(by_full.canonical):
            logger.warning("fast and full strategies disagree on %s", a)
            click.echo("strategies disagree:", err=True)
            click.echo(format_diff(by_fast.canonical, by_full.canonical), err=True, nl=False)
            sys.exit(EXIT_DIVERGENCE)
        result = by_full
        result.strategy = "both"
    elif strategy == "fast":
        result = canonical_fast(a)
    else:
        result = canonical_full(a, decomposition)

    if wants_json(config, as_json):
        emit_json(canon_report(a, result))
    else:
        click.echo(format_ideal(result.canonical), nl=False)


@cli.command()
@source_argument
@gen_option
@width_option
@json_option
@click.pass_obj
@reports_errors
def check(config: NeuralCanonConfig, source: Optional[str], gens: tuple[str, ...], n: Optional[int], as_json: bool):
    """Decide canonicity; exit 0 canonical, 1 not canonical, 2 hypotheses not met."""
    from ..canonicity.checker import is_canonical, shortcut_index_list
    from .formatter import check_report, format_check

    a = load_ideal(source, gens, n)
    verdict = is_canonical(a)
    report = check_report(a, verdict, shortcut_index_list(a))

    if wants_json(config, as_json):
        emit_json(report)
    else:
        click.echo(format_check(report), nl=False)

    if verdict.canonical:
        sys.exit(0)
    sys.exit(1 if verdict.hypotheses_met else 2)


@cli.command()
@source_argument
@gen_option
@width_option
@click.option('--strategy', type=click.Choice(['split', 'transversal']), help='Decomposition strategy (default from config)')
@json_option
@click.pass_obj
@reports_errors
def decompose(config: NeuralCanonConfig, source: Optional[str], gens: tuple[str, ...], n: Optional[int],
              strategy: Optional[str], as_json: bool):
    """List the minimal primes of an ideal."""
    from ..decomposition.primes import minimal_primes, sorted_primes
    from .formatter import decompose_report, format_primes

    strategy = strategy or config.engine.decomposition
    a = load_ideal(source, gens, n)
    primes = sorted_primes(minimal_primes(a, strategy))

    if wants_json(config, as_json):
        emit_json(decompose_report(a, primes, strategy))
    else:
        click.echo(format_primes(primes), nl=False)


@cli.command()
@source_argument
@gen_option
@width_option
@reports_errors
def polarize(source: Optional[str], gens: tuple[str, ...], n: Optional[int]):
    """Rewrite pseudomonomials such as x2*(1-x1) as x2*y1."""
    from ..core.monomial import depolarize, polarize as polarize_one
    from .formatter import format_ideal

    a = load_ideal(source, gens, n)
    # Round trip through the depolarized ring to reject x_i*(1-x_i)
    polarized = [polarize_one(depolarize(g)) for g in a.gens]
    click.echo(format_ideal(a.with_gens(polarized)), nl=False)


@cli.command()
@source_argument
@gen_option
@width_option
@reports_errors
def depolarize(source: Optional[str], gens: tuple[str, ...], n: Optional[int]):
    """Rewrite y_i as (1-x_i)."""
    from ..core.monomial import depolarize as depolarize_one
    from .formatter import format_generators

    a = load_ideal(source, gens, n)
    click.echo(f"n = {a.n}")
    click.echo(format_generators([depolarize_one(g) for g in a.gens]), nl=False)


@cli.command()
@source_argument
@gen_option
@width_option
@click.pass_obj
@reports_errors
def code(config: NeuralCanonConfig, source: Optional[str], gens: tuple[str, ...], n: Optional[int]):
    """List the codewords on which every generator vanishes."""
    from ..oracle.codes import code_of_ideal

    a = load_ideal(source, gens, n)
    c = code_of_ideal(a, config.oracle.max_n)
    if c.is_empty():
        click.echo("(empty code)", err=True)
        return
    click.echo(str(c))


@cli.command()
@source_argument
@gen_option
@width_option
@click.option('--code', 'is_code', is_flag=True, help='Input is a code file (one 0/1 word per line)')
@click.option('--indicators', is_flag=True, help='Emit the indicator generators of the non-codewords instead')
@json_option
@click.pass_obj
@reports_errors
def oracle(config: NeuralCanonConfig, source: Optional[str], gens: tuple[str, ...], n: Optional[int],
           is_code: bool, indicators: bool, as_json: bool):
    """Brute-force canonical form from the code of an ideal."""
    from ..oracle.codes import NeuralCode, code_of_ideal, ideal_of_code, oracle_canonical
    from .formatter import OracleReport, format_ideal

    max_n = config.oracle.max_n
    if is_code:
        c = NeuralCode.from_text(read_source(source, gens))
        if n is not None and n != c.n:
            raise DomainError(f"--n {n} does not match the code width {c.n}")
    else:
        c = code_of_ideal(load_ideal(source, gens, n), max_n)

    result = ideal_of_code(c, max_n) if indicators else oracle_canonical(c, max_n)

    if wants_json(config, as_json):
        emit_json(OracleReport(
            n=c.n,
            code=str(c).splitlines(),
            result=[str(g) for g in result.gens],
        ))
    else:
        click.echo(format_ideal(result), nl=False)


@cli.group()
def family():
    """Closed-form canonical forms of structured families."""
    pass


def _family_output(ideal: MonomialIdeal, canonical: MonomialIdeal, show_ideal: bool, cross_check: bool) -> None:
    from ..engine.canonical import canonical_full
    from .formatter import format_diff, format_ideal

    if show_ideal:
        click.echo(f"# ideal {ideal}")
    click.echo(format_ideal(canonical), nl=False)

    if cross_check:
        engine = canonical_full(ideal).canonical
        if not engine.same_generators(canonical):
            logger.warning("closed form disagrees with the engine on %s", ideal)
            click.echo("closed form and engine disagree:", err=True)
            click.echo(format_diff(canonical, engine), err=True, nl=False)
            sys.exit(EXIT_DIVERGENCE)


family_options = [
    click.option('--n', 'n', type=int, help='Ambient width override'),
    click.option('--show-ideal', is_flag=True, help='Print the constructed ideal first'),
    click.option('--check', 'cross_check', is_flag=True, help='Cross-check against the decomposition engine'),
]


def with_family_options(func):
    for option in reversed(family_options):
        func = option(func)
    return func


@family.command('chain')
@click.argument('k', type=int)
@click.argument('g', nargs=-1)
@with_family_options
@click.option('--almost', is_flag=True, help='Emit the unreduced closed form')
@reports_errors
def family_chain(k: int, g: tuple[str, ...], n: Optional[int], show_ideal: bool, cross_check: bool, almost: bool):
    """Chain (x1*g1, x2*y1*g2, ..., y_{k-1}*g_k); G defaults to 1 each."""
    from ..families.closed_forms import chain_almost_canonical, chain_canonical, chain_ideal

    gs = parse_monomial_args(g, k - 1, n) if g else [SfMonomial.one(n or max(k - 1, 1))] * k
    form = chain_almost_canonical(k, gs) if almost else chain_canonical(k, gs)
    _family_output(chain_ideal(k, gs), form, show_ideal, cross_check and not almost)


@family.command('cycle')
@click.argument('k', type=int)
@click.argument('g', nargs=-1)
@with_family_options
@reports_errors
def family_cycle(k: int, g: tuple[str, ...], n: Optional[int], show_ideal: bool, cross_check: bool):
    """Cycle (x1*y_k*g1, x2*y1*g2, ..., x_k*y_{k-1}*g_k); G defaults to 1 each."""
    from ..families.closed_forms import cycle_canonical, cycle_ideal

    gs = parse_monomial_args(g, k, n) if g else [SfMonomial.one(n or k)] * k
    _family_output(cycle_ideal(k, gs), cycle_canonical(k, gs), show_ideal, cross_check)


def _parse_blocks(text: str) -> tuple[tuple[int, ...], ...]:
    try:
        return tuple(
            tuple(int(i) for i in block.split(","))
            for block in text.split(";")
        )
    except ValueError:
        raise click.BadParameter(f"expected blocks like '1,2;3', got {text!r}")


@family.command('spread')
@click.argument('k', type=int)
@click.argument('gb', nargs=-1)
@click.option('--blocks', required=True, help="y-blocks partitioning 1..k, e.g. '1,2;3'")
@click.option('--g', 'g', default='1', help='Monomial attached to the x-generator')
@click.option('--flipped', is_flag=True, help='Exchange x and y on the structural indices')
@with_family_options
@reports_errors
def family_spread(k: int, gb: tuple[str, ...], blocks: str, g: str, flipped: bool,
                  n: Optional[int], show_ideal: bool, cross_check: bool):
    """Spread (x_1*...*x_k*g, y_B*g_B per block); GB defaults to 1 per block."""
    from ..families.closed_forms import SpreadShape, spread_canonical, spread_ideal

    shape = SpreadShape(k, _parse_blocks(blocks), flipped)
    texts = gb or ("1",) * len(shape.blocks)
    parsed = parse_monomial_args((g,) + tuple(texts), k, n)
    _family_output(
        spread_ideal(shape, parsed[0], parsed[1:]),
        spread_canonical(shape, parsed[0], parsed[1:]),
        show_ideal,
        cross_check,
    )


def _parse_assignments(texts: tuple[str, ...], option: str) -> dict[int, str]:
    out = {}
    for text in texts:
        match = _SUB_PATTERN.match(text)
        if not match:
            raise click.BadParameter(f"expected zK=<monomial>, got {text!r}", param_hint=option)
        out[int(match.group(1))] = match.group(2)
    return out


@cli.command()
@source_argument
@gen_option
@width_option
@click.option('--sub', 'subs', multiple=True, help='Image of a placeholder, e.g. z1=x2*x4 (repeatable)')
@click.option('--group', 'groups', multiple=True, help='Repeated images of a placeholder, e.g. z1=x2,x3 (repeatable)')
@reports_errors
def generic(source: Optional[str], gens: tuple[str, ...], n: Optional[int],
            subs: tuple[str, ...], groups: tuple[str, ...]):
    """Generic canonical form of an ideal over placeholders z1..zk.

    With --sub every placeholder is replaced and the concrete canonical form
    is printed; with --group the almost canonical form of the ideal with
    repeated placeholders is printed.
    """
    from ..families.generic import (
        Substitution,
        expand_repeats,
        generic_almost_canonical,
        generic_canonical,
        parse_generic_text,
        substitute,
    )
    from .formatter import format_generators, format_ideal

    if subs and groups:
        raise click.UsageError("--sub and --group are mutually exclusive")
    text = read_source(source, gens)

    assigned = _parse_assignments(subs or groups, "--sub" if subs else "--group")
    image_texts = [t for value in assigned.values() for t in value.split(",")]
    needed = max([f.index for t in image_texts for f in scan_factors(t)], default=1)

    ext = parse_generic_text(text, n, min_n=needed)
    if assigned and sorted(assigned) != list(range(1, ext.k + 1)):
        raise click.UsageError(f"give an image for each of z1..z{ext.k}")

    def images(j: int) -> list[SfMonomial]:
        return parse_monomial_args(tuple(assigned[j].split(",")), 0, ext.n)

    if groups:
        almost = generic_almost_canonical(ext)
        click.echo(format_ideal(expand_repeats(almost, [images(j) for j in range(1, ext.k + 1)])), nl=False)
        return

    canonical = generic_canonical(ext)
    if subs:
        sub = Substitution(tuple(images(j)[0] for j in range(1, ext.k + 1)))
        click.echo(format_ideal(substitute(canonical, sub)), nl=False)
        return

    click.echo(f"n = {ext.n}")
    click.echo(format_generators(list(canonical.gens)), nl=False)


@cli.command()
@click.option('--n', 'n', default=6, help='Ambient width')
@click.option('--gens', 'max_gens', default=5, help='Maximum generators per ideal')
@click.option('--count', default=200, help='Number of random ideals')
@click.option('--seed', default=0, help='Random seed')
@reports_errors
def bench(n: int, max_gens: int, count: int, seed: int):
    """Time both canonical-form strategies and both decomposition strategies."""
    import numpy as np

    from ..core.sampling import random_ideal
    from ..decomposition.primes import minimal_primes
    from ..engine.canonical import canonical_fast, canonical_full

    rng = np.random.default_rng(seed)
    ideals = [random_ideal(rng, n, max_gens) for _ in range(count)]

    timings: dict[str, float] = {}
    answers: dict[str, list] = {}
    runs = {
        "fast": lambda a: canonical_fast(a).canonical.generator_set,
        "full/split": lambda a: canonical_full(a, "split").canonical.generator_set,
        "full/transversal": lambda a: canonical_full(a, "transversal").canonical.generator_set,
        "primes/split": lambda a: minimal_primes(a, "split"),
        "primes/transversal": lambda a: minimal_primes(a, "transversal"),
    }
    for name, run in runs.items():
        start = time.perf_counter()
        answers[name] = [run(a) for a in ideals]
        timings[name] = time.perf_counter() - start

    mismatches = sum(
        1 for i in range(count)
        if not answers["fast"][i] == answers["full/split"][i] == answers["full/transversal"][i]
    )
    mismatches += sum(1 for i in range(count) if answers["primes/split"][i] != answers["primes/transversal"][i])

    click.echo(f"\n{'='*50}")
    click.echo(f"  NEURALCANON BENCH n={n} gens<={max_gens} count={count} seed={seed}")
    click.echo(f"{'='*50}\n")
    for name, seconds in timings.items():
        click.echo(f"  {name:<20} {seconds * 1000:10.1f} ms  ({seconds * 1e6 / count:8.1f} us/ideal)")
    click.echo(f"\n  Disagreements: {mismatches}")
    click.echo()

    if mismatches:
        sys.exit(EXIT_DIVERGENCE)
