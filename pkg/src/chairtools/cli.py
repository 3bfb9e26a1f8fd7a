"""Command-line front door.

Exit codes: 0 ok, 1 validation/usage, 2 I/O, 3 network, so scripts can
branch on the failure class. All stdout output is deterministic for a
given corpus, flags and seed; anything time-dependent goes to stderr.
"""

from __future__ import annotations

import json
import socket
import sys
from dataclasses import replace
from pathlib import Path

import click

from . import analysis, clients, corpus
from .cloud import CloudConfig, place_words, render_svg
from .textpipe import default_stopwords, load_stopwords

_SOURCES = {
    "dblp": clients.DBLP,
    "semantic-scholar": clients.SEMANTIC_SCHOLAR,
}


def _load_stopword_set(path: str | None) -> frozenset[str]:
    return load_stopwords(path) if path else default_stopwords()


corpus_option = click.option(
    "--corpus",
    "corpus_dir",
    required=True,
    metavar="DIR",
    help="Corpus directory with conference.json, papers.json, reviewers.json.",
)
stopwords_option = click.option(
    "--stopwords", "stopword_path", default=None, metavar="FILE", help="Stopword list override."
)
title_boost_option = click.option(
    "--title-boost", default=1.0, show_default=True, help="Weight of title terms vs abstract."
)


@click.group()
def cli() -> None:
    """Decision support for programme committee chairs."""


@cli.command()
@corpus_option
def ingest(corpus_dir: str) -> None:
    """Validate the corpus and report its size."""
    conference = corpus.load_corpus(corpus_dir)
    click.echo(f"conference: {conference.name}")
    click.echo(f"papers: {len(conference.papers)}")
    click.echo(f"reviewers: {len(conference.reviewers)}")
    click.echo(f"assignments: {len(conference.assignments)}")
    for warning in corpus.corpus_warnings(conference):
        click.echo(f"warning: {warning}", err=True)


@cli.command()
@corpus_option
@stopwords_option
@title_boost_option
@click.option("--scope", default="submissions", show_default=True, metavar="SCOPE",
              help="submissions, pc, or reviewer:<id>.")
@click.option("--out", "out_path", required=True, metavar="FILE", help="SVG output path.")
@click.option("--max-words", type=int, default=None)
@click.option("--width", type=int, default=None)
@click.option("--height", type=int, default=None)
@click.option("--seed", type=int, default=None)
def cloud(
    corpus_dir: str,
    stopword_path: str | None,
    title_boost: float,
    scope: str,
    out_path: str,
    max_words: int | None,
    width: int | None,
    height: int | None,
    seed: int | None,
) -> None:
    """Render a word cloud for a scope to an SVG file."""
    conference = corpus.load_corpus(corpus_dir)
    stopwords = _load_stopword_set(stopword_path)
    if scope == "submissions":
        weights = analysis.submissions_weights(conference, stopwords, title_boost)
    elif scope == "pc":
        weights = analysis.pc_weights(conference, stopwords, title_boost)
    elif scope.startswith("reviewer:"):
        reviewer_id = scope.split(":", 1)[1]
        reviewer = conference.reviewer_by_id(reviewer_id)
        if reviewer is None:
            raise ValueError(f"unknown reviewer '{reviewer_id}'")
        weights = analysis.reviewer_weights(reviewer, stopwords, title_boost)
    else:
        raise ValueError(f"unknown scope '{scope}' (use submissions, pc, or reviewer:<id>)")
    overrides = {
        key: value
        for key, value in (
            ("max_words", max_words),
            ("width", width),
            ("height", height),
            ("seed", seed),
        )
        if value is not None
    }
    cfg = replace(CloudConfig(), **overrides)
    layout = place_words(weights, cfg)
    Path(out_path).write_text(render_svg(layout), encoding="utf-8")
    if not weights:
        click.echo(f"warning: no terms in scope '{scope}', wrote a blank cloud", err=True)
    if layout.skipped:
        click.echo(f"warning: {len(layout.skipped)} word(s) did not fit and were skipped",
                   err=True)
    click.echo(f"wrote {out_path} ({len(layout.placed)} words)")


@cli.command("gap-report")
@corpus_option
@stopwords_option
@title_boost_option
@click.option("--min-share", default=analysis.DEFAULT_MIN_SHARE, show_default=True,
              help="Smallest submission share a term needs to be reported.")
@click.option("--ratio", default=analysis.DEFAULT_RATIO_THRESHOLD, show_default=True,
              help="Flag terms whose PC/submission share ratio is below this.")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table",
              show_default=True)
def gap_report(
    corpus_dir: str,
    stopword_path: str | None,
    title_boost: float,
    min_share: float,
    ratio: float,
    fmt: str,
) -> None:
    """Compare submission topic demand against PC coverage."""
    conference = corpus.load_corpus(corpus_dir)
    stopwords = _load_stopword_set(stopword_path)
    sub = analysis.normalize(analysis.submissions_weights(conference, stopwords, title_boost))
    pc = analysis.normalize(analysis.pc_weights(conference, stopwords, title_boost))
    entries = analysis.coverage_gap_report(sub, pc, min_share, ratio)
    if fmt == "json":
        click.echo(json.dumps([analysis.gap_entry_to_json(e) for e in entries], indent=2))
        return
    click.echo(f"{'term':<24}|{'sub%':>8}|{'pc%':>8}|{'ratio':>8}|flag")
    for e in entries:
        flag = "GAP" if e.flagged else "-"
        click.echo(
            f"{e.term:<24}|{100 * e.sub_share:>7.2f} |{100 * e.pc_share:>7.2f} "
            f"|{e.ratio:>7.2f} |{flag}"
        )


@cli.command("fetch-pubs")
@corpus_option
@click.option("--reviewer", "reviewer_id", default=None, metavar="ID")
@click.option("--all", "fetch_all", is_flag=True, help="Hydrate every reviewer that has an id.")
@click.option("--source", type=click.Choice(sorted(_SOURCES)), required=True)
@click.option("--offline", is_flag=True, help="Serve from the response cache only.")
@click.option("--limit", default=100, show_default=True)
def fetch_pubs(
    corpus_dir: str,
    reviewer_id: str | None,
    fetch_all: bool,
    source: str,
    offline: bool,
    limit: int,
) -> None:
    """Fetch reviewers' publications from an indexing service."""
    if (reviewer_id is None) == (not fetch_all):
        raise click.UsageError("give exactly one of --reviewer or --all")
    conference = corpus.load_corpus(corpus_dir)
    provider = _SOURCES[source]
    mode = clients.OFFLINE if offline else clients.ONLINE
    client = clients.IndexingClient()

    def has_source_id(reviewer: corpus.Reviewer) -> bool:
        ids = reviewer.external_ids
        return (
            ids.dblp_query is not None
            if provider == clients.DBLP
            else ids.semantic_scholar_author_id is not None
        )

    if fetch_all:
        targets = list(conference.reviewers)
    else:
        reviewer = conference.reviewer_by_id(reviewer_id)
        if reviewer is None:
            raise ValueError(f"unknown reviewer '{reviewer_id}'")
        if not has_source_id(reviewer):
            raise clients.ConfigurationError(
                f"reviewer '{reviewer_id}' has no {source} id configured"
            )
        targets = [reviewer]

    updated = list(conference.reviewers)
    for reviewer in targets:
        if not has_source_id(reviewer):
            click.echo(f"{reviewer.id}: skipped (no {source} id)")
            continue
        hydrated = client.hydrate_reviewer(reviewer, providers=(provider,), limit=limit,
                                           mode=mode)
        updated[updated.index(reviewer)] = hydrated
        click.echo(f"{reviewer.id}: {len(hydrated.publications)} publications")
    conference = replace(conference, reviewers=tuple(updated))
    corpus.save_reviewers(conference, corpus_dir)


@cli.command()
@corpus_option
@stopwords_option
@title_boost_option
@click.option("--paper", "paper_id", required=True, metavar="ID")
@click.option("-k", default=10, show_default=True, help="How many suggestions to print.")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table",
              show_default=True)
def suggest(
    corpus_dir: str,
    stopword_path: str | None,
    title_boost: float,
    paper_id: str,
    k: int,
    fmt: str,
) -> None:
    """Rank reviewers for one paper by term-vector match."""
    conference = corpus.load_corpus(corpus_dir)
    stopwords = _load_stopword_set(stopword_path)
    try:
        ranked = analysis.suggest_reviewers(conference, paper_id, k, stopwords, title_boost)
    except KeyError:
        raise ValueError(f"unknown paper '{paper_id}'") from None
    assigned = {a.reviewer_id for a in conference.assignments if a.paper_id == paper_id}
    rows = [
        analysis.suggestion_to_json(s) | {"assigned": s.reviewer_id in assigned} for s in ranked
    ]
    if fmt == "json":
        click.echo(json.dumps(rows, indent=2))
        return
    click.echo(f"{'reviewer':<16}|{'score':>10}|assigned")
    for row in rows:
        mark = "yes" if row["assigned"] else "-"
        click.echo(f"{row['reviewerId']:<16}|{row['score']:>10.6f}|{mark}")


@cli.command()
@corpus_option
@stopwords_option
@title_boost_option
@click.option("--addr", default="127.0.0.1:8787", show_default=True, metavar="HOST:PORT")
def serve(corpus_dir: str, stopword_path: str | None, title_boost: float, addr: str) -> None:
    """Serve the HTTP API until interrupted."""
    import uvicorn

    from .service import AnalysisDefaults, create_app

    host, _, port_text = addr.rpartition(":")
    if not host or not port_text.isdigit():
        raise ValueError(f"--addr must look like HOST:PORT, got '{addr}'")
    defaults = AnalysisDefaults(title_boost=title_boost, stopword_path=stopword_path)
    app = create_app(corpus_dir, defaults=defaults)
    # Bind ourselves so an occupied port surfaces as a plain I/O error.
    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    sock.bind((host, int(port_text)))
    sock.listen(128)
    click.echo(f"serving on http://{host}:{port_text}", err=True)
    server = uvicorn.Server(uvicorn.Config(app, log_level="warning"))
    server.run(sockets=[sock])


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:  # --help and friends
        return exc.exit_code
    except click.UsageError as exc:
        exc.show()
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except (corpus.CorpusValidationError, corpus.CorpusParseError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except clients.ConfigurationError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except clients.ClientError as exc:
        click.echo(f"error: {exc}", err=True)
        return 3
    except corpus.CorpusIOError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except KeyboardInterrupt:
        return 0


if __name__ == "__main__":
    sys.exit(main())
