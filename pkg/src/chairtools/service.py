"""HTTP facade over the corpus, clouds, gap report and suggestions.

Read endpoints are pure over the in-memory conference snapshot; clouds are
laid out server-side per request, so clients never reimplement layout.
Mutations are funneled through a single lock and persisted before the
snapshot is swapped, keeping disk and memory in step.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, replace
from pathlib import Path

from fastapi import FastAPI, Query, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import analysis, corpus
from .cloud import CloudConfig, place_words, render_svg
from .textpipe import default_stopwords, load_stopwords


@dataclass(frozen=True)
class AnalysisDefaults:
    min_share: float = analysis.DEFAULT_MIN_SHARE
    ratio_threshold: float = analysis.DEFAULT_RATIO_THRESHOLD
    title_boost: float = 1.0
    stopword_path: str | None = None


class ServerState:
    """Current conference snapshot plus the single-writer mutation lock."""

    def __init__(
        self,
        conference: corpus.Conference,
        corpus_dir: Path,
        cloud_defaults: CloudConfig,
        defaults: AnalysisDefaults,
        stopwords: frozenset[str],
    ):
        self.conference = conference
        self.corpus_dir = corpus_dir
        self.cloud_defaults = cloud_defaults
        self.defaults = defaults
        self.stopwords = stopwords
        self.write_lock = threading.Lock()


class AssignmentBody(BaseModel):
    paperId: str
    reviewerId: str
    status: str = "proposed"
    origin: str = "manual"


def _error(status: int, error: str, detail: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": error, "detail": detail})


def create_app(
    corpus_dir: str | Path,
    cloud_defaults: CloudConfig | None = None,
    defaults: AnalysisDefaults | None = None,
    cors_origins: tuple[str, ...] = ("*",),
) -> FastAPI:
    corpus_dir = Path(corpus_dir)
    conference = corpus.load_corpus(corpus_dir)
    defaults = defaults or AnalysisDefaults()
    stopwords = (
        load_stopwords(defaults.stopword_path)
        if defaults.stopword_path
        else default_stopwords()
    )
    state = ServerState(
        conference=conference,
        corpus_dir=corpus_dir,
        cloud_defaults=cloud_defaults or CloudConfig(),
        defaults=defaults,
        stopwords=stopwords,
    )

    app = FastAPI(title="chairtools", docs_url=None, redoc_url=None)
    app.state.ctx = state
    if cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(cors_origins),
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(RequestValidationError)
    async def _on_validation_error(request: Request, exc: RequestValidationError):
        return _error(400, "bad_request", str(exc.errors()))

    @app.exception_handler(ValueError)
    async def _on_value_error(request: Request, exc: ValueError):
        return _error(400, "bad_request", str(exc))

    def _cloud_config(
        max_words: int | None, width: int | None, height: int | None, seed: int | None
    ) -> CloudConfig:
        overrides = {}
        if max_words is not None:
            overrides["max_words"] = max_words
        if width is not None:
            overrides["width"] = width
        if height is not None:
            overrides["height"] = height
        if seed is not None:
            overrides["seed"] = seed
        return replace(state.cloud_defaults, **overrides)

    def _svg(weights: dict[str, float], cfg: CloudConfig) -> Response:
        svg = render_svg(place_words(weights, cfg))
        return Response(content=svg, media_type="image/svg+xml")

    @app.get("/api/papers")
    def get_papers():
        return [corpus.paper_to_json(p) for p in state.conference.papers]

    @app.get("/api/reviewers")
    def get_reviewers():
        return [corpus.reviewer_to_json(r) for r in state.conference.reviewers]

    @app.get("/api/assignments")
    def get_assignments():
        return [corpus.assignment_to_json(a) for a in state.conference.assignments]

    @app.get("/api/clouds/submissions.svg")
    def cloud_submissions(
        max_words: int | None = Query(None, alias="maxWords"),
        width: int | None = None,
        height: int | None = None,
        seed: int | None = None,
    ):
        cfg = _cloud_config(max_words, width, height, seed)
        weights = analysis.submissions_weights(
            state.conference, state.stopwords, state.defaults.title_boost
        )
        return _svg(weights, cfg)

    @app.get("/api/clouds/pc.svg")
    def cloud_pc(
        max_words: int | None = Query(None, alias="maxWords"),
        width: int | None = None,
        height: int | None = None,
        seed: int | None = None,
    ):
        cfg = _cloud_config(max_words, width, height, seed)
        weights = analysis.pc_weights(
            state.conference, state.stopwords, state.defaults.title_boost
        )
        return _svg(weights, cfg)

    @app.get("/api/clouds/reviewer/{reviewer_id}.svg")
    def cloud_reviewer(
        reviewer_id: str,
        max_words: int | None = Query(None, alias="maxWords"),
        width: int | None = None,
        height: int | None = None,
        seed: int | None = None,
    ):
        reviewer = state.conference.reviewer_by_id(reviewer_id)
        if reviewer is None:
            return _error(404, "not_found", f"unknown reviewer '{reviewer_id}'")
        cfg = _cloud_config(max_words, width, height, seed)
        weights = analysis.reviewer_weights(
            reviewer, state.stopwords, state.defaults.title_boost
        )
        return _svg(weights, cfg)

    @app.get("/api/gap-report")
    def gap_report(
        min_share: float | None = Query(None, alias="minShare"),
        ratio: float | None = None,
    ):
        sub = analysis.normalize(
            analysis.submissions_weights(
                state.conference, state.stopwords, state.defaults.title_boost
            )
        )
        pc = analysis.normalize(
            analysis.pc_weights(state.conference, state.stopwords, state.defaults.title_boost)
        )
        entries = analysis.coverage_gap_report(
            sub,
            pc,
            min_share if min_share is not None else state.defaults.min_share,
            ratio if ratio is not None else state.defaults.ratio_threshold,
        )
        return [analysis.gap_entry_to_json(e) for e in entries]

    @app.get("/api/papers/{paper_id}/suggestions")
    def suggestions(paper_id: str, k: int = 10):
        try:
            ranked = analysis.suggest_reviewers(
                state.conference, paper_id, k, state.stopwords, state.defaults.title_boost
            )
        except KeyError:
            return _error(404, "not_found", f"unknown paper '{paper_id}'")
        assigned = {
            a.reviewer_id for a in state.conference.assignments if a.paper_id == paper_id
        }
        return [
            analysis.suggestion_to_json(s) | {"assigned": s.reviewer_id in assigned}
            for s in ranked
        ]

    @app.post("/api/assignments")
    def post_assignment(body: AssignmentBody):
        assignment = corpus.Assignment(
            paper_id=body.paperId,
            reviewer_id=body.reviewerId,
            status=body.status,
            origin=body.origin,
        )
        with state.write_lock:
            snapshot = state.conference
            try:
                updated = corpus.upsert_assignment(snapshot, assignment)
            except corpus.CorpusValidationError as exc:
                return _error(422, "validation", str(exc))
            try:
                corpus.save_assignments(updated, state.corpus_dir)
            except corpus.CorpusError as exc:
                return _error(500, "persistence", str(exc))
            state.conference = updated
        return corpus.assignment_to_json(assignment)

    @app.delete("/api/assignments/{paper_id}/{reviewer_id}")
    def delete_assignment(paper_id: str, reviewer_id: str):
        with state.write_lock:
            snapshot = state.conference
            updated, found = corpus.remove_assignment(snapshot, paper_id, reviewer_id)
            if not found:
                return _error(
                    404, "not_found", f"no assignment ({paper_id}, {reviewer_id})"
                )
            try:
                corpus.save_assignments(updated, state.corpus_dir)
            except corpus.CorpusError as exc:
                return _error(500, "persistence", str(exc))
            state.conference = updated
        return {"removed": {"paperId": paper_id, "reviewerId": reviewer_id}}

    return app
