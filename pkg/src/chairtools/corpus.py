"""Conference corpus: papers, reviewers, topics and assignment state.

The corpus lives in a directory of plain JSON files (conference.json,
papers.json, reviewers.json, assignments.json). Loading validates
everything up front; a Conference is an immutable snapshot and mutations
return new values. Writes go through temp-file + rename so a crash never
leaves a half-written file behind.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field, replace
from pathlib import Path

from .textpipe import RawDocument

ASSIGNMENT_STATUSES = ("proposed", "confirmed", "declined")
ASSIGNMENT_ORIGINS = ("manual", "suggested")


class CorpusError(Exception):
    """Base class for corpus load/save failures."""


class CorpusIOError(CorpusError):
    """Missing or unreadable/unwritable corpus file."""


class CorpusParseError(CorpusError):
    """Malformed JSON; message carries file and location."""


class CorpusValidationError(CorpusError):
    """Structurally valid JSON that violates a corpus invariant."""


@dataclass(frozen=True)
class Paper:
    id: str
    title: str
    abstract: str = ""
    topics: tuple[str, ...] = ()
    author_names: tuple[str, ...] = ()


@dataclass(frozen=True)
class ExternalIds:
    dblp_query: str | None = None
    semantic_scholar_author_id: str | None = None


@dataclass(frozen=True)
class Reviewer:
    id: str
    name: str
    affiliation: str | None = None
    external_ids: ExternalIds = field(default_factory=ExternalIds)
    publications: tuple[RawDocument, ...] = ()
    accepted_topics: tuple[str, ...] = ()


@dataclass(frozen=True)
class Assignment:
    paper_id: str
    reviewer_id: str
    status: str = "proposed"
    origin: str = "manual"


@dataclass(frozen=True)
class Conference:
    name: str
    topics: tuple[str, ...] = ()
    papers: tuple[Paper, ...] = ()
    reviewers: tuple[Reviewer, ...] = ()
    assignments: tuple[Assignment, ...] = ()

    def paper_by_id(self, paper_id: str) -> Paper | None:
        return next((p for p in self.papers if p.id == paper_id), None)

    def reviewer_by_id(self, reviewer_id: str) -> Reviewer | None:
        return next((r for r in self.reviewers if r.id == reviewer_id), None)


def _read_json(path: Path):
    if not path.exists():
        raise CorpusIOError(f"missing corpus file: {path}")
    try:
        body = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CorpusIOError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(body)
    except json.JSONDecodeError as exc:
        raise CorpusParseError(
            f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise CorpusValidationError(message)


def _strings(raw, label: str) -> tuple[str, ...]:
    _require(isinstance(raw, list), f"{label} must be a list")
    _require(all(isinstance(x, str) for x in raw), f"{label} entries must be strings")
    return tuple(raw)


def _paper_from_json(raw: dict, source_file: str) -> Paper:
    _require(isinstance(raw, dict), f"{source_file}: paper entries must be objects")
    pid = raw.get("id")
    _require(isinstance(pid, str) and pid != "", f"{source_file}: paper id missing or empty")
    title = raw.get("title")
    _require(
        isinstance(title, str) and title.strip() != "",
        f"{source_file}: paper '{pid}' has an empty title",
    )
    return Paper(
        id=pid,
        title=title,
        abstract=raw.get("abstract") or "",
        topics=_strings(raw.get("topics", []), f"{source_file}: paper '{pid}' topics"),
        author_names=_strings(
            raw.get("authorNames", []), f"{source_file}: paper '{pid}' authorNames"
        ),
    )


def _reviewer_from_json(raw: dict, source_file: str) -> Reviewer:
    _require(isinstance(raw, dict), f"{source_file}: reviewer entries must be objects")
    rid = raw.get("id")
    _require(isinstance(rid, str) and rid != "", f"{source_file}: reviewer id missing or empty")
    name = raw.get("name")
    _require(
        isinstance(name, str) and name.strip() != "",
        f"{source_file}: reviewer '{rid}' has an empty name",
    )
    ids_raw = raw.get("externalIds") or {}
    _require(
        isinstance(ids_raw, dict), f"{source_file}: reviewer '{rid}' externalIds must be an object"
    )
    pubs = []
    for i, pub in enumerate(raw.get("publications", [])):
        _require(
            isinstance(pub, dict) and isinstance(pub.get("title"), str) and pub["title"] != "",
            f"{source_file}: reviewer '{rid}' publication #{i} needs a nonempty title",
        )
        pubs.append(
            RawDocument(
                id=pub.get("id") or f"{rid}-pub-{i}",
                title=pub["title"],
                abstract=pub.get("abstract") or "",
                source="publication",
            )
        )
    return Reviewer(
        id=rid,
        name=name,
        affiliation=raw.get("affiliation"),
        external_ids=ExternalIds(
            dblp_query=ids_raw.get("dblpQuery"),
            semantic_scholar_author_id=ids_raw.get("semanticScholarAuthorId"),
        ),
        publications=tuple(pubs),
        accepted_topics=_strings(
            raw.get("acceptedTopics", []), f"{source_file}: reviewer '{rid}' acceptedTopics"
        ),
    )


def _assignment_from_json(raw: dict, source_file: str) -> Assignment:
    _require(isinstance(raw, dict), f"{source_file}: assignment entries must be objects")
    pid, rid = raw.get("paperId"), raw.get("reviewerId")
    _require(
        isinstance(pid, str) and pid != "" and isinstance(rid, str) and rid != "",
        f"{source_file}: assignment needs nonempty paperId and reviewerId",
    )
    status = raw.get("status", "proposed")
    origin = raw.get("origin", "manual")
    _require(
        status in ASSIGNMENT_STATUSES,
        f"{source_file}: assignment ({pid}, {rid}) has unknown status '{status}'",
    )
    _require(
        origin in ASSIGNMENT_ORIGINS,
        f"{source_file}: assignment ({pid}, {rid}) has unknown origin '{origin}'",
    )
    return Assignment(paper_id=pid, reviewer_id=rid, status=status, origin=origin)


def validate(conference: Conference) -> None:
    """Raise CorpusValidationError on any broken referential invariant."""
    seen_topics = set()
    for topic in conference.topics:
        _require(topic not in seen_topics, f"duplicate topic '{topic}'")
        seen_topics.add(topic)
    paper_ids = set()
    for paper in conference.papers:
        _require(paper.id not in paper_ids, f"duplicate paper id '{paper.id}'")
        paper_ids.add(paper.id)
    reviewer_ids = set()
    for reviewer in conference.reviewers:
        _require(reviewer.id not in reviewer_ids, f"duplicate reviewer id '{reviewer.id}'")
        reviewer_ids.add(reviewer.id)
        pub_ids = set()
        for pub in reviewer.publications:
            _require(
                pub.id not in pub_ids,
                f"reviewer '{reviewer.id}' has duplicate publication id '{pub.id}'",
            )
            pub_ids.add(pub.id)
    seen_pairs = set()
    for a in conference.assignments:
        pair = (a.paper_id, a.reviewer_id)
        _require(pair not in seen_pairs, f"duplicate assignment ({a.paper_id}, {a.reviewer_id})")
        seen_pairs.add(pair)
        _require(
            a.paper_id in paper_ids, f"assignment references unknown paper '{a.paper_id}'"
        )
        _require(
            a.reviewer_id in reviewer_ids,
            f"assignment references unknown reviewer '{a.reviewer_id}'",
        )


def corpus_warnings(conference: Conference) -> list[str]:
    """Non-fatal oddities: off-list paper topics, author/reviewer name overlap."""
    warnings = []
    known = set(conference.topics)
    for paper in conference.papers:
        for topic in paper.topics:
            if topic not in known:
                warnings.append(
                    f"paper '{paper.id}' uses topic '{topic}' not in the conference topic list"
                )
    reviewer_names = {r.name.strip().lower(): r.id for r in conference.reviewers}
    for paper in conference.papers:
        for author in paper.author_names:
            rid = reviewer_names.get(author.strip().lower())
            if rid is not None:
                warnings.append(
                    f"author '{author}' of paper '{paper.id}' matches reviewer '{rid}' by name"
                )
    return warnings


def load_corpus(directory: str | Path) -> Conference:
    """Load and validate a corpus directory; assignments.json is optional."""
    directory = Path(directory)
    if not directory.is_dir():
        raise CorpusIOError(f"corpus directory not found: {directory}")

    conf_raw = _read_json(directory / "conference.json")
    _require(isinstance(conf_raw, dict), "conference.json must be an object")
    name = conf_raw.get("name")
    _require(isinstance(name, str) and name != "", "conference.json: name missing or empty")
    topics = _strings(conf_raw.get("topics", []), "conference.json: topics")

    papers_raw = _read_json(directory / "papers.json")
    _require(isinstance(papers_raw, list), "papers.json must be a list")
    papers = tuple(_paper_from_json(p, "papers.json") for p in papers_raw)

    reviewers_raw = _read_json(directory / "reviewers.json")
    _require(isinstance(reviewers_raw, list), "reviewers.json must be a list")
    reviewers = tuple(_reviewer_from_json(r, "reviewers.json") for r in reviewers_raw)

    assignments_path = directory / "assignments.json"
    assignments: tuple[Assignment, ...] = ()
    if assignments_path.exists():
        assignments_raw = _read_json(assignments_path)
        _require(isinstance(assignments_raw, list), "assignments.json must be a list")
        assignments = tuple(
            _assignment_from_json(a, "assignments.json") for a in assignments_raw
        )

    conference = Conference(
        name=name, topics=topics, papers=papers, reviewers=reviewers, assignments=assignments
    )
    validate(conference)
    return conference


def paper_to_json(paper: Paper) -> dict:
    return {
        "id": paper.id,
        "title": paper.title,
        "abstract": paper.abstract,
        "topics": list(paper.topics),
        "authorNames": list(paper.author_names),
    }


def reviewer_to_json(reviewer: Reviewer) -> dict:
    out: dict = {"id": reviewer.id, "name": reviewer.name}
    if reviewer.affiliation is not None:
        out["affiliation"] = reviewer.affiliation
    ids = {}
    if reviewer.external_ids.dblp_query is not None:
        ids["dblpQuery"] = reviewer.external_ids.dblp_query
    if reviewer.external_ids.semantic_scholar_author_id is not None:
        ids["semanticScholarAuthorId"] = reviewer.external_ids.semantic_scholar_author_id
    if ids:
        out["externalIds"] = ids
    out["publications"] = [
        {"id": p.id, "title": p.title, "abstract": p.abstract} for p in reviewer.publications
    ]
    out["acceptedTopics"] = list(reviewer.accepted_topics)
    return out


def assignment_to_json(assignment: Assignment) -> dict:
    return {
        "paperId": assignment.paper_id,
        "reviewerId": assignment.reviewer_id,
        "status": assignment.status,
        "origin": assignment.origin,
    }


def _write_json_atomic(path: Path, payload) -> None:
    """Write via a temp file in the same directory, then rename over target."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, ensure_ascii=False, indent=2)
            handle.write("\n")
        os.replace(tmp_name, path)
    except OSError as exc:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise CorpusIOError(f"cannot write {path}: {exc}") from exc


def save_assignments(conference: Conference, directory: str | Path) -> None:
    """Atomically rewrite assignments.json from the conference snapshot."""
    path = Path(directory) / "assignments.json"
    _write_json_atomic(path, [assignment_to_json(a) for a in conference.assignments])


def save_reviewers(conference: Conference, directory: str | Path) -> None:
    """Atomically rewrite reviewers.json (used after publication hydration)."""
    path = Path(directory) / "reviewers.json"
    _write_json_atomic(path, [reviewer_to_json(r) for r in conference.reviewers])


def upsert_assignment(conference: Conference, assignment: Assignment) -> Conference:
    """Insert or replace the (paper, reviewer) assignment; returns a new snapshot."""
    if conference.paper_by_id(assignment.paper_id) is None:
        raise CorpusValidationError(
            f"assignment references unknown paper '{assignment.paper_id}'"
        )
    if conference.reviewer_by_id(assignment.reviewer_id) is None:
        raise CorpusValidationError(
            f"assignment references unknown reviewer '{assignment.reviewer_id}'"
        )
    if assignment.status not in ASSIGNMENT_STATUSES:
        raise CorpusValidationError(f"unknown assignment status '{assignment.status}'")
    if assignment.origin not in ASSIGNMENT_ORIGINS:
        raise CorpusValidationError(f"unknown assignment origin '{assignment.origin}'")
    kept = [
        a
        for a in conference.assignments
        if (a.paper_id, a.reviewer_id) != (assignment.paper_id, assignment.reviewer_id)
    ]
    kept.append(assignment)
    return replace(conference, assignments=tuple(kept))


def remove_assignment(
    conference: Conference, paper_id: str, reviewer_id: str
) -> tuple[Conference, bool]:
    """Drop the (paper, reviewer) pair; second value is False when absent."""
    kept = tuple(
        a
        for a in conference.assignments
        if (a.paper_id, a.reviewer_id) != (paper_id, reviewer_id)
    )
    found = len(kept) != len(conference.assignments)
    if not found:
        return conference, False
    return replace(conference, assignments=kept), True
