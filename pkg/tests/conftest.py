from __future__ import annotations

import json
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

# Filled by the acceptance tests; echoed after the run so each criterion
# shows up as a single PASS/FAIL line in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance summary")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

DEMO_CONFERENCE = {
    "name": "DemoConf 2026",
    "topics": ["blockchain", "compilers", "machine learning"],
}

DEMO_PAPERS = [
    {
        "id": "p1",
        "title": "Blockchain consensus protocols for energy trading",
        "abstract": "Blockchain ledgers coordinate distributed energy markets.",
        "topics": ["blockchain"],
        "authorNames": ["Ada Author"],
    },
    {
        "id": "p2",
        "title": "Blockchain smart contracts survey",
        "abstract": "",
        "topics": ["blockchain"],
        "authorNames": ["Bo Builder"],
    },
    {
        "id": "p3",
        "title": "Compiler optimization with machine learning",
        "abstract": "Learning guided compiler passes.",
        "topics": ["compilers"],
        "authorNames": ["Cleo Coder"],
    },
]

DEMO_REVIEWERS = [
    {
        "id": "r1",
        "name": "Rita Reviewer",
        "affiliation": "Example University",
        "externalIds": {"dblpQuery": "Rita Reviewer"},
        "publications": [
            {"id": "r1-a", "title": "Compiler optimization techniques", "abstract": ""},
            {
                "id": "r1-b",
                "title": "Machine learning for compiler passes",
                "abstract": "Learning guided optimization.",
            },
        ],
        "acceptedTopics": ["compilers"],
    },
    {
        "id": "r2",
        "name": "Sam Scholar",
        "externalIds": {"semanticScholarAuthorId": "1681232"},
        "publications": [],
        "acceptedTopics": ["machine learning"],
    },
    {
        "id": "r3",
        "name": "Tano Trento",
        "publications": [
            {"id": "r3-a", "title": "Deep learning accelerators", "abstract": ""}
        ],
        "acceptedTopics": ["machine learning"],
    },
]


def write_corpus(
    directory: Path,
    conference: dict = DEMO_CONFERENCE,
    papers: list | None = None,
    reviewers: list | None = None,
    assignments: list | None = None,
) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "conference.json").write_text(json.dumps(conference), encoding="utf-8")
    (directory / "papers.json").write_text(
        json.dumps(DEMO_PAPERS if papers is None else papers), encoding="utf-8"
    )
    (directory / "reviewers.json").write_text(
        json.dumps(DEMO_REVIEWERS if reviewers is None else reviewers), encoding="utf-8"
    )
    if assignments is not None:
        (directory / "assignments.json").write_text(json.dumps(assignments), encoding="utf-8")
    return directory


@pytest.fixture
def demo_corpus_dir(tmp_path: Path) -> Path:
    return write_corpus(tmp_path / "corpus", assignments=[])
