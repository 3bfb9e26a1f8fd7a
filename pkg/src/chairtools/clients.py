"""Clients for the DBLP and Semantic Scholar publication indexes.

Every response is cached on disk as one JSON file keyed by the request
URL's digest, so a warmed cache supports a strict offline mode that never
touches the network. The HTTP transport is injected, which keeps the test
suite fully offline against recorded fixtures. Online requests are
throttled to one per second per provider and 429s are retried with
exponential backoff.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import threading
import time
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Iterable, Protocol
from urllib.parse import quote, quote_plus

from .corpus import Reviewer
from .textpipe import RawDocument

ONLINE = "online"
OFFLINE = "offline"

CACHE_DIR_ENV = "CHAIRTOOLS_CACHE_DIR"

DBLP = "dblp"
SEMANTIC_SCHOLAR = "semanticScholar"

# 429 handling: attempts total, sleeping base * factor**n between tries.
RETRY_ATTEMPTS = 4
RETRY_BASE_SECONDS = 1.0
RETRY_FACTOR = 2.0


class ClientError(Exception):
    """Base class for indexing-client failures."""


class CacheMissError(ClientError):
    """Offline mode asked for a request that was never cached."""


class RateLimitedError(ClientError):
    """Provider kept answering 429 through every retry."""


class PayloadError(ClientError):
    """Provider payload could not be parsed."""


class ConfigurationError(ClientError):
    """Reviewer lacks the external id needed for the requested provider."""


class ProviderError(ClientError):
    """Provider answered with an unexpected HTTP status."""

    def __init__(self, message: str, status: int | None = None):
        super().__init__(message)
        self.status = status


class NotFoundError(ProviderError):
    """Provider does not know the requested entity (HTTP 404)."""


@dataclass(frozen=True)
class TransportResponse:
    status: int
    body: str


class Transport(Protocol):
    def get(self, url: str) -> TransportResponse: ...


class RequestsTransport:
    """Default transport backed by the requests library."""

    def __init__(self, timeout: float = 30.0):
        self.timeout = timeout

    def get(self, url: str) -> TransportResponse:
        import requests

        try:
            resp = requests.get(url, timeout=self.timeout)
        except requests.RequestException as exc:
            raise ProviderError(f"request failed: {exc}") from exc
        return TransportResponse(status=resp.status_code, body=resp.text)


@dataclass(frozen=True)
class FetchResult:
    documents: tuple[RawDocument, ...]
    provider: str
    from_cache: bool
    retrieved_at: str  # ISO 8601 UTC


def default_cache_dir() -> Path:
    override = os.environ.get(CACHE_DIR_ENV)
    if override:
        return Path(override)
    return Path.home() / ".cache" / "chairtools"


class ResponseCache:
    """One human-inspectable JSON file per cached request."""

    def __init__(self, directory: str | Path | None = None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()

    def _path(self, url: str) -> Path:
        digest = hashlib.sha256(url.encode("utf-8")).hexdigest()
        return self.directory / f"{digest}.json"

    def get(self, url: str) -> dict | None:
        path = self._path(url)
        if not path.exists():
            return None
        return json.loads(path.read_text(encoding="utf-8"))

    def put(self, url: str, body: str, retrieved_at: str) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self._path(url)
        payload = {"url": url, "retrievedAt": retrieved_at, "body": body}
        fd, tmp_name = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, ensure_ascii=False, indent=2)
        os.replace(tmp_name, path)


class RateLimiter:
    """Enforces a minimum interval between dispatches; thread-safe."""

    def __init__(
        self,
        min_interval: float,
        clock: Callable[[], float] = time.monotonic,
        sleep: Callable[[float], None] = time.sleep,
    ):
        self.min_interval = min_interval
        self._clock = clock
        self._sleep = sleep
        self._lock = threading.Lock()
        self._last: float | None = None

    def wait(self) -> None:
        with self._lock:
            now = self._clock()
            if self._last is not None:
                remaining = self.min_interval - (now - self._last)
                if remaining > 0:
                    self._sleep(remaining)
                    now = self._clock()
            self._last = now


def _now_iso() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def parse_dblp_payload(body: str) -> list[RawDocument]:
    """Documents from a DBLP publ/api JSON body (titles only, no abstracts)."""
    try:
        payload = json.loads(body)
    except json.JSONDecodeError as exc:
        raise PayloadError(f"dblp: invalid JSON: {exc}") from exc
    try:
        hits = payload["result"]["hits"].get("hit", [])
    except (KeyError, TypeError, AttributeError) as exc:
        raise PayloadError("dblp: unexpected payload shape") from exc
    if isinstance(hits, dict):  # single hit arrives un-listed
        hits = [hits]
    if not isinstance(hits, list):
        raise PayloadError("dblp: 'hit' is neither list nor object")
    docs = []
    for i, hit in enumerate(hits):
        info = hit.get("info") if isinstance(hit, dict) else None
        if not isinstance(info, dict):
            continue
        title = info.get("title")
        if not isinstance(title, str) or not title.strip():
            continue
        key = info.get("key") or hit.get("@id") or f"hit-{i}"
        docs.append(
            RawDocument(id=f"dblp:{key}", title=title.strip(), abstract="", source="publication")
        )
    return docs


def parse_semantic_scholar_payload(body: str) -> list[RawDocument]:
    """Documents from a Semantic Scholar author-papers JSON body."""
    try:
        payload = json.loads(body)
    except json.JSONDecodeError as exc:
        raise PayloadError(f"semanticScholar: invalid JSON: {exc}") from exc
    data = payload.get("data") if isinstance(payload, dict) else None
    if not isinstance(data, list):
        raise PayloadError("semanticScholar: missing 'data' list")
    docs = []
    for i, item in enumerate(data):
        if not isinstance(item, dict):
            continue
        title = item.get("title")
        if not isinstance(title, str) or not title.strip():
            continue
        key = item.get("paperId") or f"paper-{i}"
        abstract = item.get("abstract")
        docs.append(
            RawDocument(
                id=f"s2:{key}",
                title=title.strip(),
                abstract=abstract if isinstance(abstract, str) else "",
                source="publication",
            )
        )
    return docs


def dblp_url(query: str, limit: int) -> str:
    return f"https://dblp.org/search/publ/api?q={quote_plus(query)}&format=json&h={limit}"


def semantic_scholar_url(author_id: str, limit: int) -> str:
    return (
        f"https://api.semanticscholar.org/graph/v1/author/{quote(author_id)}"
        f"/papers?fields=title,abstract&limit={limit}"
    )


class IndexingClient:
    """Fetches reviewer publications with caching, throttling and retries."""

    def __init__(
        self,
        transport: Transport | None = None,
        cache: ResponseCache | None = None,
        min_interval: float = 1.0,
        sleep: Callable[[float], None] = time.sleep,
    ):
        self.transport = transport if transport is not None else RequestsTransport()
        self.cache = cache if cache is not None else ResponseCache()
        self._sleep = sleep
        self._limiters = {
            DBLP: RateLimiter(min_interval, sleep=sleep),
            SEMANTIC_SCHOLAR: RateLimiter(min_interval, sleep=sleep),
        }

    def _fetch(self, url: str, provider: str, mode: str) -> tuple[str, bool, str]:
        """Return (body, from_cache, retrieved_at) honoring mode and cache."""
        if mode not in (ONLINE, OFFLINE):
            raise ValueError(f"mode must be '{ONLINE}' or '{OFFLINE}', got '{mode}'")
        cached = self.cache.get(url)
        if cached is not None:
            return cached["body"], True, cached.get("retrievedAt", "")
        if mode == OFFLINE:
            raise CacheMissError(f"{provider}: no cached response for {url}")
        for attempt in range(RETRY_ATTEMPTS):
            self._limiters[provider].wait()
            resp = self.transport.get(url)
            if resp.status == 429:
                if attempt < RETRY_ATTEMPTS - 1:
                    self._sleep(RETRY_BASE_SECONDS * RETRY_FACTOR**attempt)
                continue
            if resp.status == 404:
                raise NotFoundError(f"{provider}: not found: {url}", status=404)
            if resp.status != 200:
                raise ProviderError(
                    f"{provider}: HTTP {resp.status} for {url}", status=resp.status
                )
            retrieved_at = _now_iso()
            self.cache.put(url, resp.body, retrieved_at)
            return resp.body, False, retrieved_at
        raise RateLimitedError(f"{provider}: still rate-limited after {RETRY_ATTEMPTS} attempts")

    def fetch_dblp(self, query: str, limit: int = 100, mode: str = ONLINE) -> FetchResult:
        """Publication search; one document per hit, abstracts always empty."""
        if not query:
            raise ValueError("dblp query must be nonempty")
        if not 1 <= limit <= 1000:
            raise ValueError(f"dblp limit must be in [1, 1000], got {limit}")
        body, from_cache, retrieved_at = self._fetch(dblp_url(query, limit), DBLP, mode)
        return FetchResult(
            documents=tuple(parse_dblp_payload(body)),
            provider=DBLP,
            from_cache=from_cache,
            retrieved_at=retrieved_at,
        )

    def fetch_semantic_scholar(
        self, author_id: str, limit: int = 100, mode: str = ONLINE
    ) -> FetchResult:
        """Author papers with titles and abstracts; null abstracts become ''."""
        if not author_id:
            raise ValueError("semantic scholar author id must be nonempty")
        if limit < 1:
            raise ValueError(f"semantic scholar limit must be positive, got {limit}")
        url = semantic_scholar_url(author_id, limit)
        body, from_cache, retrieved_at = self._fetch(url, SEMANTIC_SCHOLAR, mode)
        return FetchResult(
            documents=tuple(parse_semantic_scholar_payload(body)),
            provider=SEMANTIC_SCHOLAR,
            from_cache=from_cache,
            retrieved_at=retrieved_at,
        )

    def hydrate_reviewer(
        self,
        reviewer: Reviewer,
        providers: Iterable[str] = (DBLP, SEMANTIC_SCHOLAR),
        limit: int = 100,
        mode: str = ONLINE,
    ) -> Reviewer:
        """Populate reviewer.publications from every configured provider.

        Manually entered publications stay first; fetched documents are
        appended in provider preference order, deduplicated against
        everything already kept by lowercased title.
        """
        ids = reviewer.external_ids
        if ids.dblp_query is None and ids.semantic_scholar_author_id is None:
            raise ConfigurationError(f"reviewer '{reviewer.id}' has no external ids")
        merged: list[RawDocument] = []
        seen_titles: set[str] = set()
        for doc in reviewer.publications:
            key = doc.title.strip().lower()
            if key in seen_titles:
                continue
            seen_titles.add(key)
            merged.append(doc)
        for provider in providers:
            try:
                if provider == DBLP and ids.dblp_query is not None:
                    result = self.fetch_dblp(ids.dblp_query, limit, mode)
                elif provider == SEMANTIC_SCHOLAR and ids.semantic_scholar_author_id is not None:
                    result = self.fetch_semantic_scholar(
                        ids.semantic_scholar_author_id, limit, mode
                    )
                else:
                    continue
            except ClientError as exc:
                wrapped = exc.__class__(f"reviewer '{reviewer.id}': {exc}")
                if isinstance(exc, ProviderError):
                    wrapped.status = exc.status
                raise wrapped from exc
            for doc in result.documents:
                key = doc.title.strip().lower()
                if key in seen_titles:
                    continue
                seen_titles.add(key)
                merged.append(doc)
        return replace(reviewer, publications=tuple(merged))
