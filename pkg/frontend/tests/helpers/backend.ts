// In-memory stand-in for the chairtools service, wired up by replacing
// global fetch. It speaks the same wire format (camelCase JSON, {detail}
// errors, SVG text bodies) and records every request so tests can assert
// that a view did, or deliberately did not, talk to the network.

import { vi } from "vitest";
import type {
  AssignmentRecord,
  PaperRecord,
  ReviewerRecord,
  SuggestionRow,
} from "../../src/api.js";

export interface RecordedCall {
  method: string;
  path: string;
  params: URLSearchParams;
  body?: unknown;
}

interface GapBaseRow {
  term: string;
  subShare: number;
  pcShare: number;
}

const PAPERS: PaperRecord[] = [
  {
    id: "p1",
    title: "Blockchain Consensus at Scale",
    abstract: "Proof systems for blockchain consensus under churn.",
    topics: ["security"],
    authorNames: ["Alice Able"],
  },
  {
    id: "p2",
    title: "Sharding the Ledger",
    abstract: "Raising blockchain throughput with sharded consensus.",
    topics: ["security", "systems"],
    authorNames: ["Bob Baker", "Carol Cole"],
  },
  {
    id: "p3",
    title: "Typed Compilers for ML Workloads",
    abstract: "A typechecker that specialises compiler pipelines.",
    topics: ["languages"],
    authorNames: ["Dan Dale"],
  },
];

const REVIEWERS: ReviewerRecord[] = [
  {
    id: "r1",
    name: "Rita Reviewer",
    affiliation: "Example University",
    publications: [
      { id: "dblp:a", title: "Compiler Verification", abstract: "" },
      { id: "dblp:b", title: "Typechecker Design", abstract: "" },
    ],
    acceptedTopics: ["languages"],
  },
  {
    id: "r2",
    name: "Sam Scholar",
    publications: [],
    acceptedTopics: ["systems"],
  },
  {
    id: "r3",
    name: "Ada Author",
    affiliation: "Somewhere Labs",
    publications: [{ id: "x1", title: "Consensus Basics", abstract: "" }],
    acceptedTopics: ["security"],
  },
];

// Raw similarity scores per paper; "assigned" is derived live from the
// current assignment list so mutations show up on the next fetch.
const SCORES: Record<string, Array<{ reviewerId: string; score: number }>> = {
  p1: [
    { reviewerId: "r3", score: 0.51 },
    { reviewerId: "r1", score: 0.11 },
    { reviewerId: "r2", score: 0 },
  ],
  p2: [
    { reviewerId: "r3", score: 0.47 },
    { reviewerId: "r1", score: 0.08 },
    { reviewerId: "r2", score: 0 },
  ],
  p3: [
    { reviewerId: "r1", score: 0.82 },
    { reviewerId: "r3", score: 0.12 },
    { reviewerId: "r2", score: 0 },
  ],
};

const GAP_BASE: GapBaseRow[] = [
  { term: "blockchain", subShare: 0.3, pcShare: 0 },
  { term: "consensus", subShare: 0.25, pcShare: 0.05 },
  { term: "compiler", subShare: 0.1, pcShare: 0.4 },
  { term: "typechecker", subShare: 0.05, pcShare: 0.06 },
];

const CLOUD_TERMS: Record<string, Array<[string, number]>> = {
  submissions: [
    ["blockchain", 9],
    ["consensus", 7],
    ["sharding", 3],
  ],
  pc: [
    ["compiler", 6],
    ["typechecker", 4],
  ],
  "reviewer/r1": [
    ["compiler", 4],
    ["typechecker", 2],
  ],
  "reviewer/r2": [],
  "reviewer/r3": [["consensus", 2]],
};

function svgFor(terms: Array<[string, number]>): string {
  const texts = terms
    .map(
      ([term, weight], i) =>
        `<text x="${(200 + 40 * i).toFixed(2)}" y="${(120 + 30 * i).toFixed(2)}" ` +
        `font-size="${(40 - 8 * i).toFixed(2)}" fill="#4c78a8" ` +
        `data-term="${term}" data-weight="${weight}">${term}</text>`,
    )
    .join("");
  return (
    '<svg xmlns="http://www.w3.org/2000/svg" width="800" height="500" ' +
    'viewBox="0 0 800 500">' +
    texts +
    "</svg>"
  );
}

interface Handled {
  status: number;
  body: string;
}

function json(status: number, payload: unknown): Handled {
  return { status, body: JSON.stringify(payload) };
}

export class FakeBackend {
  papers: PaperRecord[] = structuredClone(PAPERS);
  reviewers: ReviewerRecord[] = structuredClone(REVIEWERS);
  cloudTerms: Record<string, Array<[string, number]>> = structuredClone(CLOUD_TERMS);
  assignments: AssignmentRecord[] = [
    { paperId: "p1", reviewerId: "r3", status: "proposed", origin: "manual" },
  ];
  calls: RecordedCall[] = [];
  /** When set, the next request fails once with this error payload. */
  failNext: { status: number; detail: string } | null = null;
  /** When true, fetch itself rejects, as if the service were down. */
  offline = false;

  install(): void {
    vi.stubGlobal("fetch", (input: RequestInfo | URL, init?: RequestInit) =>
      this.fetch(String(input), init),
    );
  }

  callsTo(path: string): RecordedCall[] {
    return this.calls.filter((c) => c.path === path);
  }

  private async fetch(url: string, init?: RequestInit): Promise<Response> {
    if (this.offline) {
      throw new TypeError("fetch failed");
    }
    const parsed = new URL(url, "http://fake.test");
    const method = init?.method ?? "GET";
    const body = init?.body ? (JSON.parse(String(init.body)) as unknown) : undefined;
    this.calls.push({ method, path: parsed.pathname, params: parsed.searchParams, body });

    let handled: Handled;
    if (this.failNext) {
      handled = json(this.failNext.status, { detail: this.failNext.detail });
      this.failNext = null;
    } else {
      handled = this.route(method, parsed.pathname, parsed.searchParams, body);
    }
    return {
      ok: handled.status < 400,
      status: handled.status,
      json: async () => JSON.parse(handled.body) as unknown,
      text: async () => handled.body,
    } as Response;
  }

  private route(
    method: string,
    path: string,
    params: URLSearchParams,
    body: unknown,
  ): Handled {
    if (method === "GET" && path === "/api/papers") return json(200, this.papers);
    if (method === "GET" && path === "/api/reviewers") return json(200, this.reviewers);
    if (method === "GET" && path === "/api/assignments") return json(200, this.assignments);

    const cloud = path.match(/^\/api\/clouds\/(.+)\.svg$/);
    if (method === "GET" && cloud) {
      const scope = cloud[1] ?? "";
      if (scope.startsWith("reviewer/")) {
        const id = scope.slice("reviewer/".length);
        if (!this.reviewers.some((r) => r.id === id)) {
          return json(404, { detail: `unknown reviewer '${id}'` });
        }
      }
      const terms = this.cloudTerms[scope];
      if (terms === undefined) return json(404, { detail: `unknown scope '${scope}'` });
      return { status: 200, body: svgFor(terms) };
    }

    if (method === "GET" && path === "/api/gap-report") {
      const minShare = Number(params.get("minShare") ?? "0.01");
      const threshold = Number(params.get("ratio") ?? "0.5");
      if (!(minShare > 0 && minShare <= 1)) {
        return json(400, { detail: "min_share must be in (0, 1]" });
      }
      if (!(threshold >= 0)) {
        return json(400, { detail: "ratio_threshold must be >= 0" });
      }
      const rows = GAP_BASE.filter((r) => r.subShare >= minShare).map((r) => {
        const ratio = r.subShare > 0 ? r.pcShare / r.subShare : 0;
        return { ...r, ratio, flagged: ratio < threshold };
      });
      return json(200, rows);
    }

    const suggest = path.match(/^\/api\/papers\/([^/]+)\/suggestions$/);
    if (method === "GET" && suggest) {
      const paperId = decodeURIComponent(suggest[1] ?? "");
      const scores = SCORES[paperId];
      if (!scores) return json(404, { detail: `unknown paper '${paperId}'` });
      const k = Number(params.get("k") ?? "10");
      const rows: SuggestionRow[] = scores.slice(0, k).map((s) => ({
        ...s,
        assigned: this.assignments.some(
          (a) => a.paperId === paperId && a.reviewerId === s.reviewerId,
        ),
      }));
      return json(200, rows);
    }

    if (method === "POST" && path === "/api/assignments") {
      const record = body as AssignmentRecord;
      if (!this.papers.some((p) => p.id === record.paperId)) {
        return json(422, { detail: `assignment references unknown paper '${record.paperId}'` });
      }
      if (!this.reviewers.some((r) => r.id === record.reviewerId)) {
        return json(422, {
          detail: `assignment references unknown reviewer '${record.reviewerId}'`,
        });
      }
      const existing = this.assignments.findIndex(
        (a) => a.paperId === record.paperId && a.reviewerId === record.reviewerId,
      );
      if (existing >= 0) {
        this.assignments[existing] = record;
      } else {
        this.assignments.push(record);
      }
      return json(200, record);
    }

    const del = path.match(/^\/api\/assignments\/([^/]+)\/([^/]+)$/);
    if (method === "DELETE" && del) {
      const paperId = decodeURIComponent(del[1] ?? "");
      const reviewerId = decodeURIComponent(del[2] ?? "");
      const before = this.assignments.length;
      this.assignments = this.assignments.filter(
        (a) => !(a.paperId === paperId && a.reviewerId === reviewerId),
      );
      if (this.assignments.length === before) {
        return json(404, { detail: `no assignment for paper '${paperId}' and reviewer '${reviewerId}'` });
      }
      return json(200, { paperId, reviewerId });
    }

    return json(404, { detail: `no route for ${method} ${path}` });
  }
}

/** Fresh backend with fetch stubbed; unstubGlobals in the config undoes it. */
export function installBackend(): FakeBackend {
  const backend = new FakeBackend();
  backend.install();
  return backend;
}

/** Let queued microtasks and zero-delay timers run so views finish rendering. */
export async function settle(): Promise<void> {
  for (let i = 0; i < 6; i += 1) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}
