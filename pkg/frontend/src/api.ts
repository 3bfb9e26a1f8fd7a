// Typed client for the chairtools HTTP API. Every request funnels through
// one helper so error payloads ({error, detail}) surface uniformly.

export interface PaperRecord {
  id: string;
  title: string;
  abstract: string;
  topics: string[];
  authorNames: string[];
}

export interface PublicationRecord {
  id: string;
  title: string;
  abstract: string;
}

export interface ReviewerRecord {
  id: string;
  name: string;
  affiliation?: string;
  externalIds?: { dblpQuery?: string; semanticScholarAuthorId?: string };
  publications: PublicationRecord[];
  acceptedTopics: string[];
}

export interface AssignmentRecord {
  paperId: string;
  reviewerId: string;
  status: string;
  origin: string;
}

export interface GapRow {
  term: string;
  subShare: number;
  pcShare: number;
  ratio: number;
  flagged: boolean;
}

export interface SuggestionRow {
  reviewerId: string;
  score: number;
  assigned: boolean;
}

export type CloudScope = "submissions" | "pc" | `reviewer/${string}`;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

async function raiseFor(response: Response): Promise<never> {
  let detail = `HTTP ${response.status}`;
  try {
    const body = (await response.json()) as { detail?: string };
    if (typeof body.detail === "string" && body.detail) {
      detail = body.detail;
    }
  } catch {
    // non-JSON error body; keep the status line
  }
  throw new ApiError(response.status, detail);
}

export class Api {
  constructor(readonly baseUrl: string = "") {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, init);
    } catch (err) {
      throw new ApiError(0, `service unreachable: ${String(err)}`);
    }
    if (!response.ok) {
      await raiseFor(response);
    }
    return response;
  }

  private async getJson<T>(path: string): Promise<T> {
    const response = await this.request(path);
    return (await response.json()) as T;
  }

  papers(): Promise<PaperRecord[]> {
    return this.getJson("/api/papers");
  }

  reviewers(): Promise<ReviewerRecord[]> {
    return this.getJson("/api/reviewers");
  }

  assignments(): Promise<AssignmentRecord[]> {
    return this.getJson("/api/assignments");
  }

  async cloudSvg(scope: CloudScope): Promise<string> {
    const response = await this.request(`/api/clouds/${scope}.svg`);
    return response.text();
  }

  gapReport(minShare?: number, ratio?: number): Promise<GapRow[]> {
    const params = new URLSearchParams();
    if (minShare !== undefined) params.set("minShare", String(minShare));
    if (ratio !== undefined) params.set("ratio", String(ratio));
    const query = params.size > 0 ? `?${params}` : "";
    return this.getJson(`/api/gap-report${query}`);
  }

  suggestions(paperId: string, k = 10): Promise<SuggestionRow[]> {
    return this.getJson(
      `/api/papers/${encodeURIComponent(paperId)}/suggestions?k=${k}`,
    );
  }

  async createAssignment(
    paperId: string,
    reviewerId: string,
    status = "proposed",
  ): Promise<AssignmentRecord> {
    const response = await this.request("/api/assignments", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ paperId, reviewerId, status, origin: "manual" }),
    });
    return (await response.json()) as AssignmentRecord;
  }

  async deleteAssignment(paperId: string, reviewerId: string): Promise<void> {
    await this.request(
      `/api/assignments/${encodeURIComponent(paperId)}/${encodeURIComponent(reviewerId)}`,
      { method: "DELETE" },
    );
  }
}
