// Hash routing: the whole view state lives in location.hash so every
// screen, including an active term filter, is a shareable URL.

export interface Route {
  view: "overview" | "reviewers" | "paper" | "gaps";
  term?: string;
  reviewerId?: string;
  paperId?: string;
}

export function parseRoute(hash: string): Route {
  const [path, query = ""] = hash.replace(/^#\/?/, "").split("?", 2);
  const params = new URLSearchParams(query);
  const segments = (path ?? "").split("/").filter(Boolean);
  const head = segments[0] ?? "";

  if (head === "reviewers") {
    const reviewerId = segments[1];
    return reviewerId
      ? { view: "reviewers", reviewerId: decodeURIComponent(reviewerId) }
      : { view: "reviewers" };
  }
  if (head === "papers" && segments[1]) {
    return { view: "paper", paperId: decodeURIComponent(segments[1]) };
  }
  if (head === "gaps") {
    return { view: "gaps" };
  }
  const term = params.get("term");
  return term ? { view: "overview", term } : { view: "overview" };
}

export function overviewHash(term?: string): string {
  return term ? `#/overview?term=${encodeURIComponent(term)}` : "#/overview";
}

export function paperHash(paperId: string): string {
  return `#/papers/${encodeURIComponent(paperId)}`;
}

export function reviewerHash(reviewerId?: string): string {
  return reviewerId ? `#/reviewers/${encodeURIComponent(reviewerId)}` : "#/reviewers";
}
