import { Api, ApiError, AssignmentRecord, ReviewerRecord } from "../api.js";
import { clear, el } from "../dom.js";
import { reviewerHash } from "../router.js";

// Browsable committee list (name ascending) with per-reviewer assignment
// counts; selecting a reviewer pulls their publication cloud from the
// service.

function assignedCount(assignments: AssignmentRecord[], reviewerId: string): number {
  return assignments.filter((a) => a.reviewerId === reviewerId).length;
}

function reviewerList(
  reviewers: ReviewerRecord[],
  assignments: AssignmentRecord[],
  selectedId?: string,
): HTMLElement {
  const list = el("ul", { class: "reviewer-list" });
  for (const reviewer of reviewers) {
    const count = assignedCount(assignments, reviewer.id);
    list.append(
      el(
        "li",
        { "data-reviewer": reviewer.id, class: reviewer.id === selectedId ? "selected" : "" },
        el("a", { href: reviewerHash(reviewer.id) }, reviewer.name),
        el("span", { class: "count" }, `${count} assigned`),
      ),
    );
  }
  return list;
}

async function reviewerDetail(api: Api, reviewer: ReviewerRecord): Promise<HTMLElement> {
  const detail = el("section", { class: "reviewer-detail" });
  detail.append(el("h2", {}, reviewer.name));
  if (reviewer.affiliation) {
    detail.append(el("p", { class: "affiliation" }, reviewer.affiliation));
  }
  if (reviewer.acceptedTopics.length > 0) {
    detail.append(
      el("p", { class: "topics" }, `Accepted topics: ${reviewer.acceptedTopics.join(", ")}`),
    );
  }
  detail.append(
    el("p", { class: "pub-count" }, `${reviewer.publications.length} publications on record`),
  );
  if (reviewer.publications.length === 0) {
    detail.append(
      el(
        "p",
        { class: "hint" },
        "No publications recorded; the cloud is blank until some are fetched or entered.",
      ),
    );
  }

  const cloud = el("div", { class: "cloud" });
  try {
    cloud.innerHTML = await api.cloudSvg(`reviewer/${reviewer.id}`);
  } catch (err) {
    const message =
      err instanceof ApiError ? err.detail : err instanceof Error ? err.message : String(err);
    cloud.append(el("p", { class: "cloud-error" }, `Cloud unavailable: ${message}`));
  }
  detail.append(cloud);
  return detail;
}

export async function renderReviewers(
  root: HTMLElement,
  api: Api,
  selectedId?: string,
): Promise<void> {
  clear(root);
  let reviewers: ReviewerRecord[];
  let assignments: AssignmentRecord[];
  try {
    [reviewers, assignments] = await Promise.all([api.reviewers(), api.assignments()]);
  } catch (err) {
    root.append(
      el(
        "div",
        { class: "banner error" },
        `Could not reach the service: ${err instanceof Error ? err.message : String(err)}`,
      ),
    );
    return;
  }

  const sorted = [...reviewers].sort((a, b) => a.name.localeCompare(b.name));
  root.append(el("h2", {}, `Committee (${sorted.length})`));
  root.append(reviewerList(sorted, assignments, selectedId));

  if (selectedId) {
    const selected = sorted.find((r) => r.id === selectedId);
    if (selected) {
      root.append(await reviewerDetail(api, selected));
    } else {
      root.append(el("p", { class: "empty-state" }, `No reviewer '${selectedId}' in the corpus.`));
    }
  }
}
