import { Api, ApiError, AssignmentRecord, PaperRecord, SuggestionRow } from "../api.js";
import { clear, el, toast } from "../dom.js";
import { reviewerHash } from "../router.js";

// Paper workbench: metadata on top, current assignments and ranked
// suggestions below. Every mutation waits for the server's answer before
// the lists change; a failed call leaves the page as it was and surfaces
// the server's detail in a toast.

const SUGGESTION_COUNT = 10;

function metadataHeader(paper: PaperRecord): HTMLElement {
  const header = el("header", { class: "paper-meta" });
  header.append(el("h2", {}, paper.title));
  if (paper.authorNames.length > 0) {
    header.append(el("p", { class: "authors" }, paper.authorNames.join(", ")));
  }
  if (paper.topics.length > 0) {
    header.append(el("p", { class: "topics" }, `Topics: ${paper.topics.join(", ")}`));
  }
  if (paper.abstract) {
    header.append(el("p", { class: "abstract" }, paper.abstract));
  }
  return header;
}

function assignmentsSection(
  assignments: AssignmentRecord[],
  onRemove: (reviewerId: string) => void,
): HTMLElement {
  const section = el("section", { class: "assignments" });
  section.append(el("h3", {}, `Assigned reviewers (${assignments.length})`));
  if (assignments.length === 0) {
    section.append(el("p", { class: "empty-state" }, "Nobody assigned yet."));
    return section;
  }
  const list = el("ul", { class: "assignment-list" });
  for (const assignment of assignments) {
    list.append(
      el(
        "li",
        { "data-reviewer": assignment.reviewerId },
        el("a", { href: reviewerHash(assignment.reviewerId) }, assignment.reviewerId),
        el("span", { class: "status" }, assignment.status),
        el(
          "button",
          {
            class: "remove",
            type: "button",
            onclick: () => onRemove(assignment.reviewerId),
          },
          "Remove",
        ),
      ),
    );
  }
  section.append(list);
  return section;
}

function suggestionsSection(
  suggestions: SuggestionRow[],
  onAssign: (reviewerId: string) => void,
): HTMLElement {
  const section = el("section", { class: "suggestions" });
  section.append(el("h3", {}, "Suggested reviewers"));
  const table = el("table", { class: "suggestion-table" });
  table.append(
    el(
      "thead",
      {},
      el("tr", {}, el("th", {}, "reviewer"), el("th", {}, "score"), el("th", {}, "")),
    ),
  );
  const body = el("tbody");
  for (const row of suggestions) {
    const action = row.assigned
      ? el("span", { class: "assigned-mark" }, "assigned")
      : el(
          "button",
          { class: "assign", type: "button", onclick: () => onAssign(row.reviewerId) },
          "Assign",
        );
    body.append(
      el(
        "tr",
        { "data-reviewer": row.reviewerId, class: row.assigned ? "assigned" : "" },
        el("td", {}, row.reviewerId),
        el("td", { class: "score" }, row.score.toFixed(6)),
        el("td", {}, action),
      ),
    );
  }
  table.append(body);
  section.append(table);
  return section;
}

export async function renderPaper(
  root: HTMLElement,
  api: Api,
  paperId: string,
): Promise<void> {
  clear(root);
  let papers: PaperRecord[];
  let assignments: AssignmentRecord[];
  let suggestions: SuggestionRow[];
  try {
    [papers, assignments, suggestions] = await Promise.all([
      api.papers(),
      api.assignments(),
      api.suggestions(paperId, SUGGESTION_COUNT),
    ]);
  } catch (err) {
    const message =
      err instanceof ApiError ? err.detail : err instanceof Error ? err.message : String(err);
    root.append(el("div", { class: "banner error" }, message));
    return;
  }
  const paper = papers.find((p) => p.id === paperId);
  if (!paper) {
    root.append(el("div", { class: "banner error" }, `Unknown paper '${paperId}'.`));
    return;
  }

  root.append(metadataHeader(paper));
  const lists = el("div", { class: "paper-lists" });
  root.append(lists);

  const forThisPaper = (all: AssignmentRecord[]): AssignmentRecord[] =>
    all.filter((a) => a.paperId === paperId);

  const renderLists = (): void => {
    clear(lists);
    lists.append(
      assignmentsSection(forThisPaper(assignments), (reviewerId) => void remove(reviewerId)),
      suggestionsSection(suggestions, (reviewerId) => void assign(reviewerId)),
    );
  };

  // Re-pulls both lists after a confirmed mutation so the page always
  // shows the server's state, never a local guess.
  const refresh = async (): Promise<void> => {
    [assignments, suggestions] = await Promise.all([
      api.assignments(),
      api.suggestions(paperId, SUGGESTION_COUNT),
    ]);
    renderLists();
  };

  const describe = (err: unknown): string =>
    err instanceof ApiError ? err.detail : err instanceof Error ? err.message : String(err);

  const assign = async (reviewerId: string): Promise<void> => {
    try {
      await api.createAssignment(paperId, reviewerId);
      await refresh();
    } catch (err) {
      toast(root, `Assign failed: ${describe(err)}`);
    }
  };

  const remove = async (reviewerId: string): Promise<void> => {
    try {
      await api.deleteAssignment(paperId, reviewerId);
      await refresh();
    } catch (err) {
      toast(root, `Remove failed: ${describe(err)}`);
    }
  };

  renderLists();
}
