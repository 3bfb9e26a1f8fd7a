import { Api, PaperRecord } from "../api.js";
import { clear, el, textContainsTerm } from "../dom.js";
import { overviewHash, paperHash } from "../router.js";

// Submissions cloud and committee cloud side by side; clicking a word in
// either filters the paper list underneath. The SVGs come straight from
// the service, so click targets are its data-term attributes.

function cloudFigure(caption: string, svg: string): HTMLElement {
  const body = el("div", { class: "cloud" });
  body.innerHTML = svg;
  return el("figure", {}, el("figcaption", {}, caption), body);
}

function paperListSection(papers: PaperRecord[], term?: string): HTMLElement {
  const section = el("section", { class: "papers" });
  const matching = term
    ? papers.filter((p) => textContainsTerm(`${p.title} ${p.abstract}`, term))
    : papers;

  if (term) {
    section.append(
      el(
        "p",
        { class: "filter-note" },
        `Showing ${matching.length} of ${papers.length} papers mentioning `,
        el("strong", {}, term),
        " ",
        el("button", { class: "clear-term", type: "button" }, "show all"),
      ),
    );
  } else {
    section.append(el("h2", {}, `Papers (${papers.length})`));
  }

  if (papers.length === 0) {
    section.append(el("p", { class: "empty-state" }, "No papers in the corpus yet."));
    return section;
  }

  const list = el("ul", { class: "paper-list" });
  for (const paper of matching) {
    list.append(
      el(
        "li",
        { "data-paper": paper.id },
        el("a", { href: paperHash(paper.id) }, paper.title),
        el("span", { class: "authors" }, paper.authorNames.join(", ")),
      ),
    );
  }
  section.append(list);
  return section;
}

export async function renderOverview(
  root: HTMLElement,
  api: Api,
  term?: string,
): Promise<void> {
  clear(root);
  let submissionsSvg: string;
  let pcSvg: string;
  let papers: PaperRecord[];
  try {
    [submissionsSvg, pcSvg, papers] = await Promise.all([
      api.cloudSvg("submissions"),
      api.cloudSvg("pc"),
      api.papers(),
    ]);
  } catch (err) {
    root.append(
      el(
        "div",
        { class: "banner error" },
        `Could not reach the service: ${err instanceof Error ? err.message : String(err)} `,
        el(
          "button",
          {
            class: "retry",
            type: "button",
            onclick: () => void renderOverview(root, api, term),
          },
          "Retry",
        ),
      ),
    );
    return;
  }

  const clouds = el(
    "section",
    { class: "clouds" },
    cloudFigure("Submissions", submissionsSvg),
    cloudFigure("Committee", pcSvg),
  );
  root.append(clouds, paperListSection(papers, term));

  const applyTerm = (next?: string): void => {
    history.replaceState(null, "", overviewHash(next));
    const fresh = paperListSection(papers, next);
    root.querySelector("section.papers")?.replaceWith(fresh);
    wireFilterControls(fresh);
  };

  const wireFilterControls = (section: HTMLElement): void => {
    section
      .querySelector(".clear-term")
      ?.addEventListener("click", () => applyTerm(undefined));
  };

  clouds.addEventListener("click", (event) => {
    const word = (event.target as Element).closest("text[data-term]");
    const picked = word?.getAttribute("data-term");
    if (picked) applyTerm(picked);
  });
  wireFilterControls(root.querySelector("section.papers") as HTMLElement);
}
