import { Api } from "./api.js";
import { clear, el } from "./dom.js";
import { parseRoute, Route } from "./router.js";
import { renderGaps } from "./views/gaps.js";
import { renderOverview } from "./views/overview.js";
import { renderPaper } from "./views/paper.js";
import { renderReviewers } from "./views/reviewers.js";

const NAV_LINKS: Array<{ href: string; label: string; view: Route["view"] }> = [
  { href: "#/overview", label: "Overview", view: "overview" },
  { href: "#/reviewers", label: "Reviewers", view: "reviewers" },
  { href: "#/gaps", label: "Gaps", view: "gaps" },
];

function buildShell(root: HTMLElement): { nav: HTMLElement; outlet: HTMLElement } {
  clear(root);
  const nav = el("nav", { class: "top-nav" }, el("span", { class: "brand" }, "chair-ui"));
  for (const link of NAV_LINKS) {
    nav.append(el("a", { href: link.href, "data-view": link.view }, link.label));
  }
  const outlet = el("main", { id: "view" });
  root.append(nav, outlet, el("div", { class: "toast-region" }));
  return { nav, outlet };
}

function markActive(nav: HTMLElement, route: Route): void {
  for (const anchor of nav.querySelectorAll("a[data-view]")) {
    const active =
      anchor.getAttribute("data-view") === route.view ||
      (anchor.getAttribute("data-view") === "overview" && route.view === "paper");
    anchor.classList.toggle("active", active);
  }
}

export function startApp(root: HTMLElement, api: Api): () => Promise<void> {
  const { nav, outlet } = buildShell(root);

  const render = async (): Promise<void> => {
    const route = parseRoute(location.hash);
    markActive(nav, route);
    switch (route.view) {
      case "overview":
        await renderOverview(outlet, api, route.term);
        break;
      case "reviewers":
        await renderReviewers(outlet, api, route.reviewerId);
        break;
      case "paper":
        await renderPaper(outlet, api, route.paperId ?? "");
        break;
      case "gaps":
        await renderGaps(outlet, api);
        break;
    }
  };

  window.addEventListener("hashchange", () => void render());
  void render();
  return render;
}
