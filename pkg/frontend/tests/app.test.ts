import { beforeEach, describe, expect, it } from "vitest";
import { Api } from "../src/api.js";
import { startApp } from "../src/app.js";
import { FakeBackend, installBackend, settle } from "./helpers/backend.js";

let backend: FakeBackend;
let api: Api;
let root: HTMLElement;

beforeEach(() => {
  backend = installBackend();
  api = new Api("http://fake.test");
  root = document.createElement("div");
  document.body.replaceChildren(root);
  history.replaceState(null, "", "#/overview");
});

async function goTo(hash: string): Promise<void> {
  history.replaceState(null, "", hash);
  window.dispatchEvent(new Event("hashchange"));
  await settle();
}

describe("app shell", () => {
  it("builds the nav and lands on the overview", async () => {
    startApp(root, api);
    await settle();
    const labels = [...root.querySelectorAll(".top-nav a")].map((a) => a.textContent);
    expect(labels).toEqual(["Overview", "Reviewers", "Gaps"]);
    expect(root.querySelectorAll("#view section.clouds svg").length).toBe(2);
  });

  it("dispatches hash changes to the right view", async () => {
    startApp(root, api);
    await settle();

    await goTo("#/reviewers");
    expect(root.querySelector("#view h2")?.textContent).toBe("Committee (3)");

    await goTo("#/gaps");
    expect(root.querySelector("#view .gap-table")).toBeTruthy();

    await goTo("#/papers/p1");
    expect(root.querySelector("#view h2")?.textContent).toBe(
      "Blockchain Consensus at Scale",
    );

    await goTo("#/overview?term=blockchain");
    expect(root.querySelectorAll("#view li[data-paper]").length).toBe(2);
  });

  it("marks the active nav entry, counting paper pages as overview", async () => {
    startApp(root, api);
    await settle();

    const active = (): string[] =>
      [...root.querySelectorAll(".top-nav a.active")].map(
        (a) => a.getAttribute("data-view") ?? "",
      );
    expect(active()).toEqual(["overview"]);

    await goTo("#/gaps");
    expect(active()).toEqual(["gaps"]);

    await goTo("#/papers/p2");
    expect(active()).toEqual(["overview"]);
  });

  it("keeps working after a failed view load", async () => {
    backend.offline = true;
    startApp(root, api);
    await settle();
    expect(root.querySelector("#view .banner.error")).toBeTruthy();

    backend.offline = false;
    await goTo("#/reviewers");
    expect(root.querySelector("#view h2")?.textContent).toBe("Committee (3)");
  });
});
