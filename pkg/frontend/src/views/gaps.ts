import { Api, ApiError, GapRow } from "../api.js";
import { clear, el } from "../dom.js";
import { overviewHash } from "../router.js";

// Gap dashboard. Threshold inputs are checked here before anything goes
// over the wire: a bad value gets an inline message and no request.

export function validateThresholds(
  minShareRaw: string,
  ratioRaw: string,
): { minShare: number; ratio: number } | { error: string } {
  const minShare = Number(minShareRaw);
  const ratio = Number(ratioRaw);
  if (minShareRaw.trim() === "" || Number.isNaN(minShare)) {
    return { error: "min share must be a number" };
  }
  if (ratioRaw.trim() === "" || Number.isNaN(ratio)) {
    return { error: "ratio must be a number" };
  }
  if (minShare <= 0 || minShare > 1) {
    return { error: "min share must be greater than 0 and at most 1" };
  }
  if (ratio < 0) {
    return { error: "ratio must be zero or positive" };
  }
  return { minShare, ratio };
}

const pct = (share: number): string => `${(share * 100).toFixed(1)}%`;

function gapTable(rows: GapRow[]): HTMLElement {
  if (rows.length === 0) {
    return el("p", { class: "empty-state" }, "No submission terms above the share threshold.");
  }
  const table = el("table", { class: "gap-table" });
  table.append(
    el(
      "thead",
      {},
      el(
        "tr",
        {},
        el("th", {}, "term"),
        el("th", {}, "submissions"),
        el("th", {}, "committee"),
        el("th", {}, "ratio"),
        el("th", {}, "gap"),
      ),
    ),
  );
  const body = el("tbody");
  for (const row of rows) {
    const termCell = row.flagged
      ? el(
          "td",
          {},
          el(
            "button",
            {
              class: "term-link",
              type: "button",
              onclick: () => {
                location.hash = overviewHash(row.term);
              },
            },
            row.term,
          ),
        )
      : el("td", {}, row.term);
    body.append(
      el(
        "tr",
        { class: row.flagged ? "flagged" : "", "data-term": row.term },
        termCell,
        el("td", {}, pct(row.subShare)),
        el("td", {}, pct(row.pcShare)),
        el("td", {}, row.ratio.toFixed(3)),
        el("td", {}, row.flagged ? "GAP" : ""),
      ),
    );
  }
  table.append(body);
  return table;
}

export async function renderGaps(root: HTMLElement, api: Api): Promise<void> {
  clear(root);
  root.append(el("h2", {}, "Coverage gaps"));

  const minShareInput = el("input", {
    id: "min-share",
    name: "minShare",
    type: "text",
    value: "0.01",
  }) as HTMLInputElement;
  const ratioInput = el("input", {
    id: "ratio",
    name: "ratio",
    type: "text",
    value: "0.5",
  }) as HTMLInputElement;
  const feedback = el("p", { class: "form-error", role: "alert" });
  feedback.hidden = true;
  const results = el("div", { class: "gap-results" });

  const load = async (): Promise<void> => {
    const parsed = validateThresholds(minShareInput.value, ratioInput.value);
    if ("error" in parsed) {
      feedback.textContent = parsed.error;
      feedback.hidden = false;
      return;
    }
    feedback.hidden = true;
    clear(results);
    try {
      const rows = await api.gapReport(parsed.minShare, parsed.ratio);
      results.append(gapTable(rows));
    } catch (err) {
      const message =
        err instanceof ApiError ? err.detail : err instanceof Error ? err.message : String(err);
      results.append(el("div", { class: "banner error" }, message));
    }
  };

  const form = el(
    "form",
    {
      class: "gap-controls",
      onsubmit: (event: Event) => {
        event.preventDefault();
        void load();
      },
    },
    el("label", { for: "min-share" }, "Min submission share"),
    minShareInput,
    el("label", { for: "ratio" }, "Flag below ratio"),
    ratioInput,
    el("button", { type: "submit" }, "Apply"),
  );

  root.append(form, feedback, results);
  await load();
}
