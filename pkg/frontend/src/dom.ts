// Small DOM helpers shared by the views. Dynamic content always goes
// through element construction or textContent, never string-spliced HTML.

type Attrs = Record<string, string | ((event: Event) => void)>;

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Attrs = {},
  ...children: Array<Node | string>
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (typeof value === "function") {
      node.addEventListener(key.replace(/^on/, ""), value);
    } else if (key === "class") {
      node.className = value;
    } else {
      node.setAttribute(key, value);
    }
  }
  node.append(...children);
  return node;
}

export function clear(node: HTMLElement): void {
  node.replaceChildren();
}

/** Drop a transient message into the view's toast region. */
export function toast(host: HTMLElement, message: string): void {
  const region =
    host.querySelector<HTMLElement>(".toast-region") ??
    host.appendChild(el("div", { class: "toast-region" }));
  const note = el("div", { class: "toast" }, message);
  region.append(note);
  setTimeout(() => note.remove(), 6000);
}

/**
 * Whole-word occurrence test used by the term filter. Word characters are
 * the ones terms are made of (letters, digits, hyphen, apostrophe), so a
 * click on "chain" does not match "blockchain".
 */
export function textContainsTerm(text: string, term: string): boolean {
  const needle = term.toLowerCase();
  const haystack = text.toLowerCase();
  let from = 0;
  const isWordChar = (ch: string | undefined): boolean =>
    ch !== undefined && (/[\p{L}\p{N}]/u.test(ch) || ch === "-" || ch === "'");
  while (true) {
    const at = haystack.indexOf(needle, from);
    if (at < 0) return false;
    const before = at > 0 ? haystack[at - 1] : undefined;
    const after = haystack[at + needle.length];
    if (!isWordChar(before) && !isWordChar(after)) return true;
    from = at + 1;
  }
}
