import { Api } from "./api.js";
import { startApp } from "./app.js";

const meta = document.querySelector('meta[name="api-base"]');
const base = meta?.getAttribute("content") || "http://127.0.0.1:8008";
const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app mount point");
}
startApp(root, new Api(base));
