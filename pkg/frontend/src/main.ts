/**
 * Browser entry point: wire the client to the page and re-render the
 * whole app on every state change.
 */

import { ApiClient } from "./api.js";
import { App } from "./app.js";
import { replaceChildren } from "./render.js";

const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app container");
}
const base = root.dataset["apiBase"] ?? window.location.origin;
const client = new ApiClient(base);
const app = new App(client, () => replaceChildren(app.render(), root));
replaceChildren(app.render(), root);
