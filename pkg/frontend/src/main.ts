import { ApiClient } from "./api";
import { App } from "./app";

// Backend origin is fixed at build time; empty string = same origin.
const BASE_URL: string = import.meta.env.VITE_BACKEND_URL ?? "";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app container");
new App(root, new ApiClient(BASE_URL));
