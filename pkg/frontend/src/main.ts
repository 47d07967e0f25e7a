/** Browser entry point: mount the explorer against the serving origin. */

import { createClient } from "./api.js";
import { createApp } from "./app.js";

createApp(document, createClient(""));
