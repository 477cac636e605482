// Browser bundle entry: installs window.MAML for transpiled pages.
import { installRuntime } from "./runtime";

installRuntime(window);
