// Browser bundle entry: exposes the snapshot extractor for injection into
// a live page (devtools, automation). Prints the snapshot JSON.
import { capture, captureToJson } from "./extractor";

(window as unknown as { mamlCapture: () => Promise<string> }).mamlCapture = async () => {
  const json = captureToJson(await capture(window));
  console.log(json);
  return json;
};
