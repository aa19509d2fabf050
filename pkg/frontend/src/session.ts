// UI session state machine, kept free of DOM concerns so it can be tested
// headlessly. One session per tab. Translate requests carry sequence
// numbers and stale responses are dropped; contribute allows a single
// in-flight request (double clicks are no-ops while SUBMITTING).

import { ApiError, contribute, translateText, TraceEntry } from "./api";

export type SubmissionStatus = "IDLE" | "SUBMITTING" | "ACCEPTED" | "FAILED";

export interface ContributeOutcome {
  ok: boolean;
  id?: number;
  reason?: string;
}

export class UiSession {
  sourceText = "";
  machineOutput: string | null = null;
  trace: TraceEntry[] = [];
  editBuffer = "";
  status: SubmissionStatus = "IDLE";
  error: string | null = null;
  lastContributionId: number | null = null;

  private translateSeq = 0;
  private lastTranslatedSource: string | null = null;

  setSource(text: string): void {
    this.sourceText = text;
    if (this.status === "ACCEPTED" || this.status === "FAILED") {
      this.status = "IDLE";
    }
  }

  get canTranslate(): boolean {
    return this.sourceText.trim().length > 0;
  }

  /** Contribute only makes sense once there is machine output to correct,
   *  and either the user changed it or explicitly confirms it unchanged. */
  canContribute(confirmUnchanged = false): boolean {
    if (this.machineOutput === null || this.status === "SUBMITTING") {
      return false;
    }
    if (this.editBuffer.trim().length === 0) {
      return false;
    }
    return this.editBuffer !== this.machineOutput || confirmUnchanged;
  }

  async translate(): Promise<void> {
    if (!this.canTranslate) {
      return;
    }
    const seq = ++this.translateSeq;
    const source = this.sourceText;
    this.error = null;
    try {
      const response = await translateText(source);
      if (seq !== this.translateSeq) {
        return; // superseded by newer input
      }
      // displayed output is always the response body, verbatim
      this.machineOutput = response.output;
      this.trace = response.trace;
      this.editBuffer = response.output;
      this.lastTranslatedSource = source;
      this.status = "IDLE";
    } catch (err) {
      if (seq !== this.translateSeq) {
        return;
      }
      this.error = err instanceof Error ? err.message : String(err);
      // input preserved; previous output left in place
    }
  }

  setEditBuffer(text: string): void {
    this.editBuffer = text;
  }

  async contribute(confirmUnchanged = false, clientNote?: string): Promise<ContributeOutcome> {
    if (this.status === "SUBMITTING") {
      return { ok: false, reason: "a submission is already in flight" };
    }
    if (!this.canContribute(confirmUnchanged)) {
      return { ok: false, reason: "nothing to contribute yet" };
    }
    this.status = "SUBMITTING";
    this.error = null;
    try {
      const result = await contribute({
        source_lang: "spa",
        target_lang: "lad",
        source_text: this.lastTranslatedSource ?? this.sourceText,
        machine_output: this.machineOutput ?? "",
        corrected_text: this.editBuffer,
        client_note: clientNote,
      });
      this.status = "ACCEPTED";
      this.lastContributionId = result.id;
      // fields clear except the source, ready for the next correction
      this.machineOutput = null;
      this.trace = [];
      this.editBuffer = "";
      return { ok: true, id: result.id };
    } catch (err) {
      this.status = "FAILED";
      if (err instanceof ApiError && err.status === 400) {
        this.error = `rejected: ${err.message}`;
      } else {
        this.error = err instanceof Error ? err.message : String(err);
      }
      // buffers intact so the user can retry without data loss
      return { ok: false, reason: this.error ?? undefined };
    }
  }
}
