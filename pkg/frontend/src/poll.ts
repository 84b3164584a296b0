/**
 * Invariant status polling for the graph detail page. Polls every two
 * seconds while results are still arriving, stretches the interval when
 * nothing changed (and on fetch errors), snaps back to the base interval
 * on progress, and stops by itself once the graph is quiescent.
 */

import type { StatusResponse } from "./api.js";

export interface PollerTimers {
  schedule: (fn: () => void, ms: number) => unknown;
  cancel: (handle: unknown) => void;
}

export interface PollerOptions {
  intervalMs?: number;
  maxIntervalMs?: number;
  backoff?: number;
  timers?: PollerTimers;
  onError?: (err: unknown) => void;
}

const defaultTimers: PollerTimers = {
  schedule: (fn, ms) => setTimeout(fn, ms),
  cancel: (handle) => clearTimeout(handle as ReturnType<typeof setTimeout>),
};

function sameStatuses(a: StatusResponse | null, b: StatusResponse): boolean {
  if (a === null) return false;
  const keys = Object.keys(b.invariants);
  if (Object.keys(a.invariants).length !== keys.length) return false;
  for (const k of keys) {
    const prev = a.invariants[k];
    const cur = b.invariants[k];
    if (!prev || prev.status !== cur.status || prev.value !== cur.value) return false;
  }
  return true;
}

export class StatusPoller {
  running = false;

  private readonly fetchStatus: () => Promise<StatusResponse>;
  private readonly onUpdate: (s: StatusResponse) => void;
  private readonly base: number;
  private readonly max: number;
  private readonly backoff: number;
  private readonly timers: PollerTimers;
  private readonly onError: (err: unknown) => void;

  private delay: number;
  private last: StatusResponse | null = null;
  private handle: unknown = null;

  constructor(
    fetchStatus: () => Promise<StatusResponse>,
    onUpdate: (s: StatusResponse) => void,
    opts: PollerOptions = {},
  ) {
    this.fetchStatus = fetchStatus;
    this.onUpdate = onUpdate;
    this.base = opts.intervalMs ?? 2000;
    this.max = opts.maxIntervalMs ?? 30000;
    this.backoff = opts.backoff ?? 1.5;
    this.timers = opts.timers ?? defaultTimers;
    this.onError = opts.onError ?? (() => undefined);
    this.delay = this.base;
  }

  /** begin with an immediate poll */
  start(): void {
    if (this.running) return;
    this.running = true;
    this.delay = this.base;
    this.last = null;
    void this.tick();
  }

  stop(): void {
    this.running = false;
    if (this.handle !== null) {
      this.timers.cancel(this.handle);
      this.handle = null;
    }
  }

  private async tick(): Promise<void> {
    if (!this.running) return;
    let status: StatusResponse | null = null;
    try {
      status = await this.fetchStatus();
    } catch (err) {
      this.onError(err);
      this.delay = Math.min(this.delay * this.backoff, this.max);
    }
    if (!this.running) return;
    if (status !== null) {
      const unchanged = sameStatuses(this.last, status);
      this.last = status;
      this.onUpdate(status);
      if (status.quiescent) {
        this.stop();
        return;
      }
      this.delay = unchanged ? Math.min(this.delay * this.backoff, this.max) : this.base;
    }
    this.handle = this.timers.schedule(() => {
      this.handle = null;
      void this.tick();
    }, this.delay);
  }
}
