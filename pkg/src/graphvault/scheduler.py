"""Multilevel feedback queue for invariant computations.

The queue itself is a synchronous state machine with an injectable clock:
strict level priority, FIFO within a level, demotion to the next level on
expiry with recomputation from scratch, and a terminal timeout only at the
last level. Two executors drive it: a virtual-clock simulator used by tests
and offline tools, and a thread pool for the live service.

Persistence is delegated through callback hooks so the store can mirror
every status transition.
"""

from __future__ import annotations

import heapq
import threading
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .budget import Budget
from .errors import ComputationInterrupted, UnknownInvariantError

PENDING = "pending"
COMPUTING = "computing"
DONE = "done"
TIMEOUT = "timeout"

# Displayed wording for the terminal state
TIMEOUT_DISPLAY = "computation timeout"

DEFAULT_LEVELS = (60.0, 600.0, 6000.0)


@dataclass(frozen=True)
class QueueConfig:
    levels: tuple[float, ...] = DEFAULT_LEVELS
    workers: int = 1

    def __post_init__(self):
        if len(self.levels) < 1:
            raise ValueError("at least one queue level is required")
        if any(b <= a for a, b in zip(self.levels, self.levels[1:])):
            raise ValueError("level limits must be strictly increasing")
        if self.workers < 1:
            raise ValueError("at least one worker is required")


@dataclass
class Job:
    job_id: int
    graph_id: int
    invariant_id: str
    level: int = 0
    status: str = PENDING
    attempts: int = 0
    enqueue_seq: int = 0
    value: Optional[str] = None  # rendered value once done


class JobQueue:
    """MLFQ state machine. All methods take effect atomically under an
    internal lock; computations happen outside, reporting back via
    on_done / on_expiry."""

    def __init__(self, config: QueueConfig = QueueConfig(),
                 known_invariants: Optional[Iterable[str]] = None,
                 on_change: Optional[Callable[[Job], None]] = None):
        self.config = config
        self._known = set(known_invariants) if known_invariants is not None else None
        self._on_change = on_change
        self._lock = threading.RLock()
        self._jobs: dict[int, Job] = {}
        self._live: dict[tuple[int, str], int] = {}
        # (level, enqueue_seq, job_id) heap of pending work; entries go stale
        # when a job moves on, so dispatch revalidates against the job itself
        self._ready: list[tuple[int, int, int]] = []
        self._next_id = 1
        self._next_seq = 0

    def _enqueue(self, job: Job) -> None:
        heapq.heappush(self._ready, (job.level, job.enqueue_seq, job.job_id))

    def _changed(self, job: Job) -> None:
        if self._on_change is not None:
            self._on_change(job)

    def submit(self, graph_id: int, invariant_ids: Iterable[str]) -> list[int]:
        """One pending level-0 job per invariant; resubmitting a live pair
        returns the existing job id."""
        out = []
        with self._lock:
            for inv in invariant_ids:
                if self._known is not None and inv not in self._known:
                    raise UnknownInvariantError(inv)
                key = (graph_id, inv)
                live_id = self._live.get(key)
                if live_id is not None:
                    out.append(live_id)
                    continue
                job = Job(job_id=self._next_id, graph_id=graph_id,
                          invariant_id=inv, enqueue_seq=self._next_seq)
                self._next_id += 1
                self._next_seq += 1
                self._jobs[job.job_id] = job
                self._live[key] = job.job_id
                self._enqueue(job)
                self._changed(job)
                out.append(job.job_id)
        return out

    def dispatch(self) -> Optional[Job]:
        """Next pending job under strict level priority, FIFO within level;
        transitions it to computing."""
        with self._lock:
            while self._ready:
                level, seq, job_id = heapq.heappop(self._ready)
                job = self._jobs.get(job_id)
                if (job is None or job.status != PENDING
                        or (job.level, job.enqueue_seq) != (level, seq)):
                    continue  # superseded entry
                job.status = COMPUTING
                job.attempts += 1
                self._changed(job)
                return job
            return None

    def level_limit(self, job: Job) -> float:
        return self.config.levels[job.level]

    def on_done(self, job_id: int, value: str) -> None:
        with self._lock:
            job = self._jobs[job_id]
            if job.status != COMPUTING:
                return  # stale report from an abandoned worker
            job.status = DONE
            job.value = value
            del self._live[(job.graph_id, job.invariant_id)]
            self._changed(job)

    def on_expiry(self, job_id: int) -> None:
        """Budget exhausted: demote to the next level, or finalize as
        timeout when the job was already on the last level."""
        with self._lock:
            job = self._jobs[job_id]
            if job.status != COMPUTING:
                return
            if job.level + 1 < len(self.config.levels):
                job.level += 1
                job.status = PENDING
                job.enqueue_seq = self._next_seq
                self._next_seq += 1
                self._enqueue(job)
            else:
                job.status = TIMEOUT
                del self._live[(job.graph_id, job.invariant_id)]
            self._changed(job)

    def recover(self) -> int:
        """Crash recovery: every computing job reverts to pending at its
        current level. Returns how many were reverted."""
        with self._lock:
            reverted = 0
            for job in sorted(self._jobs.values(), key=lambda j: j.enqueue_seq):
                if job.status == COMPUTING:
                    job.status = PENDING
                    self._enqueue(job)
                    reverted += 1
                    self._changed(job)
            return reverted

    def status(self, graph_id: int) -> dict[str, Job]:
        with self._lock:
            return {job.invariant_id: Job(**vars(job))
                    for job in self._jobs.values() if job.graph_id == graph_id}

    def jobs_snapshot(self) -> list[Job]:
        with self._lock:
            return [Job(**vars(job)) for job in self._jobs.values()]

    def has_pending(self) -> bool:
        with self._lock:
            return any(j.status == PENDING for j in self._jobs.values())

    def load(self, jobs: Iterable[Job]) -> None:
        """Rehydrate persisted jobs (store restart path)."""
        with self._lock:
            for job in jobs:
                self._jobs[job.job_id] = job
                if job.status in (PENDING, COMPUTING):
                    self._live[(job.graph_id, job.invariant_id)] = job.job_id
                if job.status == PENDING:
                    self._enqueue(job)
                self._next_id = max(self._next_id, job.job_id + 1)
                self._next_seq = max(self._next_seq, job.enqueue_seq + 1)


class VirtualClock:
    def __init__(self, start: float = 0.0):
        self._now = start

    def now(self) -> float:
        return self._now

    def advance(self, dt: float) -> None:
        self._now += dt


@dataclass(frozen=True)
class SimulatedEvent:
    time: float
    job_id: int
    graph_id: int
    invariant_id: str
    level: int
    outcome: str  # done | demoted | timeout


def simulate(queue: JobQueue, durations: dict[tuple[int, str], float],
             clock: Optional[VirtualClock] = None,
             workers: int = 1) -> list[SimulatedEvent]:
    """Run the queue to quiescence under a virtual clock.

    `durations` maps (graph id, invariant id) to the true wall-clock cost of
    one from-scratch computation; demotion restarts it in full. Returns the
    completion events in time order (deterministic for fixed inputs).
    """
    clock = clock or VirtualClock()
    events: list[SimulatedEvent] = []
    # (finish_time, seq, job, expired) heap entries; seq breaks ties stably
    running: list[tuple[float, int, Job, bool]] = []
    seq = 0

    def fill_workers() -> None:
        nonlocal seq
        while len(running) < workers:
            job = queue.dispatch()
            if job is None:
                return
            cost = durations[(job.graph_id, job.invariant_id)]
            limit = queue.level_limit(job)
            expired = cost > limit
            finish = clock.now() + min(cost, limit)
            heapq.heappush(running, (finish, seq, job, expired))
            seq += 1

    fill_workers()
    while running:
        finish, _, job, expired = heapq.heappop(running)
        clock.advance(finish - clock.now())
        ran_at = job.level
        if expired:
            queue.on_expiry(job.job_id)
            after = queue.status(job.graph_id)[job.invariant_id]
            outcome = "timeout" if after.status == TIMEOUT else "demoted"
        else:
            queue.on_done(job.job_id, "")
            outcome = "done"
        events.append(SimulatedEvent(clock.now(), job.job_id, job.graph_id,
                                     job.invariant_id, ran_at, outcome))
        fill_workers()
    return events


class ThreadedScheduler:
    """Live executor: worker threads pull jobs and run the computer function
    under a per-level budget.

    The computer is expected to poll its budget; a worker that misses its
    deadline gets a one-second grace, after which it is abandoned (daemon
    thread) and its eventual result discarded by the state machine.
    """

    def __init__(self, queue: JobQueue,
                 computer: Callable[[int, str, Budget], str],
                 workers: int = 1, poll_interval: float = 0.05):
        self.queue = queue
        self.computer = computer
        self.workers = workers
        self.poll_interval = poll_interval
        self._stop = threading.Event()
        self._threads: list[threading.Thread] = []

    def start(self) -> None:
        for i in range(self.workers):
            t = threading.Thread(target=self._worker_loop,
                                 name=f"invariant-worker-{i}", daemon=True)
            t.start()
            self._threads.append(t)

    def stop(self, wait: bool = True) -> None:
        self._stop.set()
        if wait:
            for t in self._threads:
                t.join(timeout=2.0)

    def _worker_loop(self) -> None:
        while not self._stop.is_set():
            job = self.queue.dispatch()
            if job is None:
                self._stop.wait(self.poll_interval)
                continue
            self._run_job(job)

    def _run_job(self, job: Job) -> None:
        limit = self.queue.level_limit(job)
        budget = Budget(seconds=limit)
        result: dict[str, str] = {}

        def body() -> None:
            try:
                result["value"] = self.computer(job.graph_id, job.invariant_id, budget)
            except ComputationInterrupted:
                result["expired"] = "1"
            except Exception as exc:  # a crashing computer behaves like expiry
                result["error"] = str(exc)

        runner = threading.Thread(target=body, daemon=True)
        runner.start()
        runner.join(timeout=limit + 1.0)
        if runner.is_alive():
            budget.cancel()
            runner.join(timeout=1.0)  # grace for the cancel poll to land
        if "value" in result:
            self.queue.on_done(job.job_id, result["value"])
        else:
            self.queue.on_expiry(job.job_id)

    def drain(self, timeout: float = 60.0) -> bool:
        """Wait until no pending or computing jobs remain."""
        deadline = time.monotonic() + timeout
        while time.monotonic() < deadline:
            snapshot = self.queue.jobs_snapshot()
            if not any(j.status in (PENDING, COMPUTING) for j in snapshot):
                return True
            time.sleep(0.02)
        return False
