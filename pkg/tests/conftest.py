"""Shared fixtures."""

from __future__ import annotations

import sys

import pytest

from graphvault.scheduler import QueueConfig
from graphvault.store import Store


def pytest_runtest_logreport(report):
    """One verdict line per end-to-end check, straight to the terminal."""
    if report.when != "call" or "test_acceptance" not in str(report.nodeid):
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    verdict = "PASS" if report.passed else "FAIL"
    sys.stderr.write(f"\n{name}: {verdict}\n")


@pytest.fixture
def store():
    s = Store(":memory:", queue_config=QueueConfig(levels=(60.0,)))
    yield s
    s.close()


def drain(store) -> None:
    """Run every queued job inline until the queue is quiet."""
    from graphvault.budget import NO_BUDGET
    from graphvault.store import make_computer

    computer = make_computer(store)
    while True:
        job = store.queue.dispatch()
        if job is None:
            break
        value = computer(job.graph_id, job.invariant_id, NO_BUDGET)
        store.queue.on_done(job.job_id, value)
