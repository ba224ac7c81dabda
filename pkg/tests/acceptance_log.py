"""Shared store for the one-line acceptance verdicts printed after the run."""

ACCEPTANCE_LINES: dict[int, str] = {}


def record(n: int, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES[n] = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
