"""Collects one PASS/FAIL line per acceptance criterion for the terminal summary."""
from contextlib import contextmanager

LINES: list[str] = []


@contextmanager
def criterion(label: str):
    try:
        yield
    except BaseException as exc:
        line = f"FAIL  {label}: {type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
        LINES.append(line)
        print(line)
        raise
    line = f"PASS  {label}"
    LINES.append(line)
    print(line)
