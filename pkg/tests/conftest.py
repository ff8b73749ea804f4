"""Shared test helpers."""

from __future__ import annotations

import io
from contextlib import redirect_stderr, redirect_stdout

from abszeta.cli import run


def run_cli(*argv: str) -> tuple[int, str, str]:
    """Invoke the CLI in-process; returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run(list(argv))
    return code, out.getvalue(), err.getvalue()
