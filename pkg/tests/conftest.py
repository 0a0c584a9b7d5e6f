from __future__ import annotations

import pytest

from zetalog.cli import main


@pytest.fixture
def run_cli(capsys, monkeypatch):
    """Invoke the CLI in-process; returns (exit code, stdout, stderr)."""
    monkeypatch.delenv("ZL_MAX_WEIGHT", raising=False)

    def invoke(*argv: str):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke
