"""Common test fixtures and helpers."""

import os
import subprocess
import sys
from pathlib import Path

import pytest

from edgelab.config import Settings

SRC = Path(__file__).resolve().parent.parent / "src"


def run_cli(*args: str, env_override: dict[str, str] | None = None) -> subprocess.CompletedProcess:
    """Run the CLI via ``python -m edgelab`` against the source tree."""
    env = os.environ.copy()
    env["PYTHONPATH"] = os.pathsep.join(filter(None, [str(SRC), env.get("PYTHONPATH")]))
    if env_override:
        env.update(env_override)
    return subprocess.run(
        [sys.executable, "-m", "edgelab", *args],
        capture_output=True,
        text=True,
        env=env,
    )


@pytest.fixture
def settings(tmp_path):
    return Settings(output_dir=str(tmp_path), threads=1)
