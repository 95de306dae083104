#!/usr/bin/env -S uv run python
"""Check the README configuration table against ``edgelab.config.Settings``.

Every settings field must have a row whose name carries the env prefix and
whose default column matches the field default.
"""

from __future__ import annotations

import re
import sys
from pathlib import Path

README = Path(__file__).resolve().parent.parent / "README.md"
_ROW = re.compile(r"^\|\s*`(EDGELAB_\w+)`\s*\|\s*`([^`]*)`\s*\|", re.MULTILINE)


def _render(value: object) -> str:
    return str(value).lower() if isinstance(value, bool) else str(value)


def settings_table() -> dict[str, str]:
    from edgelab.config import Settings

    prefix = Settings.model_config.get("env_prefix", "")
    return {
        f"{prefix}{name.upper()}": _render(field.default)
        for name, field in Settings.model_fields.items()
    }


def table_problems(readme_text: str) -> list[str]:
    documented = dict(_ROW.findall(readme_text))
    problems = []
    for name, default in settings_table().items():
        if name not in documented:
            problems.append(f"{name}: missing")
        elif documented[name] != default:
            problems.append(f"{name}: README says {documented[name]!r}, Settings has {default!r}")
    problems += [f"{name}: not a Settings field" for name in documented.keys() - settings_table()]
    return sorted(problems)


def main() -> int:
    problems = table_problems(README.read_text(encoding="utf-8"))
    for line in problems:
        print(line)
    return 1 if problems else 0


if __name__ == "__main__":
    sys.exit(main())
