"""The README configuration table stays in step with Settings."""

from __future__ import annotations

from scripts.check_doc_env import README, main, settings_table, table_problems


class TestConfigurationTable:
    def test_readme_is_current(self, capsys):
        assert main() == 0
        assert capsys.readouterr().out == ""

    def test_every_field_has_a_prefixed_name(self):
        table = settings_table()
        assert table["EDGELAB_THREADS"] == "1"
        assert table["EDGELAB_FAST_LARGEST_EIGEN"] == "true"

    def test_stale_default_reported(self):
        text = README.read_text(encoding="utf-8").replace(
            "| `EDGELAB_EPSILON` | `0.15` |", "| `EDGELAB_EPSILON` | `0.2` |"
        )
        assert table_problems(text) == [
            "EDGELAB_EPSILON: README says '0.2', Settings has '0.15'"
        ]

    def test_missing_and_unknown_rows(self):
        text = "| `EDGELAB_THREADS` | `1` | x |\n| `EDGELAB_COLOUR` | `red` | x |\n"
        problems = table_problems(text)
        assert "EDGELAB_COLOUR: not a Settings field" in problems
        assert "EDGELAB_LOG_LEVEL: missing" in problems
        assert not any(p.startswith("EDGELAB_THREADS") for p in problems)
