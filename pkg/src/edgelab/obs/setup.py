"""Process-wide logging setup and the run identifier."""

from __future__ import annotations

import logging
import sys
import uuid
from contextvars import ContextVar

from edgelab.config import Settings

_FORMAT = "%(asctime)s %(levelname)s %(name)s [run=%(run_id)s] %(message)s"

_run_id: ContextVar[str] = ContextVar("edgelab_run_id", default="-")


class _RunIdFilter(logging.Filter):
    """Stamp every record with the current run id."""

    def filter(self, record: logging.LogRecord) -> bool:
        record.run_id = _run_id.get()
        return True


def current_run_id() -> str:
    return _run_id.get()


def init_observability(settings: Settings | None = None, *, run_id: str | None = None) -> str:
    """Configure the ``edgelab`` logger on stderr and return the run id.

    Log output never goes to stdout, which carries CSV.
    """
    if settings is None:
        settings = Settings()
    rid = run_id or uuid.uuid4().hex
    _run_id.set(rid)

    logger = logging.getLogger("edgelab")
    logger.setLevel(settings.log_level)
    if not any(getattr(h, "_edgelab", False) for h in logger.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(_FORMAT))
        handler.addFilter(_RunIdFilter())
        handler._edgelab = True  # type: ignore[attr-defined]
        logger.addHandler(handler)
    return rid
