"""Access to the data files shipped inside the package."""

from __future__ import annotations

from importlib import resources
from pathlib import Path


def data_path(name: str) -> Path:
    """Return the filesystem path of a shipped data file."""
    path = Path(str(resources.files("ladinomt").joinpath("data", name)))
    if not path.is_file():
        raise FileNotFoundError(f"shipped data file not found: {name}")
    return path


def read_data_text(name: str) -> str:
    return data_path(name).read_text(encoding="utf-8")
