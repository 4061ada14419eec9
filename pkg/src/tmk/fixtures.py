"""Built-in datasets shipped as JSON next to the code."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources


@lru_cache(maxsize=None)
def load(name: str) -> dict:
    text = resources.files("tmk").joinpath("data").joinpath(f"{name}.json").read_text()
    return json.loads(text)


def names() -> list[str]:
    return sorted(p.name[:-5] for p in resources.files("tmk").joinpath("data").iterdir()
                  if p.name.endswith(".json"))
