import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Caps:
    """Hard limits for the exhaustive routines."""

    max_vertices: int = 12
    max_oracle_proper: int = 18
    max_tangle_order: int = 4
    max_separations: int = 200_000
    max_tangles: int = 10_000
    max_matroid_elements: int = 12

    @classmethod
    def from_env(cls, **overrides) -> "Caps":
        """Defaults, then ``ENTANGLE_<FIELD>`` environment variables, then overrides."""
        caps = cls()
        for name in caps.__dataclass_fields__:
            raw = os.environ.get(f"ENTANGLE_{name.upper()}")
            if raw is not None:
                caps = replace(caps, **{name: int(raw)})
        overrides = {k: v for k, v in overrides.items() if v is not None}
        return replace(caps, **overrides)


DEFAULT_CAPS = Caps()
