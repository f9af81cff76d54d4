"""Product-one sequences, Davenport constants and directed Cayley diameters of finite groups."""

__version__ = "0.1.0"

from .group import Group, Automorphisms, GroupError, build_group, automorphisms  # noqa: E402

__all__ = ["Group", "Automorphisms", "GroupError", "build_group", "automorphisms", "__version__"]
