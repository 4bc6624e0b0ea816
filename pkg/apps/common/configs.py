from typing import Any, ClassVar

from django.conf import settings


class StableConfigs:
    """
    Base accessor for one section of ``settings.STABLE_CONFIG``.
    Subclasses name their section and ship defaults, so the apps keep working when the
    project settings omit a section or a key.
    """

    SECTION: ClassVar[str] = ""
    DEFAULT_CONFIG: ClassVar[dict[str, Any]] = {}

    @classmethod
    def get_config(cls) -> dict[str, Any]:
        """Returns the section merged over its defaults."""
        section = getattr(settings, "STABLE_CONFIG", {}).get(cls.SECTION, {})
        return {**cls.DEFAULT_CONFIG, **section}

    @classmethod
    def get(cls, key: str) -> Any:
        return cls.get_config()[key]
