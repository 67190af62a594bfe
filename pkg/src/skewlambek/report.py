from __future__ import annotations

from dataclasses import dataclass, field


class MismatchError(ValueError):
    """Cut or inverse-rule premises whose interfaces do not fit together."""


@dataclass(frozen=True)
class Issue:
    path: tuple[int, ...]  # premise indices from the root
    rule: str
    message: str

    def __str__(self) -> str:
        where = ".".join(map(str, self.path)) or "root"
        return f"[{where}] {self.rule}: {self.message}"


@dataclass
class CheckReport:
    issues: list[Issue] = field(default_factory=list)
    nodes: int = 0

    @property
    def ok(self) -> bool:
        return not self.issues

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return f"ok ({self.nodes} nodes)"
        return "\n".join(str(i) for i in self.issues)
