"""Verification reports shared by every certification routine."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckItem:
    name: str
    max_deviation: float
    tolerance: float
    provenance: str = "derived"

    @property
    def passed(self) -> bool:
        return bool(self.max_deviation < self.tolerance)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "max_deviation": float(self.max_deviation),
            "tolerance": float(self.tolerance),
            "pass": self.passed,
            "provenance": self.provenance,
        }


@dataclass
class VerificationReport:
    items: list[CheckItem] = field(default_factory=list)

    def add(self, name: str, max_deviation: float, tolerance: float,
            provenance: str = "derived") -> CheckItem:
        item = CheckItem(name, float(max_deviation), float(tolerance), provenance)
        self.items.append(item)
        return item

    def extend(self, other: VerificationReport, prefix: str = "") -> None:
        for it in other.items:
            self.items.append(CheckItem(prefix + it.name, it.max_deviation,
                                        it.tolerance, it.provenance))

    def __getitem__(self, name: str) -> CheckItem:
        for it in self.items:
            if it.name == name:
                return it
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(it.name == name for it in self.items)

    @property
    def passed(self) -> bool:
        return all(it.passed for it in self.items)

    def failures(self) -> list[CheckItem]:
        return [it for it in self.items if not it.passed]

    def sorted(self) -> VerificationReport:
        return VerificationReport(sorted(self.items, key=lambda it: it.name))

    def summary(self) -> dict:
        n_pass = sum(it.passed for it in self.items)
        return {"passed": n_pass, "total": len(self.items)}
