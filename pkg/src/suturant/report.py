"""Pass/fail reports returned by the validators (never raised)."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Entry:
    check: str
    ok: bool
    witness: str = ""

    def __str__(self):
        mark = "ok" if self.ok else "FAIL"
        tail = f"  [{self.witness}]" if self.witness and not self.ok else ""
        return f"{mark:4} {self.check}{tail}"


@dataclass
class Report:
    entries: list[Entry] = field(default_factory=list)

    def add(self, check, ok, witness=""):
        self.entries.append(Entry(check, bool(ok), witness))

    @property
    def passed(self):
        return all(e.ok for e in self.entries)

    def failures(self):
        return [e for e in self.entries if not e.ok]

    def __str__(self):
        return "\n".join(str(e) for e in self.entries)
