"""Verification reports: per-relation outcomes with exact (boolean) pass/fail.

There is no tolerance field anywhere: a check passes iff its residual is
exactly zero in the scalar field.  Skipped entries record relations whose
terms fall outside an instance's declared truncation window, so gaps are
visible instead of silently passing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
SKIP = "skipped"


@dataclass
class CheckEntry:
    relation: str
    params: dict
    status: str
    location: dict | None = None
    note: str = ""

    def to_json(self):
        out = {"relation": self.relation, "params": self.params, "status": self.status}
        if self.location is not None:
            out["location"] = self.location
        if self.note:
            out["note"] = self.note
        return out

    @classmethod
    def from_json(cls, obj):
        return cls(obj["relation"], obj.get("params", {}), obj["status"],
                   obj.get("location"), obj.get("note", ""))


@dataclass
class VerificationReport:
    title: str = ""
    config: dict = field(default_factory=dict)
    entries: list = field(default_factory=list)

    def add(self, relation, params, status, location=None, note=""):
        self.entries.append(CheckEntry(relation, dict(params), status, location, note))

    def record(self, relation, params, residual_is_zero, location=None, note=""):
        self.add(relation, params, PASS if residual_is_zero else FAIL, location, note)

    def skip(self, relation, params, note=""):
        self.add(relation, params, SKIP, note=note)

    def merge(self, other):
        self.entries.extend(other.entries)
        return self

    def counts(self):
        out = {PASS: 0, FAIL: 0, SKIP: 0}
        for e in self.entries:
            out[e.status] += 1
        return out

    @property
    def ok(self):
        return all(e.status != FAIL for e in self.entries)

    def failures(self):
        return [e for e in self.entries if e.status == FAIL]

    def summary(self):
        c = self.counts()
        return (f"{self.title or 'verification'}: {c[PASS]} passed, "
                f"{c[FAIL]} failed, {c[SKIP]} skipped")

    def by_relation(self):
        out = {}
        for e in self.entries:
            out.setdefault(e.relation, []).append(e)
        return out

    def to_json(self):
        from . import __version__
        return {
            "title": self.title,
            "tool_version": __version__,
            "config": self.config,
            "counts": self.counts(),
            "ok": self.ok,
            "entries": [e.to_json() for e in self.entries],
        }

    @classmethod
    def from_json(cls, obj):
        rep = cls(obj.get("title", ""), obj.get("config", {}))
        rep.entries = [CheckEntry.from_json(e) for e in obj.get("entries", [])]
        return rep

    def dump(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json(), fh, indent=2, sort_keys=True)
            fh.write("\n")

    def to_csv_rows(self):
        rows = [("relation", "status", "params", "location", "note")]
        for e in self.entries:
            rows.append((
                e.relation,
                e.status,
                json.dumps(e.params, sort_keys=True),
                json.dumps(e.location, sort_keys=True) if e.location else "",
                e.note,
            ))
        return rows

    def write_csv(self, path):
        import csv
        with open(path, "w", newline="", encoding="utf-8") as fh:
            csv.writer(fh).writerows(self.to_csv_rows())
