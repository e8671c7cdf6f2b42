"""Check records and the machine-readable discrepancy ledger.

Identity suites produce flat records.  Records with status "pass"/"fail"
are engine assertions and drive exit status; records with status
"residual" are adjudications of displayed closed forms (the ledger proper)
and never fail a run on their own.  Serialization is deterministic:
records are sorted by their full key and dumped with sorted keys, so a
ledger file is byte-identical across runs.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Iterable, List, Sequence, Tuple

PASS = "pass"
FAIL = "fail"
RESIDUAL = "residual"


@dataclass(frozen=True)
class CheckRecord:
    suite: str
    identity: str
    preset: str
    indices: Tuple[int, ...]
    status: str
    detail: str = ""

    def sort_key(self):
        return (self.suite, self.identity, self.preset, self.indices)


def sort_records(records: Iterable[CheckRecord]) -> List[CheckRecord]:
    return sorted(records, key=CheckRecord.sort_key)


def summarize(records: Sequence[CheckRecord]) -> Tuple[int, int, int]:
    n_pass = sum(1 for r in records if r.status == PASS)
    n_fail = sum(1 for r in records if r.status == FAIL)
    n_res = sum(1 for r in records if r.status == RESIDUAL)
    return n_pass, n_fail, n_res


def records_to_json(records: Iterable[CheckRecord]) -> str:
    payload = [asdict(r) for r in sort_records(records)]
    for entry in payload:
        entry["indices"] = list(entry["indices"])
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def ledger_to_json(records: Iterable[CheckRecord]) -> str:
    """Serialize only the residual (adjudication) records."""
    return records_to_json([r for r in records if r.status == RESIDUAL])


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)
