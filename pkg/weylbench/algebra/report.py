# -*- coding: utf-8 -*-

"""
Verification reports: ordered named checks with a status
and a witness for every failure.
"""

from typing import Any, Dict, Iterable, List, Optional

import pandas as pd

from weylbench.config import WeylBenchConfig

PASS = "pass"
FAIL = "fail"


class Check(object):
    """
    Single verified statement.

    :param id: Position of the check within its report.
    :param name: Concrete instance, such as "x2*z3 = q*z3*x2".
    :param tag: Anchor of the statement family, such as "normal-elements".
    :param status: PASS or FAIL.
    :param witness: Rendered non-zero difference, required on failure.
    :param detail: Free text, for example the candidate which held.
    """

    def __init__(self, id: int, name: str, tag: str, status: str,
                 witness: Optional[str] = None, detail: Optional[str] = None):
        if status not in (PASS, FAIL):
            raise ValueError(f"Unknown check status \"{status}\"!")
        if status == FAIL and not witness:
            witness = "false"
        self.id = id
        self.name = name
        self.tag = tag
        self.status = status
        self.witness = witness
        self.detail = detail

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "name": self.name,
            "tag": self.tag,
            "status": self.status,
            "witness": self.witness,
            "detail": self.detail,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Check":
        return cls(data["id"], data["name"], data["tag"], data["status"],
                   data.get("witness"), data.get("detail"))

    def __str__(self) -> str:
        text = f"[{self.status}] {self.tag}: {self.name}"
        if self.detail:
            text += f" ({self.detail})"
        if self.witness and not self.passed:
            text += f", witness {self.witness}"
        return text


class Report(object):
    """
    Result of one suite run.

    :param suite: Name of the suite.
    :param params: Parameters the suite ran with.
    """

    def __init__(self, suite: str, params: Optional[Dict[str, Any]] = None):
        self._suite = suite
        self._params = dict(params or { })
        self._checks = [ ]

    @property
    def suite(self) -> str:
        return self._suite

    @property
    def params(self) -> Dict[str, Any]:
        return dict(self._params)

    @property
    def checks(self) -> List[Check]:
        return list(self._checks)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self._checks)

    def failures(self) -> List[Check]:
        return [ check for check in self._checks if not check.passed ]

    def add(self, name: str, tag: str, passed: bool,
            witness: Optional[str] = None, detail: Optional[str] = None) -> Check:
        """ Append a check, ids follow insertion order. """
        check = Check(len(self._checks) + 1, name, tag, PASS if passed else FAIL,
                      None if passed else witness, detail)
        self._checks.append(check)
        return check

    def add_difference(self, name: str, tag: str, difference: Any,
                       detail: Optional[str] = None) -> Check:
        """ Passes iff the difference is zero, the difference is the witness. """
        zero = difference == 0 if not hasattr(difference, "is_zero") else difference.is_zero()
        return self.add(name, tag, bool(zero), witness=str(difference), detail=detail)

    def add_candidates(self, name: str, tag: str, candidates: Dict[str, Any]) -> Check:
        """
        Competing readings of one statement, given as label to
        difference. Passes iff exactly one reading holds.
        """

        holding = [ label for label, difference in candidates.items()
                    if (difference.is_zero() if hasattr(difference, "is_zero") else difference == 0) ]
        if len(holding) == 1:
            return self.add(name, tag, True, detail=f"holds: {holding[0]}")
        witness = "; ".join(f"{label}: {difference}" for label, difference in candidates.items())
        return self.add(name, tag, False, witness=witness,
                        detail=f"{len(holding)} readings hold")

    def extend(self, other: "Report", prefix: Optional[str] = None):
        """ Append the checks of another report, renumbering them. """
        for check in other.checks:
            tag = f"{prefix}.{check.tag}" if prefix else check.tag
            self.add(check.name, tag, check.passed, check.witness, check.detail)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": WeylBenchConfig.REPORT_SCHEMA_VERSION,
            "suite": self._suite,
            "params": self._params,
            "passed": self.passed,
            "checks": [ check.to_dict() for check in self._checks ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Report":
        if data.get("schema") != WeylBenchConfig.REPORT_SCHEMA_VERSION:
            raise ValueError(f"Unsupported report schema {data.get('schema')}!")
        report = cls(data["suite"], data.get("params"))
        report._checks = [ Check.from_dict(check) for check in data["checks"] ]
        report._checks.sort(key=lambda check: check.id)
        return report

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [ check.to_dict() for check in self._checks ],
            columns=[ "id", "name", "tag", "status", "witness", "detail" ]
        ).set_index("id")

    def summary(self) -> str:
        failed = len(self.failures())
        return f"Suite {self._suite} {self._params}: " \
               f"{len(self._checks) - failed}/{len(self._checks)} checks passed"

    def to_string(self) -> str:
        """ Human readable table followed by the summary line. """
        if not self._checks:
            return self.summary()
        frame = self.to_frame().fillna("")
        with pd.option_context("display.max_colwidth", 80, "display.width", 200):
            table = frame.to_string()
        return f"{table}\n{self.summary()}"

    def __str__(self) -> str:
        return self.summary()


def merge_reports(suite: str, reports: Iterable[Report], params: Optional[Dict[str, Any]] = None) -> Report:
    """ Concatenate reports, tags get prefixed with the source suite. """
    merged = Report(suite, params)
    for report in reports:
        merged.extend(report, prefix=report.suite)
    return merged
