from typing import Any, Literal, TypedDict

Sense = Literal["<=", "=", ">="]
Kind = Literal["positive", "negative", "null"]
Rule = Literal["cr", "er", "fs"]
ReportFormat = Literal["csv", "svg"]
CheckName = Literal[
    "demand",
    "wealthMin",
    "priceSigns",
    "consumption",
    "efficiency",
    "noEnvy",
    "fairShare",
    "weakCore",
    "solidarity",
]

# Rationals travel through JSON as integers or "p/q" strings
Rational = int | str


class ProblemDoc(TypedDict):
    agents: list[str]
    items: list[str]
    utilities: list[list[Rational]]


class _DivisionFields(TypedDict):
    allocation: list[list[Rational]]
    prices: list[Rational]
    budget: int


# solve output is a valid division document, profile included
class DivisionDoc(_DivisionFields, total=False):
    profile: list[Rational]


class SweepDoc(TypedDict):
    base: ProblemDoc
    column: str
    values: list[Rational]


class ClassificationPayload(TypedDict):
    kind: Kind
    lpValue: Rational | None


class DivisionPayload(_DivisionFields):
    profile: list[Rational]


class SolvePayload(TypedDict):
    kind: Kind | None
    rule: Rule
    divisions: list[DivisionPayload]
    profile: list[Rational] | None
    maximalFace: list[bool]


class VerifyPayload(TypedDict):
    checks: dict[CheckName, bool]
    details: dict[CheckName, str]


class SweepRow(TypedDict):
    value: Rational
    kind: Kind | None
    count: int
    vertexAllocations: int
    profiles: list[list[Rational]]
    error: str | None


class SweepPayload(TypedDict):
    rows: list[SweepRow]
    counts: list[int]


class OraclePayload(TypedDict):
    clusters: list[list[float]]
    exact: list[list[Rational]]
    matched: bool


class ReportRow(TypedDict):
    label: str
    U1: Rational
    U2: Rational


class Message(TypedDict):
    topic: str
    payload: Any


class RandomPayload(TypedDict):
    seed: int
    problem: ProblemDoc
    kind: Kind
    divisions: int | None


class ReportPayload(TypedDict):
    format: ReportFormat
    rows: list[ReportRow]
    content: str
    output: str | None
