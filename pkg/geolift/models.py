"""Pydantic models for geolift data structures"""

import os
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

SERIES = ("A", "B", "C", "D", "E", "F", "G")


class CartanDatum(BaseModel):
    """
    Cartan datum of a finite root system.

    Convention: ``matrix[i-1][j-1] = a_ij = <alpha_j, alpha_i^vee>``, so that
    ``t^{alpha_i^vee} x_j(t') = x_j(t^{a_ij} t') t^{alpha_i^vee}``.
    """
    model_config = ConfigDict(frozen=True)

    series: str = Field(..., description="Series letter A..G")
    rank: int = Field(..., ge=1, description="Number of simple roots n")
    matrix: Tuple[Tuple[int, ...], ...] = Field(..., description="n x n Cartan matrix")

    @field_validator("series")
    @classmethod
    def validate_series(cls, v):
        if v not in SERIES:
            raise ValueError(f"series must be one of {', '.join(SERIES)}")
        return v

    @model_validator(mode="after")
    def check_matrix(self):
        """Enforce the generalized Cartan matrix axioms and the fixed convention"""
        from .cartan import standard_matrix

        a = self.matrix
        n = self.rank
        if len(a) != n or any(len(row) != n for row in a):
            raise ValueError(f"matrix must be {n}x{n}")
        for i in range(n):
            if a[i][i] != 2:
                raise ValueError(f"diagonal entry a[{i + 1}][{i + 1}] must be 2")
            for j in range(n):
                if i != j and a[i][j] > 0:
                    raise ValueError(f"off-diagonal entry a[{i + 1}][{j + 1}] must be <= 0")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise ValueError(f"a[{i + 1}][{j + 1}] and a[{j + 1}][{i + 1}] must vanish together")
        standard = standard_matrix(self.series, n)
        transposed = tuple(zip(*standard))
        # F4 and G2 duals are their own series with the transposed matrix
        allowed = [standard]
        if self.series in ("F", "G"):
            allowed.append(transposed)
        if a not in allowed:
            raise ValueError(f"matrix does not match the standard {self.series}{n} Cartan matrix")
        return self

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    def a(self, i: int, j: int) -> int:
        """a_ij with 1-based indices"""
        return self.matrix[i - 1][j - 1]


class Weight(BaseModel):
    """Integral weight in fundamental-weight coordinates"""
    model_config = ConfigDict(frozen=True)

    coords: Tuple[int, ...]

    @property
    def dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)


class Word(BaseModel):
    """Sequence of simple reflection indices (1-based)"""
    model_config = ConfigDict(frozen=True)

    letters: Tuple[int, ...] = ()
    reduced: bool = False
    longest: bool = False

    @field_validator("letters")
    @classmethod
    def validate_letters(cls, v):
        if any(i < 1 for i in v):
            raise ValueError("word letters are 1-based indices")
        return v

    def __len__(self) -> int:
        return len(self.letters)


class WeylElement(BaseModel):
    """Weyl group element as its action on fundamental-weight coordinates"""
    model_config = ConfigDict(frozen=True)

    action: Tuple[Tuple[int, ...], ...]


class BraidMove(BaseModel):
    """Elementary braid move replacing an alternating subword"""
    model_config = ConfigDict(frozen=True)

    position: int = Field(..., ge=1, description="1-based start of the replaced subword")
    kind: str = Field(..., description="commuting, A2, B2 or G2")
    length: int = Field(..., description="braid length m_ij")
    before: Tuple[int, ...]
    after: Tuple[int, ...]


class _Param(BaseModel):
    model_config = ConfigDict(frozen=True)

    word: Tuple[int, ...]
    t: Tuple[int, ...]

    @model_validator(mode="after")
    def check_vector(self):
        if len(self.t) != len(self.word):
            raise ValueError(f"|t| = {len(self.t)} but the word has length {len(self.word)}")
        if any(x < 0 for x in self.t):
            raise ValueError("parameters must be non-negative")
        return self


class LusztigParam(_Param):
    """Lusztig (PBW exponent) coordinates of a canonical basis element"""
    pass


class StringParam(_Param):
    """String coordinates of a canonical basis element, optionally tagged with lambda"""
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    weight: Optional[Tuple[int, ...]] = Field(None, alias="lambda")


class AffineMap(BaseModel):
    """t -> constant + linear . t over the integers"""
    model_config = ConfigDict(frozen=True)

    constant: Tuple[int, ...]
    linear: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def check_shape(self):
        n = len(self.constant)
        if len(self.linear) != n or any(len(row) != n for row in self.linear):
            raise ValueError(f"linear part must be {n}x{n}")
        return self

    def apply(self, t) -> Tuple[int, ...]:
        if len(t) != len(self.constant):
            raise ValueError(f"expected a vector of length {len(self.constant)}, got {len(t)}")
        return tuple(
            c + sum(m * x for m, x in zip(row, t))
            for c, row in zip(self.constant, self.linear)
        )


class VerificationReport(BaseModel):
    """Outcome of a verification harness; failures carry the evidence"""
    name: str
    passed: bool = True
    checks: int = 0
    failures: List[Dict[str, Any]] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)

    def record(self, ok: bool, **evidence: Any) -> bool:
        """Count one check; keep the evidence when it fails"""
        self.checks += 1
        if not ok:
            self.passed = False
            self.failures.append(evidence)
        return ok

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.checks += other.checks
        self.passed = self.passed and other.passed
        self.failures.extend({"from": other.name, **f} for f in other.failures)
        return self


class ParamRequest(BaseModel):
    """CLI JSON input: {"word": [...], "t": [...], "lambda": [...]}"""
    model_config = ConfigDict(populate_by_name=True)

    word: Tuple[int, ...]
    t: Optional[Tuple[int, ...]] = None
    weight: Optional[Tuple[int, ...]] = Field(None, alias="lambda")
    target: Optional[Tuple[int, ...]] = Field(None, description="second word, when the command needs one")


class ParamResult(BaseModel):
    """CLI JSON output: {"word_out": [...], "t_out": [...]}"""
    word_out: Tuple[int, ...]
    t_out: Tuple[int, ...]


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


class RunConfig(BaseModel):
    """
    Settings shared by CLI subcommands.

    Unset numeric fields fall back to ``GEOLIFT_SEED``, ``GEOLIFT_SAMPLES``,
    ``GEOLIFT_BOX`` and ``GEOLIFT_CRYSTAL_BOUND``.
    """
    model_config = ConfigDict(populate_by_name=True)

    series: str = "A"
    rank: int = Field(2, ge=1)
    weight: Optional[Tuple[int, ...]] = Field(None, alias="lambda")
    seed: int = 42
    samples: int = Field(100, ge=1)
    box: int = Field(20, ge=0, description="half-width M of sampling boxes")
    crystal_bound: int = Field(100_000, ge=1)
    max_dim: int = Field(1000, ge=1, description="largest A2 crystal swept by the oracle suite")
    output: Optional[str] = None

    @classmethod
    def from_env(cls, **overrides: Any) -> "RunConfig":
        """Build a config from environment defaults, then explicit overrides"""
        values: Dict[str, Any] = {
            "seed": _env_int("GEOLIFT_SEED", 42),
            "samples": _env_int("GEOLIFT_SAMPLES", 100),
            "box": _env_int("GEOLIFT_BOX", 20),
            "crystal_bound": _env_int("GEOLIFT_CRYSTAL_BOUND", 100_000),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
