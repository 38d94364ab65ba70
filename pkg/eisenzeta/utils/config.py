"""
Run configuration shared by the command-line surface and the suite runner

A config file is plain text with one `key = value` per line. Keys are the long
flag names (`ell-max` or `ell_max`), `#` starts a comment and lists are comma
separated:

```text
# verify.conf
types = I, III, IV
ell-max = 24
primes = 5, 7, 11
tol = 1e-9
workers = single
```
"""

import multiprocessing
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Dict, Mapping, Optional, Tuple

from sympy import isprime

from eisenzeta.errors import ConfigError

TYPES = ("I", "II", "III", "IV")
WHAT_VALUES = ("EIS", "ZETA", "THETA")
METHODS = ("LINEAR", "SERIES", "CLOSED", "ALL")
FORMATS = ("table", "json", "csv", "latex")
WORKERS = ("single", "half", "most", "max")


def parse_list(text: str) -> Tuple[str, ...]:
    return tuple(part.strip() for part in text.split(",") if part.strip())


def parse_types(text: str) -> Tuple[str, ...]:
    types = tuple(t.upper() for t in parse_list(text))
    bad = [t for t in types if t not in TYPES]
    if bad or not types:
        raise ConfigError(f"Invalid type list: {text!r}. Choose from {', '.join(TYPES)}")
    return types


def parse_int_list(text: str) -> Tuple[int, ...]:
    try:
        values = tuple(int(part) for part in parse_list(text))
    except ValueError:
        raise ConfigError(f"Invalid integer list: {text!r}") from None
    if not values:
        raise ConfigError("Empty integer list")
    return values


def parse_range(text: str) -> Tuple[int, int]:
    """Parse "A..B" into (A, B)"""

    start, sep, stop = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return int(start), int(stop)
    except ValueError:
        raise ConfigError(f"Invalid range: {text!r}, expected A..B") from None


def resolve_workers(cpu_core_utilization: str) -> int:
    """
    Number of worker processes for a utilization level.

    - `single`: 1 CPU core
    - `half`: half of the available CPU cores
    - `most`: all available CPU cores except one
    - `max`: all available CPU cores
    """

    if cpu_core_utilization == "single":
        return 1
    if cpu_core_utilization == "half":
        return max(1, multiprocessing.cpu_count() // 2)
    if cpu_core_utilization == "most":
        return max(1, multiprocessing.cpu_count() - 1)
    if cpu_core_utilization == "max":
        return max(1, multiprocessing.cpu_count())
    raise ConfigError(f"Invalid CPU core utilities: {cpu_core_utilization}")


@dataclass(frozen=True)
class RunConfig:
    """
    Validated settings of one run

    Attributes:
        types: Code types to process
        ell_min: Smallest weight of sweeps
        ell_max: Largest weight of sweeps
        primes: Odd primes of integrality sweeps
        what: Integrality targets (EIS, ZETA, THETA)
        method: Zeta method (LINEAR, SERIES, CLOSED, ALL)
        tol: RHA and interlacing tolerance
        order: Theta truncation order in lattice units
        step: Interlacing step override, None for each type's natural step
        format: Output format (table, json, csv, latex)
        out: Output path, None for stdout
        workers: Worker pool size (single, half, most, max)
    """

    types: Tuple[str, ...] = TYPES
    ell_min: int = 1
    ell_max: int = 40
    primes: Tuple[int, ...] = (5, 7, 11, 13)
    what: Tuple[str, ...] = WHAT_VALUES
    method: str = "ALL"
    tol: float = 1e-9
    order: int = 200
    step: Optional[int] = None
    format: str = "table"
    out: Optional[str] = None
    workers: str = "single"

    def validate(self) -> "RunConfig":
        """
        Reject invalid values before any computation.

        Raises:
            ConfigError: On the first invalid field
        """

        if not self.types or any(t not in TYPES for t in self.types):
            raise ConfigError(f"Invalid types: {self.types}")
        if self.ell_min < 1 or self.ell_max < self.ell_min:
            raise ConfigError(f"Invalid weight range: {self.ell_min}..{self.ell_max}")
        for p in self.primes:
            if p < 3 or not isprime(p):
                raise ConfigError(f"Not an odd prime: {p}")
        if not self.what or any(w not in WHAT_VALUES for w in self.what):
            raise ConfigError(f"Invalid integrality targets: {self.what}")
        if self.method not in METHODS:
            raise ConfigError(f"Invalid method: {self.method}")
        if not self.tol > 0:
            raise ConfigError(f"Tolerance must be positive, got {self.tol}")
        if self.order < 1:
            raise ConfigError(f"Truncation order must be positive, got {self.order}")
        if self.step is not None and self.step < 1:
            raise ConfigError(f"Interlacing step must be positive, got {self.step}")
        if self.format not in FORMATS:
            raise ConfigError(f"Invalid format: {self.format}")
        if self.workers not in WORKERS:
            raise ConfigError(f"Invalid CPU core utilities: {self.workers}")
        return self

    def num_workers(self) -> int:
        return resolve_workers(self.workers)

    def merged(self, overrides: Mapping[str, object]) -> "RunConfig":
        """Copy with every non-None override applied, then validated"""

        known = {f.name for f in fields(self)}
        changes = {k: v for k, v in overrides.items() if v is not None and k in known}
        return replace(self, **changes).validate()

    @classmethod
    def from_mapping(cls, values: Mapping[str, str]) -> "RunConfig":
        """
        Build a config from raw `key -> text` pairs, as read from a file.

        Raises:
            ConfigError: On unknown keys or unparsable values
        """

        converters = {
            "types": parse_types,
            "ell-min": int,
            "ell-max": int,
            "primes": parse_int_list,
            "what": lambda text: tuple(w.upper() for w in parse_list(text)),
            "method": str.upper,
            "tol": float,
            "order": int,
            "step": int,
            "format": str.lower,
            "out": str,
            "workers": str.lower,
        }
        kwargs = {}
        for key, text in values.items():
            name = key.strip().lower().replace("_", "-")
            if name not in converters:
                raise ConfigError(f"Unknown config key: {key}")
            try:
                kwargs[name.replace("-", "_")] = converters[name](text.strip())
            except ValueError as error:
                raise ConfigError(f"Invalid value for {key}: {text!r} ({error})") from None
        return cls(**kwargs).validate()


def read_config_file(path: str) -> Dict[str, str]:
    """
    Read `key = value` lines.

    Raises:
        ConfigError: If the file is missing or a line has no `=`
    """

    file = Path(path)
    if not file.is_file():
        raise ConfigError(f"Config file not found: {path}")

    values = {}
    for number, line in enumerate(file.read_text().splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep or not key.strip():
            raise ConfigError(f"{path}:{number}: expected key = value")
        values[key.strip()] = value.strip()
    return values


def load_config(path: str) -> RunConfig:
    return RunConfig.from_mapping(read_config_file(path))
