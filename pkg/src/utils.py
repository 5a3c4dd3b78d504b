import re

import numpy as np
import numpy.typing as npt

FLOAT_FORMAT = ".17g"

_RANGE_PATTERN = re.compile(
    r"^\s*([-+0-9.eE]+)\s*:\s*([-+0-9.eE]+)\s*:\s*([-+0-9.eE]+)\s*$"
)


def format_float(value: float) -> str:
    """Format a float so that it parses back to the identical value."""
    return format(float(value), FLOAT_FORMAT)


def parse_fraction_range(text: str) -> list[float]:
    """Parse a MATLAB-style ``start:step:stop`` range or a comma list.

    The stop value is inclusive up to a rounding slack of 1e-9 * step.
    e.g. "0.05:0.05:0.5" -> [0.05, 0.1, ..., 0.5]
    """
    match = _RANGE_PATTERN.match(text)
    if match is None:
        try:
            return [float(part) for part in text.split(",") if part.strip()]
        except ValueError:
            raise ValueError(f"Cannot parse fractions from '{text}'")

    start, step, stop = (float(group) for group in match.groups())
    if step <= 0:
        raise ValueError(f"Range step must be positive, got {step}")

    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    # Build from integer multiples so 0.05:0.05:0.5 gives 0.1, not 0.1000000001
    return [round(start + i * step, 12) for i in range(count)]


def read_signal(path: str) -> npt.NDArray[np.float64]:
    """Read a vertex signal stored as one real value per line."""
    values = []
    with open(path) as f:
        for line in f:
            line = line.split("#", 1)[0].strip()
            if line:
                values.append(float(line))
    return np.asarray(values, dtype=np.float64)


def write_signal(path: str, values: npt.ArrayLike) -> None:
    """Write a vertex signal as one real value per line."""
    with open(path, "w") as f:
        for value in np.asarray(values, dtype=np.float64):
            f.write(format_float(value) + "\n")
