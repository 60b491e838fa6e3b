"""Typed readers for the three CSV schemas the sampling CLI emits.

Each schema is a tuple of ``(column, converter)`` pairs.  ``read_table``
checks the header before touching any data and points at the exact
column (and row) when something does not fit, so a mismatched or stale
file fails loudly instead of producing a silently wrong figure.
"""

import csv


class SchemaError(ValueError):
    """A CSV file does not match the schema expected for its plot kind."""


def _to_float(cell: str) -> float:
    return float(cell)


def _to_int(cell: str) -> int:
    return int(cell)


def _to_optional_int(cell: str):
    return int(cell) if cell != "" else None


def _to_str(cell: str) -> str:
    if cell == "":
        raise ValueError("empty")
    return cell


SCHEMAS = {
    "cloud": (("x", _to_float), ("y", _to_float), ("z", _to_float)),
    "histogram": (
        ("bin_lower", _to_float),
        ("bin_upper", _to_float),
        ("count", _to_int),
    ),
    "stats": (
        ("method", _to_str),
        ("d", _to_int),
        ("d_prime", _to_optional_int),
        ("n_pairs", _to_int),
        ("mean_hsd", _to_float),
        ("std_hsd", _to_float),
    ),
}


def read_table(path, schema_name: str) -> list[dict]:
    """Read ``path`` against a named schema; returns one dict per row."""
    columns = SCHEMAS[schema_name]
    expected = [name for name, _ in columns]
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: file is empty, expected header {expected}")
        if header != expected:
            for want, got in zip(expected, header):
                if want != got:
                    raise SchemaError(
                        f"{path}: expected column {want!r}, found {got!r}"
                    )
            missing = expected[len(header):]
            if missing:
                raise SchemaError(f"{path}: missing column {missing[0]!r}")
            raise SchemaError(
                f"{path}: unexpected column {header[len(expected)]!r}"
            )
        rows = []
        for lineno, cells in enumerate(reader, start=2):
            if len(cells) != len(columns):
                raise SchemaError(
                    f"{path}: line {lineno} has {len(cells)} fields, "
                    f"expected {len(columns)}"
                )
            row = {}
            for (name, convert), cell in zip(columns, cells):
                try:
                    row[name] = convert(cell)
                except ValueError:
                    raise SchemaError(
                        f"{path}: line {lineno}, column {name!r}: "
                        f"cannot parse {cell!r}"
                    )
            rows.append(row)
    return rows
