"""Regenerate the bundled su(8) reference tables under tests/fixtures/.

The four tables pin the canonical text rendering of the quotient-algebra
partitions used by the golden CLI tests.  Rerun after any deliberate
format change; content changes should never appear (the acceptance suite
checks every row against independently transcribed element sets).
"""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from qap.partition import build_qap, render_table
from qap.subalgebra import parse_label

FIXTURES = {
    "table_C_000.txt": "C_[000]",
    "table_C0_100.txt": "C^{0}_{[100]}",
    "table_C110_001-100.txt": "C^{110}_{[001,100]}",
    "table_C101000_001-010-100.txt": "C^{101000}_{[001,010,100]}",
}


def main() -> None:
    out_dir = pathlib.Path(__file__).resolve().parents[1] / "tests" / "fixtures"
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, label in FIXTURES.items():
        table = render_table(build_qap(parse_label(label)))
        (out_dir / name).write_text(table, encoding="utf-8")
        print(f"wrote {name} ({len(table)} bytes)")


if __name__ == "__main__":
    main()
