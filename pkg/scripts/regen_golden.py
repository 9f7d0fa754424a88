"""Rewrite tests/golden/*.txt from the current CLI.  Review the diff before committing."""
import contextlib
import io
import os
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from cli_cases import CASES  # noqa: E402

from bezoutmin.cli import main as cli_main  # noqa: E402


def main():
    os.chdir(ROOT / "tests" / "data")
    for name, argv in CASES.items():
        out = io.StringIO()
        with contextlib.redirect_stderr(io.StringIO()):
            code = cli_main(argv, out=out)
        (ROOT / "tests" / "golden" / f"{name}.txt").write_text(out.getvalue() + f"[exit {code}]\n", encoding="utf-8")
        print(f"{name}: exit {code}")


if __name__ == "__main__":
    main()
