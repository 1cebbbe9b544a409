"""Rewrite tests/golden/*.out from the canned CLI configs.

Run after an intentional output change, then review the diff.
"""
import io
import json
from pathlib import Path

from survival.cli import main

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def run(argv):
    buf = io.StringIO()
    code = main(argv, stdout=buf)
    return code, buf.getvalue()


def regen():
    configs = json.loads((GOLDEN / "configs.json").read_text())
    codes = {}
    for name, argv in configs.items():
        code, out = run(argv)
        (GOLDEN / f"{name}.out").write_text(out)
        codes[name] = code
        print(f"{name}: exit {code}, {len(out.splitlines())} lines")
    (GOLDEN / "exit_codes.json").write_text(json.dumps(codes, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    regen()
