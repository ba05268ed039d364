"""
Run the test suite with marker selection and optional coverage.

The seeded 1000-word sweeps are marked ``slow`` and only run with ``--slow``.
"""
import argparse
import subprocess
import sys
from typing import List


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description="Run the tqft2d test suite")
    parser.add_argument("--coverage", action="store_true", help="Report coverage of the app package")
    parser.add_argument("--html", action="store_true", help="Also write an HTML coverage report")
    parser.add_argument("--unit-only", action="store_true", help="Run only tests marked unit")
    parser.add_argument("--integration-only", action="store_true", help="Run only tests marked integration")
    parser.add_argument("--slow", action="store_true", help="Include the full seeded sweeps")
    parser.add_argument("test_path", nargs="?", default="tests", help="Test file or directory")
    return parser.parse_args()


def build_command(args: argparse.Namespace) -> List[str]:
    cmd = [sys.executable, "-m", "pytest", "-v"]

    markers = []
    if args.unit_only:
        markers.append("unit")
    elif args.integration_only:
        markers.append("integration")
    if not args.slow:
        markers.append("not slow")
    if markers:
        cmd.extend(["-m", " and ".join(markers)])

    if args.coverage:
        cmd.extend(["--cov=app", "--cov-report=term-missing"])
        if args.html:
            cmd.append("--cov-report=html")

    cmd.append(args.test_path)
    return cmd


def main() -> int:
    return subprocess.run(build_command(parse_args())).returncode


if __name__ == "__main__":
    sys.exit(main())
