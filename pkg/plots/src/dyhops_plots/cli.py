"""`plot --run DIR --figs spectra,errors --out DIR`."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .figures import plot_error_curves, plot_spectra
from .io import SchemaError

_FIGS = {"spectra": plot_spectra, "errors": plot_error_curves}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="plot")
    parser.add_argument("--run", type=Path, required=True,
                        help="completed dyhops run directory")
    parser.add_argument("--figs", default="spectra,errors",
                        help="comma-separated subset of: spectra, errors")
    parser.add_argument("--out", type=Path, default=None,
                        help="image output directory (default: RUN/figures)")
    args = parser.parse_args(argv)
    selected = [f for f in args.figs.split(",") if f]
    unknown = [f for f in selected if f not in _FIGS]
    if unknown:
        parser.error(f"unknown figure selection {unknown}; choose from {list(_FIGS)}")
    try:
        for name in selected:
            for path in _FIGS[name](args.run, args.out):
                print(path)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
