"""Command-line driver with a polling watch mode.

    schemaform generate --schema F --stylesheet F --out F [--watch] [--interval MS]

Exit codes: 0 ok, 1 lexical, 2 syntax, 3 binding/semantic, 4 I/O.
"""

from __future__ import annotations

import argparse
import hashlib
import logging
import os
import sys
import tempfile
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, TextIO

from .errors import CompileError
from .pipeline import compile_page

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IO = 4


@dataclass(frozen=True)
class RunConfig:
    schema_path: Path
    stylesheet_path: Path
    output_path: Path
    mode: str = "once"
    poll_interval: float = 0.5  # seconds

    def __post_init__(self) -> None:
        for field_name in ("schema_path", "stylesheet_path", "output_path"):
            if not str(getattr(self, field_name)):
                raise ValueError(f"{field_name} must not be empty")
        if self.mode not in ("once", "watch"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.poll_interval <= 0:
            raise ValueError("poll interval must be positive")


@dataclass(frozen=True)
class Diagnostic:
    stage: str
    message: str
    file: str
    line: int = 0
    column: int = 0
    severity: str = "error"

    def __str__(self) -> str:
        return f"{self.stage}:{self.file}:{self.line}:{self.column}: {self.message}"


def _write_atomic(path: Path, text: str) -> None:
    directory = path.parent if str(path.parent) else Path(".")
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def compile_files(config: RunConfig) -> tuple[int, Optional[Diagnostic]]:
    """Run the pipeline once; return the exit status and the failure, if any."""
    texts = {}
    for role, path in (("schema", config.schema_path), ("stylesheet", config.stylesheet_path)):
        try:
            texts[role] = Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            reason = exc.strerror if isinstance(exc, OSError) and exc.strerror else str(exc)
            return EXIT_IO, Diagnostic("io", f"cannot read {role}: {reason}", str(path))

    try:
        page = compile_page(texts["schema"], texts["stylesheet"])
    except CompileError as exc:
        path = config.stylesheet_path if exc.source == "stylesheet" else config.schema_path
        return exc.exit_code, Diagnostic(exc.stage, exc.message, str(path), exc.line, exc.column)

    try:
        _write_atomic(Path(config.output_path), page)
    except OSError as exc:
        return EXIT_IO, Diagnostic(
            "io", f"cannot write output: {exc.strerror or exc}", str(config.output_path)
        )
    return EXIT_OK, None


def run_once(config: RunConfig, stream: TextIO | None = None) -> int:
    status, diagnostic = compile_files(config)
    if diagnostic is not None:
        print(diagnostic, file=stream or sys.stderr)
    else:
        log.info("wrote %s", config.output_path)
    return status


def _digest(paths) -> tuple[Optional[str], ...]:
    digests = []
    for path in paths:
        try:
            digests.append(hashlib.sha256(Path(path).read_bytes()).hexdigest())
        except OSError:
            digests.append(None)
    return tuple(digests)


def run_watch(
    config: RunConfig,
    stream: TextIO | None = None,
    sleep: Callable[[float], None] = time.sleep,
    should_stop: Callable[[], bool] = lambda: False,
) -> int:
    """Compile, then recompile whenever either input's content digest changes.

    A failed cycle prints its diagnostic and leaves the previous output in
    place. Runs until ``should_stop`` returns true or the process is
    interrupted; the return value is the status of the last cycle.
    """
    inputs = (config.schema_path, config.stylesheet_path)
    last = _digest(inputs)
    status = run_once(config, stream)
    while not should_stop():
        sleep(config.poll_interval)
        current = _digest(inputs)
        if current != last:
            last = current
            log.info("input changed, regenerating")
            status = run_once(config, stream)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schemaform", description="Generate an HTML form page from a schema and a style sheet."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    gen = sub.add_parser("generate", help="compile the inputs into a page")
    gen.add_argument("--schema", required=True, type=Path, help="schema file")
    gen.add_argument("--stylesheet", required=True, type=Path, help="style sheet file")
    gen.add_argument("--out", required=True, type=Path, help="output HTML file")
    gen.add_argument("--watch", action="store_true", help="regenerate whenever an input changes")
    gen.add_argument(
        "--interval", type=int, default=500, metavar="MS", help="poll interval in milliseconds"
    )
    gen.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s"
    )
    if args.interval <= 0:
        parser.error("--interval must be positive")
    config = RunConfig(
        schema_path=args.schema,
        stylesheet_path=args.stylesheet,
        output_path=args.out,
        mode="watch" if args.watch else "once",
        poll_interval=args.interval / 1000.0,
    )
    if config.mode == "once":
        return run_once(config)
    try:
        return run_watch(config)
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    sys.exit(main())
